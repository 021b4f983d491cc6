#pragma once

#include <utility>
#include <vector>

#include "dmloc/error.hpp"
#include "dmloc/linear_algebra.hpp"

namespace dmloc {

/// Polynomial a_0 + a_1 T + ... + a_n T^n in the q0-Frobenius T, multiplied
/// subject to T a = a^{q0} T. Evaluation sends T to x -> x^{q0}, so products
/// correspond to composition of the induced additive maps.
template <FieldElement T>
class TwistedPoly {
 public:
  TwistedPoly(const T& zero, uint64_t q0) : zero_(zero.zero_like()), q0_(q0) {}
  TwistedPoly(std::vector<T> coeffs, uint64_t q0) : zero_(coeffs.at(0).zero_like()), c_(std::move(coeffs)), q0_(q0) {
    trim();
  }

  static TwistedPoly constant(const T& c, uint64_t q0) { return TwistedPoly(std::vector<T>{c}, q0); }
  /// c T^k.
  static TwistedPoly monomial(const T& c, size_t k, uint64_t q0) {
    std::vector<T> v(k + 1, c.zero_like());
    v[k] = c;
    return TwistedPoly(std::move(v), q0);
  }

  uint64_t twist() const { return q0_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const T& leading() const { return c_.empty() ? zero_ : c_.back(); }
  const T& zero_element() const { return zero_; }

  TwistedPoly operator+(const TwistedPoly& o) const {
    check_twist(o);
    std::vector<T> r(std::max(c_.size(), o.c_.size()), zero_);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return from_vector(std::move(r));
  }

  TwistedPoly operator-() const {
    std::vector<T> r = c_;
    for (auto& c : r) c = -c;
    return from_vector(std::move(r));
  }

  TwistedPoly operator-(const TwistedPoly& o) const { return *this + (-o); }

  TwistedPoly operator*(const TwistedPoly& o) const {
    check_twist(o);
    if (is_zero() || o.is_zero()) return TwistedPoly(zero_, q0_);
    std::vector<T> r(c_.size() + o.c_.size() - 1, zero_);
    std::vector<T> twisted = o.c_;  // b_j^{q0^i} for the current i
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i > 0) {
        for (auto& b : twisted) b = b.pow_q(q0_);
      }
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < twisted.size(); ++j) {
        if (!twisted[j].is_zero()) r[i + j] = r[i + j] + c_[i] * twisted[j];
      }
    }
    return from_vector(std::move(r));
  }

  /// Left multiplication by a scalar.
  TwistedPoly scale(const T& c) const {
    std::vector<T> r = c_;
    for (auto& x : r) x = c * x;
    return from_vector(std::move(r));
  }

  T evaluate(const T& x) const {
    T acc = x.zero_like();
    T power = x;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i > 0) power = power.pow_q(q0_);
      if (!c_[i].is_zero()) acc = acc + c_[i] * power;
    }
    return acc;
  }

  /// Right Euclidean division: *this = quotient * d + remainder with
  /// deg remainder < deg d. Throws ComputationError on d = 0.
  std::pair<TwistedPoly, TwistedPoly> right_divide(const TwistedPoly& d) const {
    check_twist(d);
    if (d.is_zero()) throw ComputationError("division_by_zero", "right division by the zero twisted polynomial");
    TwistedPoly quotient(zero_, q0_);
    TwistedPoly rem = *this;
    const size_t dd = static_cast<size_t>(d.degree());
    while (rem.degree() >= d.degree()) {
      const size_t k = static_cast<size_t>(rem.degree()) - dd;
      T lead = d.leading();
      for (size_t i = 0; i < k; ++i) lead = lead.pow_q(q0_);
      const T c = rem.leading() * lead.inverse();
      const TwistedPoly term = monomial(c, k, q0_);
      quotient = quotient + term;
      std::vector<T> sub = (term * d).c_;
      // Cancel the top coefficient exactly to guarantee progress.
      std::vector<T> r = rem.c_;
      for (size_t j = 0; j < sub.size(); ++j) r[j] = r[j] - sub[j];
      r.back() = zero_;
      rem = from_vector(std::move(r));
    }
    return {quotient, rem};
  }

  /// Coefficients raised to the q0-th power: T f T^{-1}.
  TwistedPoly frobenius_twist() const {
    std::vector<T> r = c_;
    for (auto& x : r) x = x.pow_q(q0_);
    return from_vector(std::move(r));
  }

  /// The same additive map written in a finer Frobenius T' = (x -> x^{new_q0}),
  /// where new_q0^ratio = q0 and T = T'^ratio.
  TwistedPoly refine(uint64_t new_q0) const {
    size_t ratio = 0;
    for (uint64_t b = 1; b < q0_; b *= new_q0) ++ratio;
    uint64_t check = 1;
    for (size_t i = 0; i < ratio; ++i) check *= new_q0;
    if (check != q0_) throw ComputationError("twist_mismatch", "twist bases are incompatible");
    if (is_zero()) return TwistedPoly(zero_, new_q0);
    std::vector<T> r((c_.size() - 1) * ratio + 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i) r[i * ratio] = c_[i];
    return TwistedPoly(std::move(r), new_q0);
  }

  friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) {
    return a.q0_ == b.q0_ && a.c_ == b.c_;
  }

 private:
  TwistedPoly from_vector(std::vector<T> r) const {
    TwistedPoly out(zero_, q0_);
    out.c_ = std::move(r);
    out.trim();
    return out;
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void check_twist(const TwistedPoly& o) const {
    if (o.q0_ != q0_) throw ComputationError("twist_mismatch", "twisted polynomials have different twist bases");
  }

  T zero_;
  std::vector<T> c_;
  uint64_t q0_;
};

}  // namespace dmloc
