#pragma once

#include <utility>
#include <vector>

#include "dmloc/finite_field.hpp"

namespace dmloc {

/// Dense univariate polynomial over a finite field, coefficients low to high,
/// never carrying zero leading coefficients. The zero polynomial is empty and
/// has degree -1.
class FPoly {
 public:
  explicit FPoly(const FiniteField* field) : field_(field) {}
  FPoly(const FiniteField* field, std::vector<FFElem> coeffs);
  static FPoly constant(const FFElem& c);
  static FPoly monomial(const FFElem& c, size_t degree);

  const FiniteField* field() const { return field_; }
  const std::vector<FFElem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  FFElem coeff(size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
  FFElem leading() const { return c_.empty() ? field_->zero() : c_.back(); }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int order() const;
  size_t term_count() const;

  FPoly operator+(const FPoly& o) const;
  FPoly operator-(const FPoly& o) const;
  FPoly operator-() const;
  FPoly operator*(const FPoly& o) const;
  FPoly operator*(const FFElem& c) const;
  FPoly& operator+=(const FPoly& o) { return *this = *this + o; }
  FPoly& operator*=(const FPoly& o) { return *this = *this * o; }

  /// Euclidean division; throws ComputationError on a zero divisor.
  std::pair<FPoly, FPoly> divmod(const FPoly& d) const;
  FPoly monic() const;
  FPoly shift_up(size_t k) const;
  /// Drops the first k coefficients (division by x^k; they must be zero).
  FPoly shift_down(size_t k) const;
  FFElem evaluate(const FFElem& x) const;
  /// Coefficientwise x -> x^{q0} combined with X -> X^{q0}: the q0-th power.
  FPoly pow_q(uint64_t q0) const;
  /// True iff only exponents divisible by q0 occur.
  bool is_in_subring(uint64_t q0) const;
  /// q0-th root of a polynomial for which is_in_subring(q0) holds.
  FPoly root_q(uint64_t q0) const;

  friend bool operator==(const FPoly& a, const FPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();
  const FiniteField* field_;
  std::vector<FFElem> c_;
};

FPoly gcd(FPoly a, FPoly b);

}  // namespace dmloc
