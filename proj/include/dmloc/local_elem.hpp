#pragma once

#include <climits>
#include <optional>

#include "dmloc/fpoly.hpp"

namespace dmloc {

/// Valuation value: an integer or +infinity (for zero).
struct Valuation {
  static constexpr int kInfinity = INT_MAX;
  int value = kInfinity;

  bool is_infinite() const { return value == kInfinity; }
  friend bool operator==(Valuation a, Valuation b) { return a.value == b.value; }
  friend auto operator<=>(Valuation a, Valuation b) { return a.value <=> b.value; }
};

/// Element of the local field k((pi)) restricted to rational functions in pi.
///
/// Canonical form: x = pi^shift * num / den with num(0) != 0, den monic,
/// den(0) != 0 and gcd(num, den) = 1. Zero has an empty numerator. Equality is
/// structural because the form is unique.
class LocalElem {
 public:
  explicit LocalElem(const FiniteField* field);
  /// Constant from the residue field.
  explicit LocalElem(const FFElem& c);
  static LocalElem pi(const FiniteField* field);
  static LocalElem pi_power(const FiniteField* field, int k);
  /// Builds pi^shift * num / den and normalizes. Throws on den = 0.
  static LocalElem fraction(const FPoly& num, const FPoly& den, int shift = 0);

  const FiniteField* field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent_polynomial() const { return den_.is_one(); }

  LocalElem zero_like() const { return LocalElem(field()); }
  LocalElem one_like() const { return LocalElem(field()->one()); }

  Valuation valuation() const;
  int shift() const { return shift_; }
  const FPoly& numerator() const { return num_; }
  const FPoly& denominator() const { return den_; }
  /// Leading coefficient: the unit part num(0)/den(0). Zero for zero.
  FFElem leading_coefficient() const;
  /// Image in the residue field; requires valuation >= 0.
  FFElem residue() const;

  LocalElem operator+(const LocalElem& o) const;
  LocalElem operator-(const LocalElem& o) const;
  LocalElem operator-() const;
  LocalElem operator*(const LocalElem& o) const;
  LocalElem operator/(const LocalElem& o) const;
  LocalElem& operator+=(const LocalElem& o) { return *this = *this + o; }
  LocalElem& operator-=(const LocalElem& o) { return *this = *this - o; }
  LocalElem& operator*=(const LocalElem& o) { return *this = *this * o; }

  /// Throws ComputationError("division_by_zero").
  LocalElem inverse() const;
  LocalElem pow(int64_t e) const;
  /// x -> x^p.
  LocalElem frobenius() const;
  /// x -> x^{q0}, q0 a power of p.
  LocalElem pow_q(uint64_t q0) const;
  /// True iff x is a q0-th power in the rational function field.
  bool is_qth_power(uint64_t q0) const;
  LocalElem root_q(uint64_t q0) const;
  /// Applies a residue field embedding coefficientwise.
  LocalElem map_field(const FieldEmbedding& emb) const;

  friend bool operator==(const LocalElem& a, const LocalElem& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  LocalElem(FPoly num, FPoly den, int shift, bool normalized);
  void normalize();

  FPoly num_;
  FPoly den_;
  int shift_ = 0;
};

}  // namespace dmloc
