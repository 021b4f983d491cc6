#pragma once

#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace dmloc {

/// Exact nonnegative real of the form x^{1/k} with x a positive rational, or
/// zero. Covers both q^e with rational e and Drinfeld period norms
/// height^{1/rank}; comparisons are carried out on integer powers.
class NormValue {
 public:
  NormValue() = default;  // zero
  static NormValue zero() { return NormValue(); }
  /// q^e.
  static NormValue from_log(const mpq_class& e, uint64_t q);
  /// x^{1/k}, x >= 0.
  static NormValue root(const mpq_class& x, unsigned k);

  bool is_zero() const { return zero_; }
  const mpq_class& radicand() const { return x_; }
  unsigned root_index() const { return k_; }

  /// N * q^j.
  NormValue scaled(uint64_t q, int64_t j) const;
  /// Smallest j with q^j >= N. N must be nonzero.
  int64_t ceil_log(uint64_t q) const;
  /// Largest j with q^j <= N. N must be nonzero.
  int64_t floor_log(uint64_t q) const;
  /// log_q N when it is rational, i.e. when x is a power of the characteristic.
  std::optional<mpq_class> exact_log(uint64_t q) const;
  /// True iff N / o is an integral power of q (both nonzero).
  bool same_class(const NormValue& o, uint64_t q) const;

  /// "0", "x" or "x^(1/k)".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const NormValue& a, const NormValue& b);
  friend bool operator==(const NormValue& a, const NormValue& b) { return (a <=> b) == 0; }

 private:
  void canonicalize();

  bool zero_ = true;
  mpq_class x_ = 0;
  unsigned k_ = 1;
};

/// Rational as "a" or "a/b".
std::string rational_string(const mpq_class& r);

}  // namespace dmloc
