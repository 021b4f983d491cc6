#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dmloc {

class FiniteField;
using FieldRef = std::shared_ptr<const FiniteField>;

/// Element of a finite field F_{p^n}, stored as the packed base-p coefficient
/// vector of its representative polynomial in the field generator g.
///
/// Elements keep a non-owning pointer to their field. Fields are interned by
/// FiniteField::make and live for the whole process, so the pointer never
/// dangles.
class FFElem {
 public:
  FFElem() = default;
  FFElem(const FiniteField* field, uint32_t index) : field_(field), index_(index) {}

  const FiniteField& field() const { return *field_; }
  const FiniteField* field_ptr() const { return field_; }
  uint32_t index() const { return index_; }

  bool is_zero() const { return index_ == 0; }
  bool is_one() const;
  FFElem zero_like() const { return FFElem(field_, 0); }
  FFElem one_like() const { return FFElem(field_, 1); }

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const;
  FFElem& operator+=(const FFElem& o) { return *this = *this + o; }
  FFElem& operator-=(const FFElem& o) { return *this = *this - o; }
  FFElem& operator*=(const FFElem& o) { return *this = *this * o; }

  /// Throws ComputationError("division_by_zero") on zero.
  FFElem inverse() const;
  FFElem pow(int64_t e) const;
  /// x -> x^p.
  FFElem frobenius() const;
  /// x -> x^{q0}; q0 must be a power of the characteristic.
  FFElem pow_q(uint64_t q0) const;
  /// Inverse of pow_q: the unique y with y^{q0} = x.
  FFElem root_q(uint64_t q0) const;

  friend bool operator==(const FFElem& a, const FFElem& b) {
    return a.index_ == b.index_ && a.field_ == b.field_;
  }

 private:
  const FiniteField* field_ = nullptr;
  uint32_t index_ = 0;
};

/// The finite field F_p[x]/(modulus) with p^n <= 2^16.
///
/// Multiplication goes through discrete log tables, addition in odd
/// characteristic through Zech logarithms.
class FiniteField {
 public:
  static constexpr uint32_t kMaxSize = 1u << 16;

  /// Field of size p^n with the default defining polynomial.
  static FieldRef make(uint32_t p, unsigned n);
  /// Field defined by a monic polynomial, coefficients low to high.
  /// Throws ComputationError if the polynomial is not irreducible or the field
  /// exceeds kMaxSize.
  static FieldRef make(uint32_t p, const std::vector<uint32_t>& modulus);

  uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  uint32_t size() const { return size_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FFElem zero() const { return FFElem(this, 0); }
  FFElem one() const { return FFElem(this, 1); }
  /// The class of x in F_p[x]/(modulus); for prime fields the root of the
  /// linear modulus.
  FFElem generator() const { return generator_; }
  FFElem primitive_element() const { return FFElem(this, exp_[1]); }
  FFElem element(uint32_t index) const;
  FFElem from_int(int64_t v) const;
  FFElem from_digits(const std::vector<uint32_t>& digits) const;
  std::vector<uint32_t> digits(const FFElem& x) const;
  std::vector<FFElem> elements() const;

  /// Absolute trace to F_p, returned as an integer in [0, p).
  uint32_t absolute_trace(const FFElem& x) const;
  /// True if F_{q0} is a subfield, i.e. q0 = p^e with e | n.
  bool has_subfield(uint64_t q0) const;
  /// Elements fixed by x -> x^{q0}, in index order.
  std::vector<FFElem> subfield(uint64_t q0) const;

  // Raw index arithmetic used by FFElem.
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, int64_t e) const;

  /// Exponent k with q0 = p^k; throws if q0 is not a power of p.
  unsigned log_p(uint64_t q0) const;

 private:
  FiniteField(uint32_t p, std::vector<uint32_t> modulus);
  uint32_t slow_mul(uint32_t a, uint32_t b) const;
  uint32_t slow_add(uint32_t a, uint32_t b) const;

  uint32_t p_;
  unsigned n_;
  uint32_t size_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;   // exp_[i] = w^i, length 2(size-1)
  std::vector<uint32_t> log_;   // log_[x] for x != 0
  std::vector<int32_t> zech_;   // log(1 + w^k), -1 when 1 + w^k = 0
  uint32_t minus_one_log_ = 0;
  FFElem generator_;
};

/// Rabin irreducibility test for a monic polynomial over F_p (low to high).
bool is_irreducible(uint32_t p, const std::vector<uint32_t>& poly);

/// Lexicographically smallest monic irreducible polynomial of degree n over
/// F_p, comparing coefficient vectors as base-p integers with the constant
/// term least significant.
std::vector<uint32_t> default_modulus(uint32_t p, unsigned n);

/// Field homomorphism F_{p^a} -> F_{p^b}, a | b, sending the generator of the
/// small field to a fixed root of its modulus in the large field.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldRef from, FieldRef to);

  const FieldRef& source() const { return from_; }
  const FieldRef& target() const { return to_; }
  FFElem operator()(const FFElem& x) const;

 private:
  FieldRef from_;
  FieldRef to_;
  std::vector<uint32_t> table_;
};

std::string to_string(const FFElem& x);

}  // namespace dmloc
