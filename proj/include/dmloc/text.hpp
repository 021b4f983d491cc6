#pragma once

// Text syntax for field elements, Laurent functions and twisted polynomials.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | identifier | '(' expr ')'
//
// Identifiers: `g` (residue field generator), `pi` (uniformizer), `t`
// (coefficient ring variable), `T` (Frobenius), `x` (modulus variable).
// Which identifiers are accepted depends on the entry point. Integers are
// reduced modulo the characteristic.
//
// Printers emit a canonical form that the parsers read back to the same value
// and that prints again to the same string:
//   residue field:   g^2+2*g+1          (descending, no spaces; plain integers when n = 1)
//   local elements:  (g+1)*pi^-2 + pi   (ascending powers of pi; "(N)/(D)" for fractions)
//   coefficients:    t^2 + g*t + 1      (descending powers of t)
//   twisted:         a0 + a1*T + a2*T^2

#include <string>
#include <string_view>
#include <vector>

#include "dmloc/finite_field.hpp"
#include "dmloc/fpoly.hpp"
#include "dmloc/local_elem.hpp"
#include "dmloc/twisted_poly.hpp"

namespace dmloc {

std::string to_string(const FFElem& x);
std::string to_string(const LocalElem& x);
/// Polynomial with descending powers of `var`.
std::string to_string(const FPoly& a, std::string_view var);

namespace detail {
bool needs_parentheses(const std::string& s);
}

template <FieldElement T>
std::string to_string(const TwistedPoly<T>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    const T& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    std::string term;
    const std::string s = to_string(c);
    if (i == 0) {
      term = s;
    } else {
      const std::string mono = i == 1 ? "T" : "T^" + std::to_string(i);
      if (c == c.one_like()) {
        term = mono;
      } else if (detail::needs_parentheses(s)) {
        term = "(" + s + ")*" + mono;
      } else {
        term = s + "*" + mono;
      }
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

FFElem parse_residue(const FiniteField& field, std::string_view text);
LocalElem parse_local(const FiniteField& field, std::string_view text);
/// Polynomial in `t` with residue field coefficients.
FPoly parse_coeff_poly(const FiniteField& field, std::string_view text);
TwistedPoly<LocalElem> parse_twisted(const FiniteField& field, uint64_t q0, std::string_view text);
TwistedPoly<FFElem> parse_twisted_residue(const FiniteField& field, uint64_t q0, std::string_view text);
/// Monic modulus in `x` over F_p, coefficients low to high.
std::vector<uint32_t> parse_modulus(uint32_t p, std::string_view text);

}  // namespace dmloc
