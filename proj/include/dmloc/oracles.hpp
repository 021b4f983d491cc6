#pragma once

#include <optional>
#include <vector>

#include "dmloc/drinfeld.hpp"
#include "dmloc/lattice.hpp"

// Brute-force cross-checks. Each one recomputes a quantity by a route that
// shares no code with the production path it is compared against.
namespace dmloc::oracle {

/// Truncated Laurent series sum_{e >= start} c_e pi^e, known modulo pi^prec.
struct Series {
  const FiniteField* field = nullptr;
  int start = 0;
  int prec = 0;
  std::vector<FFElem> coeffs;  // exponents start .. prec-1

  static Series expand(const LocalElem& x, int prec);
  FFElem at(int e) const;
  /// First nonzero exponent below prec, if any.
  std::optional<int> valuation() const;
  Series operator+(const Series& o) const;
  Series operator*(const Series& o) const;
  Series scaled(const FFElem& c) const;
  Series power_q(uint64_t q0) const;
};

/// v(x) from the series expansion; nullopt for 0.
std::optional<int> valuation_by_series(const LocalElem& x);

/// ||phi(a)(lambda)|| evaluated with series arithmetic, applying phi(t)
/// deg a times.
unsigned action_height_by_series(const DrinfeldModule& d, const CoeffElem& a, const LocalElem& lambda);

/// All roots of the additive polynomial in k by exhaustive search,
/// evaluating sum c_i x^{q0^i} with plain powers.
std::vector<FFElem> roots_by_search(const TwistedPoly<FFElem>& f, const FiniteField& k);

/// Smallest max(0, -v(w + wp(z))) over z supported on pi^{-1}, ..., pi^{-depth}
/// with coefficients in the field of w. w must be a Laurent polynomial.
int as_break_by_search(const LocalElem& w, int depth);

/// The unique u with u phi = (T - 1) psi and psi|ker = f, found by trying
/// every field element and left-dividing by T - 1.
std::optional<FFElem> as_factor_by_search(const TwistedPoly<FFElem>& phi, const std::vector<FFElem>& kernel,
                                          const std::vector<FFElem>& f_values);

/// Successive minima by enumerating combinations of the original generators
/// with coefficient degree <= degree and greedily picking independent ones.
/// Returns nullopt when the search does not reach full rank.
std::optional<std::vector<NormValue>> minima_by_search(const NormedLattice& lattice, int degree);

/// True iff N(sum a_i b_i) = max N(a_i b_i) for every tuple with deg a_i <=
/// degree, each term's norm computed separately.
bool orthogonality_certificate(const NormedLattice& lattice, const OrthogonalBasis& basis, int degree);

}  // namespace dmloc::oracle
