#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dmloc/coeff_ring.hpp"
#include "dmloc/local_elem.hpp"
#include "dmloc/twisted_poly.hpp"

namespace dmloc {

/// Roots of phi(a) in a finite extension k_m of the residue field.
struct TorsionResult {
  FieldRef field;                 // k_m
  unsigned extension_degree = 1;  // m
  TwistedPoly<FFElem> phi_a;      // phi(a) with coefficients mapped into k_m
  std::vector<FFElem> basis;      // F_p-basis of the torsion module
  std::vector<FFElem> points;     // all torsion points, in index order
};

/// Torsion of a Drinfeld module over a finite field given by phi_t.
///
/// Searches k, k_2, k_3, ... up to `ext_cap` (and the 2^16 field-size limit)
/// for the extension holding all q^{r deg a} roots of phi(a). Throws
/// ComputationError "not_prime_to_characteristic" when phi(a) is inseparable
/// and "extension_cap" when the roots are not found in time.
TorsionResult finite_torsion(const CoeffRing& ring, const TwistedPoly<FFElem>& phi_t, const CoeffElem& a,
                             unsigned ext_cap);

/// phi(a) for a Drinfeld module given by the image of t.
template <FieldElement T>
TwistedPoly<T> phi_of(const TwistedPoly<T>& phi_t, const CoeffElem& a, const std::function<T(const FFElem&)>& lift) {
  TwistedPoly<T> r(phi_t.zero_element(), phi_t.twist());
  for (size_t i = a.coeffs().size(); i-- > 0;) {
    r = r * phi_t + TwistedPoly<T>::constant(lift(a.coeffs()[i]), phi_t.twist());
  }
  return r;
}

/// Drinfeld F_q[t]-module over K = k((pi)), given by phi_t = phi(t) in K[T]
/// with T the q-Frobenius.
class DrinfeldModule {
 public:
  /// Throws ComputationError "bad_module" if phi_t has rank 0, a twist other
  /// than q, or coefficients over a different residue field.
  DrinfeldModule(CoeffRing ring, TwistedPoly<LocalElem> phi_t);

  const CoeffRing& ring() const { return ring_; }
  const TwistedPoly<LocalElem>& phi_t() const { return phi_t_; }
  unsigned rank() const { return static_cast<unsigned>(phi_t_.degree()); }
  uint64_t q() const { return ring_.q(); }
  const FiniteField* residue_field() const { return ring_.residue_field().get(); }

  /// iota(t): the constant coefficient of phi_t.
  const LocalElem& characteristic() const { return phi_t_.coeff(0); }
  /// All coefficients integral and the leading one a unit.
  bool good_reduction() const;
  bool finite_residual_characteristic() const;
  /// Monic prime of A pulled back from the maximal ideal: t when
  /// v(iota(t)) > 0, the minimal polynomial of the residue of iota(t) when
  /// v(iota(t)) = 0, and nullopt for infinite residual characteristic.
  std::optional<CoeffElem> residual_characteristic() const;
  /// True iff every coefficient is a residue field constant.
  bool has_constant_coefficients() const;

  TwistedPoly<LocalElem> action(const CoeffElem& a) const;
  /// phi(a)(x).
  LocalElem act(const CoeffElem& a, const LocalElem& x) const;

  /// Canonical local height max{0, -v(lambda)}. Requires good reduction
  /// (ComputationError "bad_reduction").
  unsigned height(const LocalElem& lambda) const;

  /// Reduction of phi_t modulo pi. Requires good reduction.
  TwistedPoly<FFElem> reduction() const;

  /// Torsion of the reduction: the a-torsion of D over K^ur maps bijectively
  /// onto it when a is prime to the residual characteristic.
  TorsionResult torsion_points(const CoeffElem& a, unsigned ext_cap = 12) const;

  /// The module psi with psi(t) g = g phi(t), obtained by right-dividing
  /// g phi(t) by g. Throws ComputationError "not_an_isogeny" when the
  /// remainder is nonzero or the intertwining check fails.
  DrinfeldModule isogeny_transport(const TwistedPoly<LocalElem>& g) const;

  /// Conjugation by T: coefficients raised to the q-th power.
  DrinfeldModule frobenius_twist() const;
  /// The module whose Frobenius twist is this one, if all coefficients are
  /// q-th powers.
  std::optional<DrinfeldModule> frobenius_descent() const;

 private:
  CoeffRing ring_;
  TwistedPoly<LocalElem> phi_t_;
};

}  // namespace dmloc
