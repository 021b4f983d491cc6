#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dmloc/drinfeld.hpp"
#include "dmloc/lattice.hpp"

namespace dmloc {

enum class ASKind { Ramified, UnramifiedNontrivial, Trivial };

/// Class of the Artin-Schreier extension X^p - X = w of K = k((pi)).
struct ASClass {
  LocalElem representative;
  LocalElem reduced;  // v < 0 prime to p, or v >= 0
  ASKind kind = ASKind::Trivial;
  int break_value = 0;  // -v(reduced) when ramified
  unsigned steps = 0;   // wp-subtractions performed
};

/// Removes leading terms c pi^v with p | v < 0 by subtracting
/// wp(c^{1/p} pi^{v/p}), wp(z) = z^p - z, then classifies.
ASClass as_reduce(const LocalElem& w);

/// u phi = (T - 1) psi0 with T the q0-Frobenius.
template <class T>
struct ASFactor {
  T u;
  TwistedPoly<T> psi0;
  bool identity_holds = false;  // checked by twisted multiplication
  bool division_agrees = false;  // (T - 1) psi0 right-divided by phi gives u
};

/// Scaling factor of the Artin-Schreier homomorphism of phi composed with a
/// linear form f on ker phi. `kernel` is an F_{q0}-basis of ker phi
/// (q0 = phi.twist()), `f_values` its images in F_{q0}. Throws
/// ComputationError "inseparable", "not_kernel", "dependent_basis",
/// "not_surjective" or "bad_form".
ASFactor<FFElem> as_factor(const TwistedPoly<FFElem>& phi, const std::vector<FFElem>& kernel,
                           const std::vector<FFElem>& f_values);

/// The Moore-determinant formula alpha^{-1} (M(w)/M(w, v))^{q0} for a given
/// choice of hyperplane basis w and v with f(v) = 1.
FFElem as_scaling_factor(const TwistedPoly<FFElem>& phi, const std::vector<FFElem>& w, const FFElem& v);

struct KummerBreakReport {
  LocalElem lambda;
  unsigned height = 0;
  unsigned vanishing_level = 1;  // height + 1
  bool zero_map = false;         // height 0
  bool exact = false;            // p does not divide the height
  std::optional<unsigned> break_value;
};

/// Breaks of the Kummer pairing of lambda. Requires good reduction.
KummerBreakReport kummer_break(const DrinfeldModule& d, const LocalElem& lambda);

enum class FormStatus { Ramified, ZeroOnInertia, Unknown };
enum class KummerOutcome { SurjectiveOnInertia, ProperImageWitness, Inconclusive };

struct FormResult {
  std::vector<uint32_t> coefficients;  // f(b_j) for the torsion basis b_j
  FormStatus status = FormStatus::Unknown;
  int break_value = 0;
  std::optional<FFElem> u;  // exact scaling factor when available
};

struct KummerImageReport {
  KummerOutcome outcome = KummerOutcome::Inconclusive;
  unsigned extension_degree = 1;
  unsigned dimension = 0;  // dim_{F_p} D[a]
  bool zero_image = false;
  bool exact_factors = false;  // u_f computed exactly (constant coefficients)
  std::vector<FormResult> forms;
  std::optional<size_t> witness;  // index of a form vanishing on inertia
  int max_break = 0;
};

/// Tests whether the Kummer map of lambda at level a is onto D[a] on inertia,
/// one nonzero F_p-form at a time.
KummerImageReport kummer_image_at_level(const DrinfeldModule& d, const CoeffElem& a, const LocalElem& lambda,
                                        unsigned ext_cap = 12);

struct ConductorOptions {
  unsigned ext_cap = 12;
  size_t iteration_cap = 100000;
};

struct ConductorReport {
  unsigned m = 0;  // max reduced height after Frobenius descent
  std::optional<unsigned> exact;
  std::optional<std::pair<unsigned, unsigned>> interval;
  int64_t vol_log = 0;  // log_q vol of (Lambda, ||.||^{1/s})
  mpz_class volume_bound;
  bool tightened = false;
  bool bound_holds = false;
  unsigned r = 0, s = 0, n = 0;
  unsigned descent_steps = 0;
  std::vector<unsigned> heights;
  std::vector<KummerBreakReport> breaks;
  std::optional<CoeffElem> certificate_level;  // a used for the interval's lower end
};

/// Conductor of the Tate-uniformized module D/Lambda. The pair is first
/// normalized by Frobenius descent (an isogeny), then the lattice is reduced.
ConductorReport conductor(const DrinfeldModule& d, const std::vector<LocalElem>& generators,
                          const ConductorOptions& options = {});

/// Conductor of an abelian extension from its breaks: 0 if none, else max + 1.
unsigned torsion_field_conductor(const std::vector<int>& breaks);

}  // namespace dmloc
