#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dmloc/finite_field.hpp"
#include "dmloc/fpoly.hpp"

namespace dmloc {

/// Element of A = F_q[t]; coefficients live in F_q viewed inside the residue
/// field.
using CoeffElem = FPoly;

/// The coefficient ring A = F_q[t] with its infinite place.
///
/// Genus 0, the infinite place has degree 1, so |k_inf| = q and the generator
/// bound constant |kappa|^{3g + 2f - 1} equals q.
class CoeffRing {
 public:
  /// q must be the size of a subfield of `residue`.
  CoeffRing(FieldRef residue, uint64_t q);

  const FieldRef& residue_field() const { return residue_; }
  uint64_t q() const { return q_; }
  unsigned genus() const { return 0; }
  unsigned infinity_degree() const { return 1; }
  /// c = |k_inf|.
  uint64_t c() const { return q_; }
  /// The constant of the generator-norm bound.
  uint64_t bound_constant() const { return q_; }

  /// The elements of F_q inside the residue field, in index order.
  const std::vector<FFElem>& constants() const { return constants_; }
  bool is_constant(const FFElem& x) const;

  CoeffElem zero() const { return CoeffElem(residue_.get()); }
  CoeffElem one() const { return CoeffElem::constant(residue_->one()); }
  CoeffElem t() const { return CoeffElem::monomial(residue_->one(), 1); }
  CoeffElem t_power(size_t k) const { return CoeffElem::monomial(residue_->one(), k); }
  /// Throws ComputationError("not_in_ring") if a coefficient is outside F_q.
  void check_member(const CoeffElem& a) const;

  /// log_q |a|_inf = deg a; nullopt stands for -infinity (a = 0).
  std::optional<int> abs_infinity(const CoeffElem& a) const;

  /// All q^{d+1} elements of degree <= d (d = -1 gives only 0), in a fixed
  /// order: the base-q digits of the enumeration index are the coefficients.
  std::vector<CoeffElem> enumerate_by_degree(int d) const;
  void for_each_of_degree_at_most(int d, const std::function<void(const CoeffElem&)>& fn) const;

  /// Monic irreducible polynomial over F_q with root x (x in the residue field).
  CoeffElem minimal_polynomial(const FFElem& x) const;

 private:
  FieldRef residue_;
  uint64_t q_;
  std::vector<FFElem> constants_;
};

}  // namespace dmloc
