#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "dmloc/coeff_ring.hpp"
#include "dmloc/drinfeld.hpp"
#include "dmloc/norm_value.hpp"
#include "dmloc/poly_matrix.hpp"

namespace dmloc {

/// Largest ball the counting route will enumerate.
inline constexpr unsigned long kMaxEnumeration = 1ul << 20;

enum class LatticeMode { Abstract, Drinfeld };

/// A lattice element: coordinates with respect to the lattice's generators,
/// its value in D(K) (Drinfeld mode only) and its norm.
struct LatticeVector {
  std::vector<CoeffElem> coords;
  std::optional<LocalElem> value;
  NormValue norm;
};

/// Normed A-lattice, A = F_q[t].
///
/// Abstract mode: the generators form an orthogonal basis with prescribed
/// norms, and N(sum a_i e_i) = max |a_i|_inf N_i.
/// Drinfeld mode: generators lambda_i in D(K) for a good-reduction module D of
/// rank s, with N(lambda) = ||lambda||^{1/s}, ||.|| the canonical local height.
class NormedLattice {
 public:
  static NormedLattice abstract(CoeffRing ring, std::vector<NormValue> norms);
  static NormedLattice drinfeld(std::shared_ptr<const DrinfeldModule> module, std::vector<LocalElem> generators);

  LatticeMode mode() const { return mode_; }
  size_t rank() const { return mode_ == LatticeMode::Abstract ? norms_.size() : generators_.size(); }
  const CoeffRing& ring() const { return ring_; }
  uint64_t q() const { return ring_.q(); }
  const DrinfeldModule* module() const { return module_.get(); }
  const std::vector<LocalElem>& generators() const { return generators_; }
  const std::vector<NormValue>& abstract_norms() const { return norms_; }

  /// ||x||^{1/s} for x in D(K).
  NormValue norm_of_value(const LocalElem& x) const;
  /// The i-th generator as a lattice vector.
  LatticeVector generator(size_t i) const;
  /// sum a_i v_i, with the norm computed from the resulting element.
  LatticeVector combine(const std::vector<LatticeVector>& vectors, const std::vector<CoeffElem>& coeffs) const;

 private:
  NormedLattice(CoeffRing ring) : ring_(std::move(ring)) {}
  NormValue abstract_norm(const std::vector<CoeffElem>& coords) const;

  LatticeMode mode_ = LatticeMode::Abstract;
  CoeffRing ring_;
  std::shared_ptr<const DrinfeldModule> module_;
  std::vector<LocalElem> generators_;
  std::vector<NormValue> norms_;
};

/// Basis with N(sum a_i b_i) = max |a_i| N(b_i), sorted by ascending norm.
struct OrthogonalBasis {
  std::vector<LatticeVector> vectors;
  std::vector<NormValue> norms() const;
  size_t rank() const { return vectors.size(); }
};

struct ReduceOptions {
  size_t iteration_cap = 100000;
};

/// Orthogonalizes the generators by cancelling leading terms inside each norm
/// class. Throws ComputationError "dependent_generators" when a nontrivial
/// combination vanishes, "not_discrete" when one has norm zero and
/// "iteration_cap" when the loop does not settle.
OrthogonalBasis reduce(const NormedLattice& lattice, const ReduceOptions& options = {});

/// mu_1 <= ... <= mu_n.
std::vector<NormValue> successive_minima(const OrthogonalBasis& basis);

/// Largest m with b q^m <= a (a, b nonzero).
int64_t floor_log_ratio(const NormValue& a, const NormValue& b, uint64_t q);

/// log_q vol_r of the lattice with this orthogonal basis:
/// sum_i (ceil(log_q(N_i / r)) - 1).
int64_t volume_log(const OrthogonalBasis& basis, uint64_t q, const NormValue& r);
inline int64_t volume_log(const OrthogonalBasis& basis, uint64_t q) {
  return volume_log(basis, q, NormValue::from_log(0, q));
}

struct VolumeReport {
  int64_t vol_log = 0;               // log_q vol_1
  int64_t euler_characteristic = 0;  // -vol_log
  int64_t by_orthogonal = 0;
  int64_t by_determinant = 0;
  std::optional<int64_t> by_counting;  // absent when the ball is too large to enumerate
  int counting_level = 0;  // i at which the count was taken
  bool agree = false;
};

struct DeterminantVolume {
  int64_t vol_log = 0;             // lattice volume recovered from the sublattice
  int64_t sublattice_vol_log = 0;  // vol of the sublattice = |det M| vol
  int det_degree = 0;              // log_q |det M|_inf
  int smith_index_log = 0;         // sum of invariant factor degrees
  bool index_consistent = false;
};

/// Volume via the determinant of a sublattice: rows of M give sublattice
/// generators in terms of the orthogonal basis. Throws ComputationError
/// "singular_matrix" when det M = 0.
DeterminantVolume volume_det(const OrthogonalBasis& basis, const CoeffRing& ring, const PolyMatrix& m);

enum class CountMode { Formula, Enumerate };

/// #{lambda : N(lambda) <= r q^i}.
mpz_class count_points(const NormedLattice& lattice, const OrthogonalBasis& basis, const NormValue& r, int64_t i,
                       CountMode mode = CountMode::Formula);

/// Smallest i from which the count equals c^{ni}/vol_r exactly.
int64_t stabilization_index(const OrthogonalBasis& basis, uint64_t q, const NormValue& r);

/// All three volume routes on one lattice.
VolumeReport volume_report(const NormedLattice& lattice, const OrthogonalBasis& basis);

struct GeneratorBound {
  int64_t bound_log = 0;  // log_q (vol_1 C^n)
  size_t ball_size = 0;   // #Lambda(bound)
  bool generates = false;
};

/// Checks that Lambda(vol C^n) generates, by enumerating the ball and testing
/// the Smith form of its coordinate rows. Throws ComputationError "min_norm"
/// when some nonzero vector has norm < 1 and "enumeration_cap" when the ball
/// exceeds kMaxEnumeration points.
GeneratorBound generator_bound(const NormedLattice& lattice, const OrthogonalBasis& basis);

/// Visits every combination sum a_j b_j with deg a_j <= degree_bounds[j]
/// (negative bound: a_j = 0). The callback receives the coefficients and the
/// combined vector.
void for_each_combination(const NormedLattice& lattice, const std::vector<LatticeVector>& basis,
                          const std::vector<int>& degree_bounds,
                          const std::function<void(const std::vector<CoeffElem>&, const LatticeVector&)>& fn);

}  // namespace dmloc
