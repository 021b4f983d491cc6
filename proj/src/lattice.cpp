#include "dmloc/lattice.hpp"

#include <algorithm>

#include "dmloc/error.hpp"

namespace dmloc {

namespace {

mpz_class power(uint64_t q, int64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(e));
  return r;
}

CoeffElem poly_from_digits(const CoeffRing& ring, const std::vector<size_t>& digits, size_t begin, size_t len) {
  std::vector<FFElem> c;
  for (size_t i = 0; i < len; ++i) c.push_back(ring.constants()[digits[begin + i]]);
  return CoeffElem(ring.residue_field().get(), std::move(c));
}

}  // namespace

NormedLattice NormedLattice::abstract(CoeffRing ring, std::vector<NormValue> norms) {
  for (const auto& n : norms) {
    if (n.is_zero()) throw ComputationError("not_discrete", "an abstract basis vector has norm zero");
  }
  NormedLattice l(std::move(ring));
  l.mode_ = LatticeMode::Abstract;
  l.norms_ = std::move(norms);
  return l;
}

NormedLattice NormedLattice::drinfeld(std::shared_ptr<const DrinfeldModule> module, std::vector<LocalElem> generators) {
  if (!module) throw ComputationError("bad_module", "missing Drinfeld module");
  if (!module->good_reduction()) throw ComputationError("bad_reduction", "period lattices need good reduction");
  NormedLattice l(module->ring());
  l.mode_ = LatticeMode::Drinfeld;
  l.module_ = std::move(module);
  l.generators_ = std::move(generators);
  return l;
}

NormValue NormedLattice::norm_of_value(const LocalElem& x) const {
  if (!module_) throw ComputationError("bad_mode", "value norms exist only in Drinfeld mode");
  return NormValue::root(mpq_class(module_->height(x)), module_->rank());
}

NormValue NormedLattice::abstract_norm(const std::vector<CoeffElem>& coords) const {
  NormValue best;
  for (size_t j = 0; j < coords.size(); ++j) {
    if (coords[j].is_zero()) continue;
    const NormValue n = norms_[j].scaled(q(), coords[j].degree());
    if (n > best) best = n;
  }
  return best;
}

LatticeVector NormedLattice::generator(size_t i) const {
  LatticeVector v;
  v.coords.assign(rank(), ring_.zero());
  v.coords.at(i) = ring_.one();
  if (mode_ == LatticeMode::Drinfeld) {
    v.value = generators_[i];
    v.norm = norm_of_value(generators_[i]);
  } else {
    v.norm = norms_[i];
  }
  return v;
}

LatticeVector NormedLattice::combine(const std::vector<LatticeVector>& vectors,
                                     const std::vector<CoeffElem>& coeffs) const {
  if (vectors.size() != coeffs.size()) throw ComputationError("dimension_mismatch", "one coefficient per vector");
  LatticeVector out;
  out.coords.assign(rank(), ring_.zero());
  if (mode_ == LatticeMode::Drinfeld) out.value = LocalElem(ring_.residue_field().get());
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (size_t j = 0; j < rank(); ++j) out.coords[j] += coeffs[i] * vectors[i].coords[j];
    if (mode_ == LatticeMode::Drinfeld) *out.value += module_->act(coeffs[i], *vectors[i].value);
  }
  out.norm = mode_ == LatticeMode::Drinfeld ? norm_of_value(*out.value) : abstract_norm(out.coords);
  return out;
}

std::vector<NormValue> OrthogonalBasis::norms() const {
  std::vector<NormValue> n;
  for (const auto& v : vectors) n.push_back(v.norm);
  return n;
}

OrthogonalBasis reduce(const NormedLattice& lattice, const ReduceOptions& options) {
  const size_t n = lattice.rank();
  const uint64_t q = lattice.q();
  const CoeffRing& ring = lattice.ring();
  std::vector<LatticeVector> b;
  for (size_t i = 0; i < n; ++i) {
    b.push_back(lattice.generator(i));
    if (lattice.mode() == LatticeMode::Drinfeld && b.back().value->is_zero()) {
      throw ComputationError("dependent_generators", "a generator is zero");
    }
    if (b.back().norm.is_zero()) throw ComputationError("not_discrete", "a nonzero generator has norm zero");
  }

  if (lattice.mode() == LatticeMode::Drinfeld) {
    size_t iterations = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      if (++iterations > options.iteration_cap) {
        throw ComputationError("iteration_cap", "reduction did not settle; the lattice may not be discrete");
      }
      std::vector<bool> used(n, false);
      for (size_t i0 = 0; i0 < n && !changed; ++i0) {
        if (used[i0]) continue;
        std::vector<size_t> cls;
        for (size_t j = i0; j < n; ++j) {
          if (!used[j] && b[j].norm.same_class(b[i0].norm, q)) {
            cls.push_back(j);
            used[j] = true;
          }
        }
        if (cls.size() < 2) continue;
        const size_t m = cls.size();
        // Nonzero F_q-vectors over the class with at least two nonzero entries.
        std::vector<size_t> digit(m, 0);
        const size_t qq = ring.constants().size();
        while (!changed) {
          size_t pos = 0;
          while (pos < m && ++digit[pos] == qq) digit[pos++] = 0;
          if (pos == m) break;
          size_t support = 0;
          NormValue level;
          for (size_t k = 0; k < m; ++k) {
            if (digit[k] == 0) continue;
            ++support;
            if (b[cls[k]].norm > level) level = b[cls[k]].norm;
          }
          if (support < 2) continue;
          std::vector<LatticeVector> parts;
          std::vector<CoeffElem> coeffs;
          size_t victim = 0;
          bool have_victim = false;
          for (size_t k = 0; k < m; ++k) {
            if (digit[k] == 0) continue;
            const LatticeVector& v = b[cls[k]];
            const int64_t d = floor_log_ratio(level, v.norm, q);
            parts.push_back(v);
            coeffs.push_back(CoeffElem::monomial(ring.constants()[digit[k]], static_cast<size_t>(d)));
            if (d == 0) {
              victim = cls[k];
              have_victim = true;
            }
          }
          LatticeVector w = lattice.combine(parts, coeffs);
          if (w.value->is_zero()) {
            throw ComputationError("dependent_generators", "a nontrivial combination of the generators vanishes");
          }
          if (w.norm.is_zero()) throw ComputationError("not_discrete", "a nonzero lattice element has norm zero");
          if (w.norm < level && have_victim) {
            b[victim] = std::move(w);
            changed = true;
          }
        }
      }
    }
  }

  std::stable_sort(b.begin(), b.end(), [](const LatticeVector& x, const LatticeVector& y) { return x.norm < y.norm; });
  return OrthogonalBasis{std::move(b)};
}

std::vector<NormValue> successive_minima(const OrthogonalBasis& basis) { return basis.norms(); }

int64_t floor_log_ratio(const NormValue& a, const NormValue& b, uint64_t q) {
  if (a.is_zero() || b.is_zero()) throw ComputationError("zero_norm", "ratio of zero norms");
  int64_t m = a.floor_log(q) - b.floor_log(q) - 1;
  while (b.scaled(q, m) > a) --m;
  while (b.scaled(q, m + 1) <= a) ++m;
  return m;
}

int64_t volume_log(const OrthogonalBasis& basis, uint64_t q, const NormValue& r) {
  int64_t s = 0;
  for (const auto& v : basis.vectors) {
    const int64_t f = floor_log_ratio(v.norm, r, q);
    const bool exact = r.scaled(q, f) == v.norm;
    s += (exact ? f : f + 1) - 1;
  }
  return s;
}

int64_t stabilization_index(const OrthogonalBasis& basis, uint64_t q, const NormValue& r) {
  int64_t i = 0;
  bool first = true;
  for (const auto& v : basis.vectors) {
    // Smallest i with r q^{i+1} >= N, i.e. ceil(log(N/r)) - 1.
    const int64_t f = floor_log_ratio(v.norm, r, q);
    const int64_t need = (r.scaled(q, f) == v.norm ? f : f + 1) - 1;
    if (first || need > i) i = need;
    first = false;
  }
  return first ? 0 : i;
}

mpz_class count_points(const NormedLattice& lattice, const OrthogonalBasis& basis, const NormValue& r, int64_t i,
                       CountMode mode) {
  const uint64_t q = lattice.q();
  const NormValue radius = r.scaled(q, i);
  std::vector<int> bounds;
  int64_t exponent = 0;
  for (const auto& v : basis.vectors) {
    const int64_t d = radius.is_zero() ? -1 : floor_log_ratio(radius, v.norm, q);
    if (d >= 0) exponent += d + 1;
    bounds.push_back(d < 0 ? -1 : static_cast<int>(d));
  }
  if (mode == CountMode::Formula) return power(q, exponent);

  mpz_class count = 0;
  for_each_combination(lattice, basis.vectors, bounds, [&](const std::vector<CoeffElem>&, const LatticeVector& w) {
    if (w.norm <= radius) ++count;
  });
  return count;
}

void for_each_combination(const NormedLattice& lattice, const std::vector<LatticeVector>& basis,
                          const std::vector<int>& degree_bounds,
                          const std::function<void(const std::vector<CoeffElem>&, const LatticeVector&)>& fn) {
  if (basis.size() != degree_bounds.size()) throw ComputationError("dimension_mismatch", "one bound per vector");
  const CoeffRing& ring = lattice.ring();
  const size_t qq = ring.constants().size();
  const bool drinfeld = lattice.mode() == LatticeMode::Drinfeld;

  std::vector<size_t> offset, len;
  size_t total = 0;
  for (int d : degree_bounds) {
    offset.push_back(total);
    len.push_back(d < 0 ? 0 : static_cast<size_t>(d) + 1);
    total += len.back();
  }
  // phi(t^k)(b_j).
  std::vector<std::vector<LocalElem>> table(basis.size());
  if (drinfeld) {
    for (size_t j = 0; j < basis.size(); ++j) {
      LocalElem x = *basis[j].value;
      for (size_t k = 0; k < len[j]; ++k) {
        table[j].push_back(x);
        if (k + 1 < len[j]) x = lattice.module()->phi_t().evaluate(x);
      }
    }
  }

  std::vector<size_t> digits(total, 0);
  std::vector<CoeffElem> coeffs(basis.size(), ring.zero());
  while (true) {
    for (size_t j = 0; j < basis.size(); ++j) coeffs[j] = poly_from_digits(ring, digits, offset[j], len[j]);
    LatticeVector w;
    w.coords.assign(lattice.rank(), ring.zero());
    for (size_t j = 0; j < basis.size(); ++j) {
      if (coeffs[j].is_zero()) continue;
      for (size_t c = 0; c < lattice.rank(); ++c) w.coords[c] += coeffs[j] * basis[j].coords[c];
    }
    if (drinfeld) {
      LocalElem x(ring.residue_field().get());
      for (size_t j = 0; j < basis.size(); ++j) {
        for (size_t k = 0; k < len[j]; ++k) {
          const size_t dg = digits[offset[j] + k];
          if (dg != 0) x += LocalElem(ring.constants()[dg]) * table[j][k];
        }
      }
      w.norm = lattice.norm_of_value(x);
      w.value = std::move(x);
    } else {
      NormValue best;
      for (size_t j = 0; j < basis.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        const NormValue nv = basis[j].norm.scaled(lattice.q(), coeffs[j].degree());
        if (nv > best) best = nv;
      }
      w.norm = best;
    }
    fn(coeffs, w);

    size_t pos = 0;
    while (pos < total && ++digits[pos] == qq) digits[pos++] = 0;
    if (pos == total) break;
  }
}

DeterminantVolume volume_det(const OrthogonalBasis& basis, const CoeffRing& ring, const PolyMatrix& m) {
  const size_t n = basis.rank();
  if (m.size() != n) throw ComputationError("dimension_mismatch", "sublattice matrix must be n x n");
  for (const auto& row : m) {
    if (row.size() != n) throw ComputationError("dimension_mismatch", "sublattice matrix must be n x n");
    for (const auto& a : row) ring.check_member(a);
  }
  const CoeffElem det = poly_determinant(ring, m);
  if (det.is_zero()) throw ComputationError("singular_matrix", "the sublattice matrix is singular");
  DeterminantVolume out;
  out.det_degree = det.degree();
  for (const auto& d : smith_invariant_factors(ring, m)) out.smith_index_log += d.degree();
  out.index_consistent = out.smith_index_log == out.det_degree;

  // Reference vectors v_i = t^{-ceil(log N_i)} b_i span the unit cell of
  // covolume q^{-n}; the wedge ratio of the sublattice basis against them is
  // q^{deg det M + sum ceil(log N_i)}.
  int64_t ceil_sum = 0;
  for (const auto& v : basis.vectors) ceil_sum += v.norm.ceil_log(ring.q());
  out.sublattice_vol_log = -static_cast<int64_t>(n) + out.det_degree + ceil_sum;
  out.vol_log = out.sublattice_vol_log - out.smith_index_log;
  return out;
}

VolumeReport volume_report(const NormedLattice& lattice, const OrthogonalBasis& basis) {
  const uint64_t q = lattice.q();
  const NormValue one = NormValue::from_log(0, q);
  const size_t n = basis.rank();
  VolumeReport r;
  r.by_orthogonal = volume_log(basis, q, one);

  PolyMatrix id(n, std::vector<CoeffElem>(n, lattice.ring().zero()));
  for (size_t i = 0; i < n; ++i) id[i][i] = lattice.ring().one();
  r.by_determinant = volume_det(basis, lattice.ring(), id).vol_log;

  const int64_t level = stabilization_index(basis, q, one);
  r.counting_level = static_cast<int>(level);
  if (count_points(lattice, basis, one, level) > kMaxEnumeration) {
    r.agree = r.by_orthogonal == r.by_determinant;
    r.vol_log = r.by_orthogonal;
    r.euler_characteristic = -r.vol_log;
    return r;
  }
  const mpz_class count = count_points(lattice, basis, one, level, CountMode::Enumerate);
  // count = q^{n i} / vol.
  int64_t k = 0;
  mpz_class c = count;
  while (c > 1 && mpz_divisible_ui_p(c.get_mpz_t(), q)) {
    c /= static_cast<unsigned long>(q);
    ++k;
  }
  if (c == 1) r.by_counting = static_cast<int64_t>(n) * level - k;
  r.agree = r.by_orthogonal == r.by_determinant && r.by_counting == r.by_orthogonal;
  r.vol_log = r.by_orthogonal;
  r.euler_characteristic = -r.vol_log;
  return r;
}

GeneratorBound generator_bound(const NormedLattice& lattice, const OrthogonalBasis& basis) {
  const uint64_t q = lattice.q();
  const NormValue one = NormValue::from_log(0, q);
  for (const auto& v : basis.vectors) {
    if (v.norm < one) {
      throw ComputationError("min_norm", "a nonzero vector has norm < 1; rescale the lattice (abstract mode: shift log-norms)");
    }
  }
  const size_t n = basis.rank();
  GeneratorBound out;
  out.bound_log = volume_log(basis, q, one) + static_cast<int64_t>(n);
  if (n == 0) {
    out.ball_size = 1;
    out.generates = true;
    return out;
  }
  const NormValue bound = NormValue::from_log(out.bound_log, q);
  if (count_points(lattice, basis, bound, 0) > kMaxEnumeration) {
    throw ComputationError("enumeration_cap", "the ball Lambda(vol C^n) is too large to enumerate");
  }
  std::vector<int> bounds;
  for (const auto& v : basis.vectors) {
    const int64_t d = floor_log_ratio(bound, v.norm, q);
    bounds.push_back(d < 0 ? -1 : static_cast<int>(d));
  }
  PolyMatrix rows;
  for_each_combination(lattice, basis.vectors, bounds, [&](const std::vector<CoeffElem>& a, const LatticeVector& w) {
    if (w.norm > bound) return;
    ++out.ball_size;
    bool zero = true;
    for (const auto& x : a) zero = zero && x.is_zero();
    if (!zero) rows.push_back(a);
  });
  out.generates = !rows.empty() && rows_generate_free_module(lattice.ring(), rows, n);
  return out;
}

}  // namespace dmloc
