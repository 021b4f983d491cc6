#include "dmloc/oracles.hpp"

#include <algorithm>

#include "dmloc/error.hpp"
#include "dmloc/poly_matrix.hpp"

namespace dmloc::oracle {

Series Series::expand(const LocalElem& x, int prec) {
  Series s;
  s.field = x.field();
  s.prec = prec;
  if (x.is_zero()) {
    s.start = prec;
    return s;
  }
  s.start = std::min(x.shift(), prec);
  const int len = prec - x.shift();
  if (len <= 0) return s;
  const FPoly& num = x.numerator();
  const FPoly& den = x.denominator();
  const FFElem d0inv = den.coeff(0).inverse();
  std::vector<FFElem> inv(static_cast<size_t>(len), s.field->zero());
  inv[0] = d0inv;
  for (int i = 1; i < len; ++i) {
    FFElem acc = s.field->zero();
    for (int j = 1; j <= i && j <= den.degree(); ++j) acc += den.coeff(static_cast<size_t>(j)) * inv[static_cast<size_t>(i - j)];
    inv[static_cast<size_t>(i)] = -acc * d0inv;
  }
  s.coeffs.assign(static_cast<size_t>(len), s.field->zero());
  for (int i = 0; i < len; ++i) {
    FFElem acc = s.field->zero();
    for (int j = 0; j <= i && j <= num.degree(); ++j) acc += num.coeff(static_cast<size_t>(j)) * inv[static_cast<size_t>(i - j)];
    s.coeffs[static_cast<size_t>(i)] = acc;
  }
  return s;
}

FFElem Series::at(int e) const {
  if (e >= prec) throw ComputationError("precision", "series coefficient beyond precision");
  if (e < start) return field->zero();
  return coeffs[static_cast<size_t>(e - start)];
}

std::optional<int> Series::valuation() const {
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) return start + static_cast<int>(i);
  }
  return std::nullopt;
}

Series Series::operator+(const Series& o) const {
  Series r;
  r.field = field;
  r.prec = std::min(prec, o.prec);
  r.start = std::min(std::min(start, o.start), r.prec);
  for (int e = r.start; e < r.prec; ++e) r.coeffs.push_back(at(e) + o.at(e));
  return r;
}

Series Series::operator*(const Series& o) const {
  const int va = valuation().value_or(prec);
  const int vb = o.valuation().value_or(o.prec);
  Series r;
  r.field = field;
  r.prec = std::min(prec + vb, o.prec + va);
  r.start = std::min(va + vb, r.prec);
  for (int e = r.start; e < r.prec; ++e) {
    FFElem acc = field->zero();
    for (int i = va; i <= e - vb; ++i) acc += at(i) * o.at(e - i);
    r.coeffs.push_back(acc);
  }
  return r;
}

Series Series::scaled(const FFElem& c) const {
  Series r = *this;
  for (auto& x : r.coeffs) x = x * c;
  return r;
}

Series Series::power_q(uint64_t q0) const {
  Series r;
  r.field = field;
  const int k = static_cast<int>(q0);
  r.start = start * k;
  r.prec = prec * k;
  r.coeffs.assign(static_cast<size_t>(r.prec - r.start), field->zero());
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i * q0] = coeffs[i].pow_q(q0);
  return r;
}

std::optional<int> valuation_by_series(const LocalElem& x) {
  if (x.is_zero()) return std::nullopt;
  for (int prec = 8;; prec *= 2) {
    const Series s = Series::expand(x, prec);
    if (auto v = s.valuation()) return v;
    if (prec > (1 << 20)) throw ComputationError("precision", "valuation not found");
  }
}

unsigned action_height_by_series(const DrinfeldModule& d, const CoeffElem& a, const LocalElem& lambda) {
  const uint64_t q = d.q();
  for (int prec = 16; prec <= (1 << 16); prec *= 2) {
    std::vector<Series> g;
    for (const auto& c : d.phi_t().coeffs()) g.push_back(Series::expand(c, prec));
    auto apply_t = [&](const Series& x) {
      Series acc = g[0] * x;
      Series xi = x;
      for (size_t i = 1; i < g.size(); ++i) {
        xi = xi.power_q(q);
        acc = acc + g[i] * xi;
      }
      return acc;
    };
    Series y = Series::expand(lambda, prec);
    Series total = Series::expand(LocalElem(lambda.field()), prec);
    for (size_t j = 0; j < a.coeffs().size(); ++j) {
      if (j > 0) y = apply_t(y);
      if (!a.coeffs()[j].is_zero()) total = total + y.scaled(a.coeffs()[j]);
    }
    if (auto v = total.valuation()) return *v < 0 ? static_cast<unsigned>(-*v) : 0u;
    if (total.prec > 0) return 0;
  }
  throw ComputationError("precision", "height not determined");
}

std::vector<FFElem> roots_by_search(const TwistedPoly<FFElem>& f, const FiniteField& k) {
  std::vector<FFElem> roots;
  for (const auto& x : k.elements()) {
    FFElem acc = k.zero();
    FFElem xi = x;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
      if (i > 0) xi = xi.pow(static_cast<int64_t>(f.twist()));
      acc += f.coeffs()[i] * xi;
    }
    if (acc.is_zero()) roots.push_back(x);
  }
  return roots;
}

int as_break_by_search(const LocalElem& w, int depth) {
  if (!w.is_laurent_polynomial()) throw ComputationError("bad_input", "search needs a Laurent polynomial");
  const FiniteField& k = *w.field();
  const uint64_t p = k.characteristic();
  const Series sw = Series::expand(w, 1);
  const auto elems = k.elements();
  std::vector<size_t> digit(static_cast<size_t>(std::max(depth, 0)), 0);
  int best = -1;
  while (true) {
    Series z;
    z.field = &k;
    z.start = -depth;
    z.prec = 1;
    z.coeffs.assign(static_cast<size_t>(depth + 1), k.zero());
    for (int j = 1; j <= depth; ++j) z.coeffs[static_cast<size_t>(depth - j)] = elems[digit[static_cast<size_t>(j - 1)]];
    const Series r = sw + z.power_q(p) + z.scaled(-k.one());
    const auto v = r.valuation();
    const int b = (v && *v < 0) ? -*v : 0;
    if (best < 0 || b < best) best = b;

    size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == elems.size()) digit[pos++] = 0;
    if (pos == digit.size()) break;
  }
  return best;
}

std::optional<FFElem> as_factor_by_search(const TwistedPoly<FFElem>& phi, const std::vector<FFElem>& kernel,
                                          const std::vector<FFElem>& f_values) {
  const uint64_t q0 = phi.twist();
  const int d = phi.degree();
  if (d < 1) return std::nullopt;
  const FiniteField& k = phi.leading().field();
  std::optional<FFElem> found;
  for (const auto& u : k.elements()) {
    if (u.is_zero()) continue;
    std::vector<FFElem> psi(static_cast<size_t>(d), k.zero());
    psi[static_cast<size_t>(d - 1)] = (u * phi.coeff(static_cast<size_t>(d))).root_q(q0);
    for (int i = d - 1; i >= 1; --i) {
      psi[static_cast<size_t>(i - 1)] = (u * phi.coeff(static_cast<size_t>(i)) + psi[static_cast<size_t>(i)]).root_q(q0);
    }
    if (!(-psi[0] == u * phi.coeff(0))) continue;
    bool ok = true;
    for (size_t j = 0; j < kernel.size() && ok; ++j) {
      FFElem acc = k.zero();
      FFElem xi = kernel[j];
      for (int i = 0; i < d; ++i) {
        if (i > 0) xi = xi.pow(static_cast<int64_t>(q0));
        acc += psi[static_cast<size_t>(i)] * xi;
      }
      ok = acc == f_values[j];
    }
    if (!ok) continue;
    if (found) return std::nullopt;
    found = u;
  }
  return found;
}

std::optional<std::vector<NormValue>> minima_by_search(const NormedLattice& lattice, int degree) {
  const size_t n = lattice.rank();
  std::vector<LatticeVector> gens;
  for (size_t i = 0; i < n; ++i) gens.push_back(lattice.generator(i));
  std::vector<std::pair<NormValue, std::vector<CoeffElem>>> all;
  for_each_combination(lattice, gens, std::vector<int>(n, degree),
                       [&](const std::vector<CoeffElem>& a, const LatticeVector& w) {
                         bool zero = true;
                         for (const auto& x : a) zero = zero && x.is_zero();
                         if (!zero) all.emplace_back(w.norm, a);
                       });
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<NormValue> minima;
  PolyMatrix rows;
  for (const auto& [norm, a] : all) {
    if (minima.size() == n) break;
    PolyMatrix trial = rows;
    trial.push_back(a);
    if (smith_invariant_factors(lattice.ring(), trial).size() == trial.size()) {
      rows = std::move(trial);
      minima.push_back(norm);
    }
  }
  if (minima.size() != n) return std::nullopt;
  return minima;
}

bool orthogonality_certificate(const NormedLattice& lattice, const OrthogonalBasis& basis, int degree) {
  const size_t n = basis.rank();
  if (n == 0) return true;
  const auto polys = lattice.ring().enumerate_by_degree(degree);
  std::vector<std::vector<LatticeVector>> terms(n);
  for (size_t i = 0; i < n; ++i) {
    for (const auto& a : polys) terms[i].push_back(lattice.combine({basis.vectors[i]}, {a}));
  }
  std::vector<size_t> idx(n, 0);
  while (true) {
    NormValue mx;
    std::vector<LatticeVector> parts;
    std::vector<CoeffElem> coeffs;
    for (size_t i = 0; i < n; ++i) {
      if (terms[i][idx[i]].norm > mx) mx = terms[i][idx[i]].norm;
      parts.push_back(basis.vectors[i]);
      coeffs.push_back(polys[idx[i]]);
    }
    if (lattice.mode() == LatticeMode::Drinfeld) {
      LocalElem sum(lattice.ring().residue_field().get());
      for (size_t i = 0; i < n; ++i) sum += *terms[i][idx[i]].value;
      if (!(lattice.norm_of_value(sum) == mx)) return false;
    } else if (!(lattice.combine(parts, coeffs).norm == mx)) {
      return false;
    }
    size_t pos = 0;
    while (pos < n && ++idx[pos] == polys.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return true;
}

}  // namespace dmloc::oracle
