#include "dmloc/drinfeld.hpp"

#include <algorithm>

#include "dmloc/error.hpp"

namespace dmloc {

namespace {

using Row = std::vector<uint32_t>;

// Basis of the nullspace of the F_p-linear map whose j-th column is cols[j].
std::vector<Row> nullspace_mod_p(const std::vector<Row>& cols, uint32_t p) {
  const size_t n = cols.size();
  const size_t m = n == 0 ? 0 : cols[0].size();
  // Work on the transpose-free matrix a[i][j] = cols[j][i].
  std::vector<Row> a(m, Row(n, 0));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];
  }
  auto inv = [p](uint32_t x) {
    uint64_t r = 1, b = x;
    for (uint32_t e = p - 2; e; e >>= 1) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
    }
    return static_cast<uint32_t>(r);
  };
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    const uint32_t s = inv(a[row][col]);
    for (auto& x : a[row]) x = static_cast<uint32_t>(uint64_t(x) * s % p);
    for (size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const uint64_t f = a[r][col];
      for (size_t c = 0; c < n; ++c) a[r][c] = static_cast<uint32_t>((a[r][c] + (p - f) * a[row][c]) % p);
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  std::vector<Row> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      v[static_cast<size_t>(pivot_col_of_row[r])] = (p - a[r][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

uint64_t checked_pow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < e; ++i) {
    if (r > (uint64_t(1) << 40) / b) throw ComputationError("extension_cap", "torsion module too large");
    r *= b;
  }
  return r;
}

}  // namespace

TorsionResult finite_torsion(const CoeffRing& ring, const TwistedPoly<FFElem>& phi_t, const CoeffElem& a,
                             unsigned ext_cap) {
  ring.check_member(a);
  if (a.is_zero()) throw ComputationError("zero_element", "torsion of the zero element is not finite");
  const FiniteField& k = *ring.residue_field();
  const std::function<FFElem(const FFElem&)> id = [](const FFElem& c) { return c; };
  const TwistedPoly<FFElem> phi_a = phi_of<FFElem>(phi_t, a, id);
  if (phi_a.coeff(0).is_zero()) {
    throw ComputationError("not_prime_to_characteristic", "phi(a) is inseparable: a is not prime to the characteristic");
  }
  const unsigned rank = static_cast<unsigned>(phi_t.degree());
  const uint64_t target = checked_pow(ring.q(), uint64_t(rank) * static_cast<uint64_t>(a.degree()));
  const uint32_t p = k.characteristic();

  for (unsigned m = 1; m <= ext_cap; ++m) {
    uint64_t size = 1;
    bool too_big = false;
    for (unsigned i = 0; i < k.degree() * m; ++i) {
      size *= p;
      too_big = too_big || size > FiniteField::kMaxSize;
    }
    if (too_big) break;
    const FieldRef km = FiniteField::make(p, k.degree() * m);
    const FieldEmbedding emb(ring.residue_field(), km);
    std::vector<FFElem> coeffs;
    for (const auto& c : phi_a.coeffs()) coeffs.push_back(emb(c));
    TwistedPoly<FFElem> phi_m(std::move(coeffs), phi_a.twist());

    // Columns: images of the F_p-basis p^j of k_m.
    std::vector<Row> cols;
    uint32_t unit = 1;
    for (unsigned j = 0; j < km->degree(); ++j) {
      cols.push_back(km->digits(phi_m.evaluate(km->element(unit))));
      unit *= p;
    }
    const auto null = nullspace_mod_p(cols, p);
    uint64_t count = 1;
    for (size_t i = 0; i < null.size(); ++i) count *= p;
    if (count != target) continue;

    TorsionResult out{km, m, phi_m, {}, {}};
    for (const auto& v : null) out.basis.push_back(km->from_digits(v));
    out.points.push_back(km->zero());
    for (const auto& b : out.basis) {
      const size_t cur = out.points.size();
      for (uint32_t c = 1; c < p; ++c) {
        const FFElem cb = km->from_int(c) * b;
        for (size_t i = 0; i < cur; ++i) out.points.push_back(out.points[i] + cb);
      }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const FFElem& x, const FFElem& y) { return x.index() < y.index(); });
    return out;
  }
  throw ComputationError("extension_cap", "torsion points not found within the extension-degree cap");
}

DrinfeldModule::DrinfeldModule(CoeffRing ring, TwistedPoly<LocalElem> phi_t)
    : ring_(std::move(ring)), phi_t_(std::move(phi_t)) {
  if (phi_t_.twist() != ring_.q()) throw ComputationError("bad_module", "phi_t must use the q-Frobenius");
  if (phi_t_.degree() < 1) throw ComputationError("bad_module", "a Drinfeld module has rank >= 1");
  for (const auto& c : phi_t_.coeffs()) {
    if (c.field() != ring_.residue_field().get()) {
      throw ComputationError("bad_module", "coefficients over a different residue field");
    }
  }
}

bool DrinfeldModule::good_reduction() const {
  for (const auto& c : phi_t_.coeffs()) {
    if (!c.is_zero() && c.valuation().value < 0) return false;
  }
  return phi_t_.leading().valuation().value == 0;
}

bool DrinfeldModule::finite_residual_characteristic() const {
  const LocalElem& iota = characteristic();
  return iota.is_zero() || iota.valuation().value >= 0;
}

std::optional<CoeffElem> DrinfeldModule::residual_characteristic() const {
  if (!finite_residual_characteristic()) return std::nullopt;
  const LocalElem& iota = characteristic();
  if (iota.is_zero() || iota.valuation().value > 0) return ring_.t();
  return ring_.minimal_polynomial(iota.residue());
}

bool DrinfeldModule::has_constant_coefficients() const {
  for (const auto& c : phi_t_.coeffs()) {
    if (c.is_zero()) continue;
    if (c.shift() != 0 || c.numerator().degree() != 0 || c.denominator().degree() != 0) return false;
  }
  return true;
}

TwistedPoly<LocalElem> DrinfeldModule::action(const CoeffElem& a) const {
  ring_.check_member(a);
  const std::function<LocalElem(const FFElem&)> lift = [](const FFElem& c) { return LocalElem(c); };
  return phi_of<LocalElem>(phi_t_, a, lift);
}

LocalElem DrinfeldModule::act(const CoeffElem& a, const LocalElem& x) const { return action(a).evaluate(x); }

unsigned DrinfeldModule::height(const LocalElem& lambda) const {
  if (!good_reduction()) throw ComputationError("bad_reduction", "height requires good reduction");
  if (lambda.is_zero()) return 0;
  const int v = lambda.valuation().value;
  return v < 0 ? static_cast<unsigned>(-v) : 0u;
}

TwistedPoly<FFElem> DrinfeldModule::reduction() const {
  if (!good_reduction()) throw ComputationError("bad_reduction", "reduction requires good reduction");
  std::vector<FFElem> c;
  for (const auto& x : phi_t_.coeffs()) c.push_back(x.residue());
  return TwistedPoly<FFElem>(std::move(c), phi_t_.twist());
}

TorsionResult DrinfeldModule::torsion_points(const CoeffElem& a, unsigned ext_cap) const {
  return finite_torsion(ring_, reduction(), a, ext_cap);
}

DrinfeldModule DrinfeldModule::isogeny_transport(const TwistedPoly<LocalElem>& g) const {
  if (g.is_zero()) throw ComputationError("not_an_isogeny", "the zero polynomial is not an isogeny");
  auto [psi_t, rem] = (g * phi_t_).right_divide(g);
  if (!rem.is_zero()) throw ComputationError("not_an_isogeny", "g phi(t) is not right-divisible by g");
  DrinfeldModule psi(ring_, psi_t);
  // Intertwining on t and on a degree-2 element.
  CoeffElem a2 = ring_.t_power(2) + ring_.t() + ring_.one();
  for (const CoeffElem& a : {ring_.t(), a2}) {
    if (!(psi.action(a) * g == g * action(a))) {
      throw ComputationError("not_an_isogeny", "intertwining identity failed");
    }
  }
  return psi;
}

DrinfeldModule DrinfeldModule::frobenius_twist() const { return DrinfeldModule(ring_, phi_t_.frobenius_twist()); }

std::optional<DrinfeldModule> DrinfeldModule::frobenius_descent() const {
  std::vector<LocalElem> c;
  for (const auto& x : phi_t_.coeffs()) {
    if (!x.is_qth_power(q())) return std::nullopt;
    c.push_back(x.root_q(q()));
  }
  return DrinfeldModule(ring_, TwistedPoly<LocalElem>(std::move(c), q()));
}

}  // namespace dmloc
