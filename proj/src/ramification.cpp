#include "dmloc/ramification.hpp"

#include <algorithm>
#include <memory>

#include "dmloc/error.hpp"
#include "dmloc/moore.hpp"

namespace dmloc {

ASClass as_reduce(const LocalElem& w) {
  const FiniteField* k = w.field();
  const int p = static_cast<int>(k->characteristic());
  ASClass out{w, w, ASKind::Trivial, 0, 0};
  LocalElem x = w;
  while (!x.is_zero()) {
    const int v = x.valuation().value;
    if (v >= 0 || v % p != 0) break;
    const LocalElem z = LocalElem(x.leading_coefficient().root_q(p)) * LocalElem::pi_power(k, v / p);
    x = x - (z.pow_q(p) - z);
    ++out.steps;
  }
  out.reduced = x;
  if (x.is_zero()) return out;
  const int v = x.valuation().value;
  if (v < 0) {
    out.kind = ASKind::Ramified;
    out.break_value = -v;
  } else if (v == 0 && k->absolute_trace(x.residue()) != 0) {
    out.kind = ASKind::UnramifiedNontrivial;
  }
  return out;
}

FFElem as_scaling_factor(const TwistedPoly<FFElem>& phi, const std::vector<FFElem>& w, const FFElem& v) {
  const uint64_t q0 = phi.twist();
  std::vector<FFElem> wv = w;
  wv.push_back(v);
  const FFElem num = moore_det(w, q0, v);
  const FFElem den = moore_det(wv, q0, v);
  if (den.is_zero()) throw ComputationError("dependent_basis", "hyperplane basis and v are dependent");
  return phi.leading().inverse() * (num / den).pow_q(q0);
}

ASFactor<FFElem> as_factor(const TwistedPoly<FFElem>& phi, const std::vector<FFElem>& kernel,
                           const std::vector<FFElem>& f_values) {
  const uint64_t q0 = phi.twist();
  if (phi.is_zero() || phi.coeff(0).is_zero()) throw ComputationError("inseparable", "phi must be separable");
  if (kernel.size() != static_cast<size_t>(phi.degree()) || f_values.size() != kernel.size()) {
    throw ComputationError("not_kernel", "the kernel must be listed by a basis of size deg phi");
  }
  for (const auto& e : kernel) {
    if (!phi.evaluate(e).is_zero()) throw ComputationError("not_kernel", "basis element outside ker phi");
  }
  if (moore_det(kernel, q0, phi.coeff(0)).is_zero()) {
    throw ComputationError("dependent_basis", "kernel basis is linearly dependent");
  }
  std::optional<size_t> pivot;
  for (size_t i = 0; i < f_values.size(); ++i) {
    if (!(f_values[i].pow_q(q0) == f_values[i])) throw ComputationError("bad_form", "form values must lie in F_q0");
    if (!pivot && !f_values[i].is_zero()) pivot = i;
  }
  if (!pivot) throw ComputationError("not_surjective", "the zero form is not surjective");

  const FFElem v = kernel[*pivot] / f_values[*pivot];
  std::vector<FFElem> w;
  for (size_t i = 0; i < kernel.size(); ++i) {
    if (i != *pivot) w.push_back(kernel[i] - f_values[i] * v);
  }
  ASFactor<FFElem> out{as_scaling_factor(phi, w, v), tau_interpolate(kernel, f_values, q0), false, false};

  const FFElem one = phi.coeff(0).one_like();
  const TwistedPoly<FFElem> tau_minus_one(std::vector<FFElem>{-one, one}, q0);
  const TwistedPoly<FFElem> rhs = tau_minus_one * out.psi0;
  out.identity_holds = phi.scale(out.u) == rhs;
  const auto [quot, rem] = rhs.right_divide(phi);
  out.division_agrees = rem.is_zero() && quot.degree() == 0 && quot.coeff(0) == out.u;
  return out;
}

KummerBreakReport kummer_break(const DrinfeldModule& d, const LocalElem& lambda) {
  KummerBreakReport r{lambda, d.height(lambda), 1, false, false, std::nullopt};
  const unsigned p = d.residue_field()->characteristic();
  r.vanishing_level = r.height + 1;
  r.zero_map = r.height == 0;
  r.exact = r.height > 0 && r.height % p != 0;
  if (r.exact) r.break_value = r.height;
  return r;
}

KummerImageReport kummer_image_at_level(const DrinfeldModule& d, const CoeffElem& a, const LocalElem& lambda,
                                        unsigned ext_cap) {
  const unsigned h = d.height(lambda);
  const TorsionResult tor = d.torsion_points(a, ext_cap);
  const FiniteField& km = *tor.field;
  const uint32_t p = km.characteristic();
  const TwistedPoly<FFElem> phi_p = tor.phi_a.refine(p);

  KummerImageReport rep;
  rep.extension_degree = tor.extension_degree;
  rep.dimension = static_cast<unsigned>(tor.basis.size());
  rep.exact_factors = d.has_constant_coefficients();
  std::optional<LocalElem> lam_m;
  if (rep.exact_factors) lam_m = lambda.map_field(FieldEmbedding(d.ring().residue_field(), tor.field));

  std::vector<uint32_t> c(rep.dimension, 0);
  bool all_ramified = true, any_zero = false, all_zero = true;
  while (true) {
    size_t pos = 0;
    while (pos < c.size() && ++c[pos] == p) c[pos++] = 0;
    if (pos == c.size()) break;

    FormResult fr;
    fr.coefficients = c;
    if (rep.exact_factors) {
      std::vector<FFElem> values;
      for (uint32_t x : c) values.push_back(km.from_int(x));
      const auto af = as_factor(phi_p, tor.basis, values);
      if (!af.identity_holds || !af.division_agrees) {
        throw ComputationError("identity_failed", "scaling-factor identity failed");
      }
      fr.u = af.u;
    }
    if (h == 0) {
      fr.status = FormStatus::ZeroOnInertia;
    } else if (fr.u) {
      const ASClass cls = as_reduce(LocalElem(*fr.u) * *lam_m);
      if (cls.kind == ASKind::Ramified) {
        fr.status = FormStatus::Ramified;
        fr.break_value = cls.break_value;
      } else {
        fr.status = FormStatus::ZeroOnInertia;
      }
    } else if (h % p != 0) {
      fr.status = FormStatus::Ramified;
      fr.break_value = static_cast<int>(h);
    }

    all_ramified = all_ramified && fr.status == FormStatus::Ramified;
    all_zero = all_zero && fr.status == FormStatus::ZeroOnInertia;
    if (fr.status == FormStatus::ZeroOnInertia && !any_zero) {
      any_zero = true;
      rep.witness = rep.forms.size();
    }
    rep.max_break = std::max(rep.max_break, fr.break_value);
    rep.forms.push_back(std::move(fr));
  }
  rep.zero_image = all_zero;
  if (all_ramified) {
    rep.outcome = KummerOutcome::SurjectiveOnInertia;
  } else if (any_zero) {
    rep.outcome = KummerOutcome::ProperImageWitness;
  }
  return rep;
}

namespace {

OrthogonalBasis reduce_in(const DrinfeldModule& d, const std::vector<LocalElem>& gens, size_t cap) {
  const auto lat = NormedLattice::drinfeld(std::make_shared<DrinfeldModule>(d), gens);
  return reduce(lat, ReduceOptions{cap});
}

// Largest ramified Kummer break among the forms at a degree-1 level prime to
// the residual characteristic.
std::pair<int, std::optional<CoeffElem>> kummer_certificate(const DrinfeldModule& d, const LocalElem& lambda,
                                                            unsigned ext_cap) {
  for (const auto& c : d.ring().constants()) {
    const CoeffElem a = d.ring().t() + CoeffElem::constant(c);
    try {
      const auto rep = kummer_image_at_level(d, a, lambda, ext_cap);
      return {rep.max_break, a};
    } catch (const ComputationError& e) {
      if (e.code() != "not_prime_to_characteristic" && e.code() != "extension_cap") throw;
    }
  }
  return {0, std::nullopt};
}

}  // namespace

ConductorReport conductor(const DrinfeldModule& d, const std::vector<LocalElem>& generators,
                          const ConductorOptions& options) {
  if (!d.good_reduction()) throw ComputationError("bad_reduction", "the uniformizing module needs good reduction");
  const uint64_t q = d.q();
  const unsigned p = d.residue_field()->characteristic();

  DrinfeldModule cur = d;
  OrthogonalBasis basis = reduce_in(cur, generators, options.iteration_cap);
  ConductorReport rep;
  while (!basis.vectors.empty()) {
    bool all_powers = true;
    for (const auto& v : basis.vectors) all_powers = all_powers && v.value->is_qth_power(q);
    if (!all_powers) break;
    auto down = cur.frobenius_descent();
    if (!down) break;
    std::vector<LocalElem> roots;
    for (const auto& v : basis.vectors) roots.push_back(v.value->root_q(q));
    cur = *down;
    basis = reduce_in(cur, roots, options.iteration_cap);
    ++rep.descent_steps;
  }

  rep.s = cur.rank();
  rep.n = static_cast<unsigned>(basis.rank());
  rep.r = rep.s + rep.n;
  for (const auto& v : basis.vectors) {
    rep.heights.push_back(cur.height(*v.value));
    rep.breaks.push_back(kummer_break(cur, *v.value));
    rep.m = std::max(rep.m, rep.heights.back());
  }

  rep.vol_log = volume_log(basis, q);
  const int64_t e = static_cast<int64_t>(rep.s) * (rep.vol_log + rep.n);
  if (e < 0) throw ComputationError("bad_volume", "lattice norms below 1");
  mpz_ui_pow_ui(rep.volume_bound.get_mpz_t(), q, static_cast<unsigned long>(e));
  rep.tightened = rep.vol_log + rep.n != 0;
  if (rep.tightened) rep.volume_bound -= 1;

  if (rep.m == 0 || rep.m % p != 0) {
    rep.exact = rep.m;
  } else {
    unsigned lower = 0;
    for (unsigned h : rep.heights) {
      if (h % p != 0) lower = std::max(lower, h);
    }
    if (cur.has_constant_coefficients()) {
      for (size_t i = 0; i < basis.rank(); ++i) {
        if (rep.heights[i] == 0 || rep.heights[i] % p != 0) continue;
        auto [b, a] = kummer_certificate(cur, *basis.vectors[i].value, options.ext_cap);
        if (a) rep.certificate_level = a;
        lower = std::max(lower, static_cast<unsigned>(b));
      }
    }
    rep.interval = std::make_pair(std::min(lower, rep.m - 1), rep.m - 1);
  }
  const unsigned upper = rep.exact ? *rep.exact : rep.interval->second;
  rep.bound_holds = mpz_class(upper) <= rep.volume_bound;
  return rep;
}

unsigned torsion_field_conductor(const std::vector<int>& breaks) {
  int best = 0;
  for (int b : breaks) best = std::max(best, b);
  return best > 0 ? static_cast<unsigned>(best) + 1 : 0;
}

}  // namespace dmloc
