#include "dmloc/moore.hpp"
#include "dmloc/oracles.hpp"
#include "dmloc/ramification.hpp"
#include "dmloc/text.hpp"
#include "test_support.hpp"

using namespace dmloc;

namespace {

LocalElem L(const FieldRef& k, const char* s) { return parse_local(*k, s); }

DrinfeldModule make(uint32_t p, uint64_t q, const char* phi_t) {
  const CoeffRing ring(FiniteField::make(p, 1), q);
  return DrinfeldModule(ring, parse_twisted(*ring.residue_field(), q, phi_t));
}

}  // namespace

TEST(ArtinSchreier, Examples) {
  const FieldRef k = FiniteField::make(2, 1);
  const auto a = as_reduce(L(k, "pi^-3"));
  EXPECT_EQ(a.kind, ASKind::Ramified);
  EXPECT_EQ(a.break_value, 3);
  EXPECT_EQ(a.steps, 0u);

  const auto b = as_reduce(L(k, "pi^-4"));
  EXPECT_EQ(b.kind, ASKind::Ramified);
  EXPECT_EQ(b.break_value, 1);
  const LocalElem z = L(k, "pi^-2 + pi^-1");
  EXPECT_EQ(L(k, "pi^-4") - L(k, "pi^-1"), z * z - z);
  EXPECT_EQ(oracle::as_break_by_search(L(k, "pi^-4"), 2), 1);

  EXPECT_EQ(as_reduce(L(k, "1")).kind, ASKind::UnramifiedNontrivial);
  for (const auto& x : k->elements()) EXPECT_FALSE((x * x - x).is_one());
  EXPECT_EQ(as_reduce(L(k, "pi + pi^2")).kind, ASKind::Trivial);
}

TEST(ArtinSchreier, ResidueTrace) {
  const FieldRef k = FiniteField::make(2, 2);
  // Tr(g) = g + g^2 = 1; Tr(1) = 0 over F_4.
  EXPECT_EQ(as_reduce(L(k, "g")).kind, ASKind::UnramifiedNontrivial);
  EXPECT_EQ(as_reduce(L(k, "1")).kind, ASKind::Trivial);
  const FieldRef k3 = FiniteField::make(3, 1);
  // 2 pi^-6 + pi^-2 = wp(2 pi^-2) is trivial; adding pi^-1 leaves break 2.
  EXPECT_EQ(as_reduce(L(k3, "2*pi^-6 + pi^-2")).kind, ASKind::Trivial);
  EXPECT_EQ(as_reduce(L(k3, "2*pi^-6 + pi^-1")).break_value, 2);
}

TEST(ArtinSchreier, FactorBasics) {
  const FieldRef k = FiniteField::make(2, 2);
  const auto tau_minus_one = parse_twisted_residue(*k, 2, "T - 1");
  const auto af = as_factor(tau_minus_one, {k->one()}, {k->one()});
  EXPECT_TRUE(af.u.is_one());
  EXPECT_EQ(af.psi0, TwistedPoly<FFElem>::constant(k->one(), 2));

  const FieldRef k9 = FiniteField::make(3, 2);
  const FFElem v = k9->generator();
  const TwistedPoly<FFElem> phi(std::vector<FFElem>{-v.pow(2), k9->one()}, 3);
  const auto f = as_factor(phi, {v}, {k9->one()});
  EXPECT_EQ(f.u, v.pow(-3));
  EXPECT_TRUE(f.identity_holds);
  EXPECT_TRUE(f.division_agrees);
  EXPECT_EQ(oracle::as_factor_by_search(phi, {v}, {k9->one()}), f.u);
}

TEST(ArtinSchreier, FactorErrors) {
  const FieldRef k = FiniteField::make(2, 3);
  const FFElem g = k->generator();
  const auto phi = subspace_polynomial(std::vector<FFElem>{k->one(), g}, 2, k->one());
  EXPECT_COMPUTATION_ERROR(as_factor(phi, {k->one(), k->one()}, {k->one(), k->zero()}), "dependent_basis");
  EXPECT_COMPUTATION_ERROR(as_factor(phi, {k->one(), g}, {k->zero(), k->zero()}), "not_surjective");
  EXPECT_COMPUTATION_ERROR(as_factor(phi, {k->one(), g * g}, {k->one(), k->zero()}), "not_kernel");
  EXPECT_COMPUTATION_ERROR(as_factor(phi, {k->one(), g}, {g, k->zero()}), "bad_form");
  const TwistedPoly<FFElem> insep(std::vector<FFElem>{k->zero(), k->zero(), k->one()}, 2);
  EXPECT_COMPUTATION_ERROR(as_factor(insep, {k->one()}, {k->one()}), "inseparable");
}

TEST(Kummer, Breaks) {
  const DrinfeldModule d = make(2, 2, "1 + T");
  const FieldRef k = FiniteField::make(2, 1);
  const auto zero = kummer_break(d, L(k, "pi^2"));
  EXPECT_TRUE(zero.zero_map);
  EXPECT_FALSE(zero.break_value.has_value());

  const auto three = kummer_break(d, L(k, "pi^-3"));
  EXPECT_EQ(three.vanishing_level, 4u);
  EXPECT_TRUE(three.exact);
  EXPECT_EQ(three.break_value, 3);

  const auto four = kummer_break(d, L(k, "pi^-4"));
  EXPECT_EQ(four.vanishing_level, 5u);
  EXPECT_FALSE(four.exact);
  EXPECT_FALSE(four.break_value.has_value());
}

TEST(Kummer, ImageAtLevel) {
  const DrinfeldModule d = make(2, 2, "1 + T + T^2");
  const FieldRef k = FiniteField::make(2, 1);
  const CoeffElem a = parse_coeff_poly(*k, "t");
  const auto surj = kummer_image_at_level(d, a, L(k, "pi^-3 + 1"));
  EXPECT_EQ(surj.outcome, KummerOutcome::SurjectiveOnInertia);
  EXPECT_EQ(surj.dimension, 2u);
  EXPECT_EQ(surj.forms.size(), 3u);
  for (const auto& f : surj.forms) EXPECT_EQ(f.break_value, 3);

  const auto zero = kummer_image_at_level(d, a, L(k, "1 + pi"));
  EXPECT_TRUE(zero.zero_image);
  EXPECT_EQ(zero.outcome, KummerOutcome::ProperImageWitness);
  ASSERT_TRUE(zero.witness.has_value());
}

TEST(Kummer, HeightDivisibleByPCrossChecked) {
  // Each form's class must match a direct reduction of u_f * lambda.
  const DrinfeldModule d = make(2, 2, "1 + T");
  const FieldRef k = FiniteField::make(2, 1);
  const CoeffElem a = parse_coeff_poly(*k, "t");
  const LocalElem lambda = L(k, "pi^-2");
  const auto rep = kummer_image_at_level(d, a, lambda);
  EXPECT_TRUE(rep.exact_factors);
  for (const auto& f : rep.forms) {
    ASSERT_TRUE(f.u.has_value());
    const FieldEmbedding emb(k, FiniteField::make(2, rep.extension_degree));
    const auto cls = as_reduce(LocalElem(*f.u) * lambda.map_field(emb));
    if (f.status == FormStatus::Ramified) {
      EXPECT_EQ(cls.kind, ASKind::Ramified);
      EXPECT_EQ(f.break_value, cls.break_value);
    } else {
      EXPECT_NE(cls.kind, ASKind::Ramified);
    }
  }
  // Height 2 drops to break 1 after one wp-step.
  EXPECT_EQ(rep.outcome, KummerOutcome::SurjectiveOnInertia);
  EXPECT_EQ(rep.max_break, 1);
}

TEST(Conductor, CarlitzTypeExample) {
  const DrinfeldModule d = make(2, 2, "pi + T");
  const FieldRef k = FiniteField::make(2, 1);
  const auto rep = conductor(d, {L(k, "pi^-1")});
  ASSERT_TRUE(rep.exact.has_value());
  EXPECT_EQ(*rep.exact, 1u);
  // N(pi^-1) = 1 = q^0, so vol = q^{-1} and vol * C^{r-s} = 1: no tightening.
  EXPECT_EQ(rep.vol_log, -1);
  EXPECT_FALSE(rep.tightened);
  EXPECT_EQ(rep.volume_bound, 1);
  EXPECT_TRUE(rep.bound_holds);
}

TEST(Conductor, GoodReductionIsZero) {
  const DrinfeldModule d = make(2, 2, "pi + T");
  const auto rep = conductor(d, {});
  ASSERT_TRUE(rep.exact.has_value());
  EXPECT_EQ(*rep.exact, 0u);
}

TEST(Conductor, HeightDivisibleByPGivesInterval) {
  const DrinfeldModule d = make(2, 2, "pi + T");
  const FieldRef k = FiniteField::make(2, 1);
  const auto rep = conductor(d, {L(k, "pi^-4 + pi^-1")});
  ASSERT_TRUE(rep.interval.has_value());
  EXPECT_FALSE(rep.exact.has_value());
  EXPECT_EQ(rep.interval->first, 0u);
  EXPECT_EQ(rep.interval->second, 3u);
}

TEST(Conductor, TorsionFieldConductor) {
  EXPECT_EQ(torsion_field_conductor({}), 0u);
  EXPECT_EQ(torsion_field_conductor({1, 3}), 4u);
  const DrinfeldModule d = make(2, 2, "pi + T");
  const FieldRef k = FiniteField::make(2, 1);
  const auto rep = conductor(d, {L(k, "pi^-5")});
  ASSERT_TRUE(rep.exact.has_value());
  EXPECT_EQ(torsion_field_conductor({static_cast<int>(*rep.exact)}), *rep.exact + 1);
}

TEST(Kummer, HeightTwoWitness) {
  // u = 1 for phi(t) = 1 + T, and pi^-2 + pi^-1 = wp(pi^-1).
  const DrinfeldModule d = make(2, 2, "1 + T");
  const FieldRef k = FiniteField::make(2, 1);
  const LocalElem lambda = L(k, "pi^-2 + pi^-1");
  const auto rep = kummer_image_at_level(d, parse_coeff_poly(*k, "t"), lambda);
  ASSERT_EQ(rep.forms.size(), 1u);
  ASSERT_TRUE(rep.forms[0].u.has_value());
  EXPECT_TRUE(rep.forms[0].u->is_one());
  EXPECT_EQ(as_reduce(lambda).kind, ASKind::Trivial);
  EXPECT_EQ(rep.forms[0].status, FormStatus::ZeroOnInertia);
  EXPECT_EQ(rep.outcome, KummerOutcome::ProperImageWitness);
  EXPECT_TRUE(rep.zero_image);  // one form only
}
