#include <random>

#include "dmloc/moore.hpp"
#include "dmloc/text.hpp"
#include "test_support.hpp"

using namespace dmloc;

namespace {

using TP = TwistedPoly<FFElem>;

TP R(const FieldRef& k, uint64_t q0, const char* s) { return parse_twisted_residue(*k, q0, s); }

TP random_tp(std::mt19937_64& rng, const FieldRef& k, uint64_t q0, int degree) {
  std::vector<FFElem> c;
  for (int i = 0; i <= degree; ++i) c.push_back(k->element(static_cast<uint32_t>(rng() % k->size())));
  c.back() = k->one();
  return TP(c, q0);
}

}  // namespace

TEST(TwistedPoly, Evaluate) {
  const FieldRef k4 = FiniteField::make(2, 2);
  const FFElem g = k4->generator();
  EXPECT_EQ(R(k4, 2, "T").evaluate(g), g * g);
  for (const auto& x : k4->subfield(2)) EXPECT_TRUE(R(k4, 2, "T - 1").evaluate(x).is_zero());

  const FieldRef k2 = FiniteField::make(2, 1);
  EXPECT_EQ(parse_twisted(*k2, 2, "1 + T").evaluate(parse_local(*k2, "pi^-1")), parse_local(*k2, "pi^-1 + pi^-2"));
}

TEST(TwistedPoly, CommutationRule) {
  const FieldRef k = FiniteField::make(3, 2);
  const FFElem a = k->generator();
  const TP tau = TP::monomial(k->one(), 1, 3);
  EXPECT_EQ(tau * TP::constant(a, 3), TP::monomial(a.pow_q(3), 1, 3));
  const TP f = R(k, 3, "g + T^2");
  EXPECT_EQ(f * TP::constant(k->one(), 3), f);
}

TEST(TwistedPoly, ProductMatchesCompositionOnPoints) {
  const FieldRef k2 = FiniteField::make(2, 1);
  EXPECT_EQ(R(k2, 2, "T + 1") * R(k2, 2, "T - 1"), R(k2, 2, "T^2 - 1"));
  std::mt19937_64 rng(11);
  const FieldRef k = FiniteField::make(2, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const uint64_t q0 = trial % 2 ? 2 : 4;
    const TP f = random_tp(rng, k, q0, 2), g = random_tp(rng, k, q0, 3);
    for (int j = 0; j < 5; ++j) {
      const FFElem x = k->element(static_cast<uint32_t>(rng() % k->size()));
      EXPECT_EQ((f * g).evaluate(x), f.evaluate(g.evaluate(x)));
    }
  }
}

TEST(TwistedPoly, RightDivision) {
  const FieldRef k2 = FiniteField::make(2, 1);
  const auto [q, r] = R(k2, 2, "T^2").right_divide(R(k2, 2, "T - 1"));
  EXPECT_EQ(q, R(k2, 2, "T + 1"));
  EXPECT_EQ(r, R(k2, 2, "1"));

  const TP d = R(k2, 2, "1 + T + T^3");
  EXPECT_EQ(d.right_divide(d).first, R(k2, 2, "1"));
  EXPECT_TRUE(d.right_divide(d).second.is_zero());
  const TP small = R(k2, 2, "1 + T");
  EXPECT_TRUE(small.right_divide(d).first.is_zero());
  EXPECT_EQ(small.right_divide(d).second, small);
  EXPECT_COMPUTATION_ERROR(d.right_divide(TP(k2->zero(), 2)), "division_by_zero");

  std::mt19937_64 rng(3);
  const FieldRef k = FiniteField::make(3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const TP f = random_tp(rng, k, 3, 5), g = random_tp(rng, k, 3, 2);
    const auto [qq, rr] = f.right_divide(g);
    EXPECT_EQ(qq * g + rr, f);
    EXPECT_LT(rr.degree(), g.degree());
  }
}

TEST(TwistedPoly, TwistMismatch) {
  const FieldRef k = FiniteField::make(2, 2);
  EXPECT_COMPUTATION_ERROR(R(k, 2, "T") * R(k, 4, "T"), "twist_mismatch");
}

TEST(Moore, Determinant) {
  const FieldRef k = FiniteField::make(2, 2);
  const FFElem g = k->generator();
  EXPECT_EQ(moore_det(std::vector<FFElem>{k->one(), g}, 2), k->one());
  EXPECT_TRUE(moore_det(std::vector<FFElem>{k->one(), k->one()}, 2).is_zero());
}

TEST(Moore, Interpolation) {
  const FieldRef k = FiniteField::make(2, 2);
  const FFElem g = k->generator(), c = g + k->one();
  EXPECT_EQ(tau_interpolate(std::vector<FFElem>{k->one()}, {c}, 2), TP::constant(c, 2));
  const std::vector<FFElem> basis{k->one(), g};
  EXPECT_EQ(tau_interpolate(basis, basis, 2), TP::constant(k->one(), 2));
  EXPECT_COMPUTATION_ERROR(tau_interpolate(std::vector<FFElem>{k->one(), k->one()}, {g, g}, 2), "dependent_basis");

  // Every F_2-linear map on F_4, checked on the whole span.
  for (const auto& a : k->elements()) {
    for (const auto& b : k->elements()) {
      const TP f = tau_interpolate(basis, {a, b}, 2);
      EXPECT_LE(f.degree(), 1);
      EXPECT_EQ(f.evaluate(k->zero()), k->zero());
      EXPECT_EQ(f.evaluate(k->one()), a);
      EXPECT_EQ(f.evaluate(g), b);
      EXPECT_EQ(f.evaluate(k->one() + g), a + b);
    }
  }
}

TEST(Moore, SubspacePolynomialRootsAreTheSpan) {
  const FieldRef k = FiniteField::make(3, 3);
  const std::vector<FFElem> v{k->generator(), k->generator().pow(5)};
  const TP s = subspace_polynomial(v, 3, k->one());
  EXPECT_EQ(s.degree(), 2);
  size_t roots = 0;
  for (const auto& x : k->elements()) roots += s.evaluate(x).is_zero();
  EXPECT_EQ(roots, 9u);
  EXPECT_COMPUTATION_ERROR(subspace_polynomial(std::vector<FFElem>{v[0], v[0] + v[0]}, 3, k->one()),
                           "dependent_basis");
}
