#include <random>

#include "dmloc/drinfeld.hpp"
#include "dmloc/oracles.hpp"
#include "dmloc/text.hpp"
#include "test_support.hpp"

using namespace dmloc;

namespace {

DrinfeldModule make(uint32_t p, unsigned n, uint64_t q, const char* phi_t) {
  const CoeffRing ring(FiniteField::make(p, n), q);
  return DrinfeldModule(ring, parse_twisted(*ring.residue_field(), q, phi_t));
}

LocalElem L(const DrinfeldModule& d, const char* s) { return parse_local(*d.residue_field(), s); }
CoeffElem A(const DrinfeldModule& d, const char* s) { return parse_coeff_poly(*d.residue_field(), s); }

}  // namespace

TEST(Drinfeld, Action) {
  const DrinfeldModule d = make(3, 1, 3, "pi + T + 2*T^2");
  EXPECT_EQ(d.action(A(d, "t")), d.phi_t());
  EXPECT_EQ(d.action(A(d, "2")), TwistedPoly<LocalElem>::constant(L(d, "2"), 3));
  EXPECT_EQ(d.action(A(d, "t^2 + 1")), d.phi_t() * d.phi_t() + d.action(A(d, "1")));
  EXPECT_EQ(d.rank(), 2u);
}

TEST(Drinfeld, ModuleValidation) {
  const CoeffRing ring(FiniteField::make(2, 1), 2);
  const FiniteField& k = *ring.residue_field();
  EXPECT_COMPUTATION_ERROR(DrinfeldModule(ring, parse_twisted(k, 2, "pi")), "bad_module");
  EXPECT_COMPUTATION_ERROR(DrinfeldModule(ring, parse_twisted(k, 4, "1 + T")), "bad_module");
}

TEST(Drinfeld, Height) {
  const DrinfeldModule d = make(2, 1, 2, "pi + pi*T + T^2");
  EXPECT_EQ(d.height(L(d, "pi^2")), 0u);
  EXPECT_EQ(d.height(L(d, "pi^-3")), 3u);
  EXPECT_EQ(d.height(L(d, "(1 + pi)/pi")), 1u);
  EXPECT_EQ(d.height(L(d, "0")), 0u);
}

TEST(Drinfeld, HeightScalesUnderAction) {
  const DrinfeldModule d = make(2, 1, 2, "1 + pi*T + T^2");
  const LocalElem lambda = L(d, "pi^-3 + pi^-1");
  for (const char* a : {"t", "t + 1", "t^2 + t"}) {
    const CoeffElem ca = A(d, a);
    const unsigned want = (1u << (2 * ca.degree())) * 3;
    EXPECT_EQ(d.height(d.act(ca, lambda)), want) << a;
    EXPECT_EQ(oracle::action_height_by_series(d, ca, lambda), want) << a;
  }
}

TEST(Drinfeld, TorsionOverF2) {
  const DrinfeldModule d = make(2, 1, 2, "1 + T");
  const auto tor = d.torsion_points(A(d, "t"));
  EXPECT_EQ(tor.points.size(), 2u);
  EXPECT_EQ(tor.points, oracle::roots_by_search(tor.phi_a, *tor.field));
  const auto triv = d.torsion_points(A(d, "1"));
  ASSERT_EQ(triv.points.size(), 1u);
  EXPECT_TRUE(triv.points[0].is_zero());
}

TEST(Drinfeld, TorsionNeedsExtension) {
  const DrinfeldModule d = make(2, 2, 4, "g + T");
  const auto tor = d.torsion_points(A(d, "t"));
  EXPECT_EQ(tor.points.size(), 4u);
  EXPECT_GT(tor.extension_degree, 1u);
  EXPECT_EQ(tor.points, oracle::roots_by_search(tor.phi_a, *tor.field));
}

TEST(Drinfeld, TorsionCountMatchesRank) {
  const DrinfeldModule d = make(2, 1, 2, "1 + T + T^2");
  for (const char* a : {"t", "t^2 + t + 1", "t^2"}) {
    const auto tor = d.torsion_points(A(d, a), 16);
    EXPECT_EQ(tor.points.size(), 1u << (2 * A(d, a).degree())) << a;
    EXPECT_EQ(tor.points, oracle::roots_by_search(tor.phi_a, *tor.field)) << a;
  }
}

TEST(Drinfeld, TorsionErrors) {
  const DrinfeldModule d = make(2, 1, 2, "1 + T");
  EXPECT_COMPUTATION_ERROR(d.torsion_points(A(d, "t + 1")), "not_prime_to_characteristic");
  const DrinfeldModule e = make(2, 1, 2, "1 + T + T^2");
  EXPECT_COMPUTATION_ERROR(e.torsion_points(A(e, "t^4 + t + 1"), 2), "extension_cap");
}

TEST(Drinfeld, IsogenyTransport) {
  const DrinfeldModule d = make(2, 1, 2, "pi + (1 + pi)*T + pi^-1*T^2");
  const auto tau = TwistedPoly<LocalElem>::monomial(L(d, "1"), 1, 2);
  EXPECT_EQ(d.isogeny_transport(tau).phi_t(), d.frobenius_twist().phi_t());
  EXPECT_EQ(d.isogeny_transport(TwistedPoly<LocalElem>::constant(L(d, "1"), 2)).phi_t(), d.phi_t());
  EXPECT_EQ(d.isogeny_transport(d.action(A(d, "t^2 + 1"))).phi_t(), d.phi_t());
  EXPECT_COMPUTATION_ERROR(d.isogeny_transport(parse_twisted(*d.residue_field(), 2, "1 + T")), "not_an_isogeny");
}

TEST(Drinfeld, FrobeniusDescentInvertsTwist) {
  const DrinfeldModule d = make(3, 1, 3, "pi + 2*T");
  const auto back = d.frobenius_twist().frobenius_descent();
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->phi_t(), d.phi_t());
  EXPECT_FALSE(d.frobenius_descent().has_value());
}
