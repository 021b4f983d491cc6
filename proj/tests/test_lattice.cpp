#include "dmloc/lattice.hpp"
#include "dmloc/oracles.hpp"
#include "dmloc/poly_matrix.hpp"
#include "dmloc/text.hpp"
#include "test_support.hpp"

using namespace dmloc;

namespace {

CoeffRing ring_q(uint32_t q) { return CoeffRing(FiniteField::make(q, 1), q); }

std::vector<NormValue> logs(std::initializer_list<mpq_class> e, uint64_t q) {
  std::vector<NormValue> out;
  for (const auto& x : e) out.push_back(NormValue::from_log(x, q));
  return out;
}

std::shared_ptr<const DrinfeldModule> module(const CoeffRing& ring, const char* phi_t) {
  return std::make_shared<const DrinfeldModule>(ring, parse_twisted(*ring.residue_field(), ring.q(), phi_t));
}

CoeffElem A(const CoeffRing& ring, const char* s) { return parse_coeff_poly(*ring.residue_field(), s); }

}  // namespace

TEST(NormValue, OrderingAndLogs) {
  const NormValue a = NormValue::from_log(mpq_class(1, 2), 2), b = NormValue::root(2, 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.ceil_log(2), 1);
  EXPECT_EQ(a.floor_log(2), 0);
  EXPECT_LT(NormValue::zero(), NormValue::from_log(-5, 3));
  EXPECT_LT(NormValue::root(3, 2), NormValue::from_log(1, 2));
  EXPECT_TRUE(NormValue::root(3, 2).same_class(NormValue::root(12, 2), 2));
  EXPECT_FALSE(NormValue::root(3, 2).same_class(NormValue::root(6, 2), 2));
  EXPECT_FALSE(NormValue::root(3, 2).exact_log(2).has_value());
}

TEST(Lattice, AbstractOrthogonalInputUnchanged) {
  const CoeffRing ring = ring_q(2);
  const auto lat = NormedLattice::abstract(ring, logs({2, 0, 1}, 2));
  const auto b = reduce(lat);
  EXPECT_EQ(successive_minima(b), logs({0, 1, 2}, 2));
}

TEST(Lattice, SuccessiveMinima) {
  const CoeffRing ring = ring_q(3);
  EXPECT_EQ(successive_minima(reduce(NormedLattice::abstract(ring, logs({0, 0}, 3)))), logs({0, 0}, 3));
  EXPECT_EQ(successive_minima(reduce(NormedLattice::abstract(ring, logs({1, 2}, 3)))), logs({1, 2}, 3));
}

TEST(Lattice, SingleGeneratorIsItsOwnBasis) {
  const CoeffRing ring = ring_q(2);
  const auto d = module(ring, "1 + pi*T + T^2");
  const LocalElem lambda = parse_local(*ring.residue_field(), "pi^-3 + 1");
  const auto b = reduce(NormedLattice::drinfeld(d, {lambda}));
  ASSERT_EQ(b.rank(), 1u);
  EXPECT_EQ(*b.vectors[0].value, lambda);
  EXPECT_EQ(b.vectors[0].norm, NormValue::root(3, 2));
}

TEST(Lattice, RandomRank2MinimaMatchSearch) {
  const CoeffRing ring = ring_q(2);
  const FiniteField& k = *ring.residue_field();
  const auto d = module(ring, "pi + T + T^2");
  const std::vector<std::pair<const char*, const char*>> cases{
      {"pi^-3 + pi^-1", "pi^-3 + pi^-2 + 1"}, {"pi^-5", "pi^-5 + pi^-3"}, {"pi^-2 + 1", "pi^-4 + pi^-1"}};
  for (const auto& [a, b] : cases) {
    const auto lat = NormedLattice::drinfeld(d, {parse_local(k, a), parse_local(k, b)});
    const auto basis = reduce(lat);
    const auto brute = oracle::minima_by_search(lat, 4);
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(successive_minima(basis), *brute) << a << " | " << b;
    EXPECT_TRUE(oracle::orthogonality_certificate(lat, basis, 2));
  }
}

TEST(Lattice, ReductionErrors) {
  const CoeffRing ring = ring_q(2);
  const FiniteField& k = *ring.residue_field();
  const auto d = module(ring, "1 + T");
  const LocalElem x = parse_local(k, "pi^-3");
  EXPECT_COMPUTATION_ERROR(reduce(NormedLattice::drinfeld(d, {x, x})), "dependent_generators");
  // phi(t)(x) = x + x^2 kills 1: integral torsion makes the norm degenerate.
  EXPECT_COMPUTATION_ERROR(reduce(NormedLattice::drinfeld(d, {parse_local(k, "pi^-1"), parse_local(k, "pi^-1 + 1")})),
                           "not_discrete");
}

TEST(Lattice, VolumeOrthogonal) {
  const CoeffRing ring = ring_q(2);
  const auto sup = reduce(NormedLattice::abstract(ring, logs({0, 0}, 2)));
  EXPECT_EQ(volume_log(sup, 2), -2);
  EXPECT_EQ(volume_log(reduce(NormedLattice::abstract(ring, logs({1}, 2))), 2), 0);
  EXPECT_EQ(volume_log(reduce(NormedLattice::abstract(ring, logs({mpq_class(1, 2)}, 2))), 2), 0);
}

TEST(Lattice, VolumeDeterminant) {
  const CoeffRing ring = ring_q(2);
  const auto b = reduce(NormedLattice::abstract(ring, logs({0, 1}, 2)));
  const PolyMatrix id{{ring.one(), ring.zero()}, {ring.zero(), ring.one()}};
  EXPECT_EQ(volume_det(b, ring, id).vol_log, volume_log(b, 2));

  const auto b1 = reduce(NormedLattice::abstract(ring, logs({0}, 2)));
  const auto dv = volume_det(b1, ring, PolyMatrix{{ring.t()}});
  EXPECT_EQ(dv.sublattice_vol_log, volume_log(b1, 2) + 1);
  EXPECT_TRUE(dv.index_consistent);

  const PolyMatrix m{{A(ring, "t^2 + 1"), A(ring, "t")}, {A(ring, "t + 1"), A(ring, "t^2")}};
  const auto dm = volume_det(b, ring, m);
  const auto factors = smith_invariant_factors(ring, m);
  int smith = 0;
  for (const auto& f : factors) smith += f.degree();
  EXPECT_EQ(dm.det_degree, smith);
  EXPECT_EQ(dm.sublattice_vol_log, volume_log(b, 2) + smith);
  EXPECT_COMPUTATION_ERROR(volume_det(b, ring, PolyMatrix{{ring.one(), ring.t()}, {ring.one(), ring.t()}}),
                           "singular_matrix");
}

TEST(Lattice, SmithFactorsDivide) {
  const CoeffRing ring = ring_q(3);
  const PolyMatrix m{{A(ring, "t^2 + 1"), A(ring, "t"), A(ring, "2")},
                     {A(ring, "t + 1"), A(ring, "t^2"), A(ring, "t")},
                     {A(ring, "t^3"), A(ring, "1"), A(ring, "t + 2")}};
  const auto f = smith_invariant_factors(ring, m);
  ASSERT_EQ(f.size(), 3u);
  for (size_t i = 0; i + 1 < f.size(); ++i) EXPECT_TRUE(f[i + 1].divmod(f[i]).second.is_zero());
  FPoly prod = ring.one();
  for (const auto& x : f) prod = prod * x;
  EXPECT_EQ(prod, poly_determinant(ring, m).monic());
}

TEST(Lattice, CountPoints) {
  const CoeffRing ring = ring_q(2);
  const auto lat = NormedLattice::abstract(ring, logs({0}, 2));
  const auto b = reduce(lat);
  const NormValue one = NormValue::from_log(0, 2);
  EXPECT_EQ(count_points(lat, b, one, 2), 8);
  EXPECT_EQ(count_points(lat, b, one, 2, CountMode::Enumerate), 8);
  EXPECT_EQ(count_points(lat, b, one, 0, CountMode::Enumerate), 2);
  EXPECT_EQ(count_points(lat, b, NormValue::from_log(-1, 2), 0, CountMode::Enumerate), 1);
}

TEST(Lattice, CountStabilizes) {
  const CoeffRing ring = ring_q(3);
  const auto lat = NormedLattice::abstract(ring, logs({mpq_class(1, 2), mpq_class(7, 3)}, 3));
  const auto b = reduce(lat);
  const NormValue one = NormValue::from_log(0, 3);
  const int64_t vol = volume_log(b, 3);
  const int64_t stab = stabilization_index(b, 3, one);
  for (int64_t i = std::max<int64_t>(stab, 0); i <= stab + 2; ++i) {
    const mpz_class n = count_points(lat, b, one, i, CountMode::Enumerate);
    mpz_class want;
    mpz_ui_pow_ui(want.get_mpz_t(), 3, static_cast<unsigned long>(2 * i - vol));
    EXPECT_EQ(n, want) << i;
  }
}

TEST(Lattice, GeneratorBound) {
  const CoeffRing ring = ring_q(2);
  const auto empty = NormedLattice::abstract(ring, {});
  EXPECT_TRUE(generator_bound(empty, reduce(empty)).generates);
  const auto lat = NormedLattice::abstract(ring, logs({0, 2}, 2));
  const auto gb = generator_bound(lat, reduce(lat));
  EXPECT_TRUE(gb.generates);
  EXPECT_EQ(gb.bound_log, 2);
  const auto low = NormedLattice::abstract(ring, logs({-1}, 2));
  EXPECT_COMPUTATION_ERROR(generator_bound(low, reduce(low)), "min_norm");
}

TEST(Lattice, VolumeRoutesAgreeOnDrinfeldLattice) {
  const CoeffRing ring = ring_q(3);
  const FiniteField& k = *ring.residue_field();
  const auto d = module(ring, "pi + T");
  const auto lat = NormedLattice::drinfeld(d, {parse_local(k, "pi^-2 + 1"), parse_local(k, "pi^-4 + pi^-1")});
  const auto vr = volume_report(lat, reduce(lat));
  EXPECT_TRUE(vr.agree);
  EXPECT_TRUE(vr.by_counting.has_value());
}
