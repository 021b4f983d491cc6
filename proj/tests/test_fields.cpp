#include <random>

#include "dmloc/coeff_ring.hpp"
#include "dmloc/linear_algebra.hpp"
#include "dmloc/oracles.hpp"
#include "dmloc/text.hpp"
#include "test_support.hpp"

using namespace dmloc;

namespace {

LocalElem L(const FieldRef& k, const char* s) { return parse_local(*k, s); }

}  // namespace

TEST(FiniteField, DefiningRelationInF4) {
  const FieldRef k = FiniteField::make(2, 2);
  const FFElem g = k->generator();
  EXPECT_EQ(g * g, g + k->one());
  EXPECT_EQ(g.frobenius(), g + k->one());
  EXPECT_EQ(to_string(g.frobenius()), "g+1");
}

TEST(FiniteField, InterningAndSize) {
  EXPECT_EQ(FiniteField::make(3, 2).get(), FiniteField::make(3, 2).get());
  EXPECT_EQ(FiniteField::make(2, 16)->size(), 65536u);
  EXPECT_COMPUTATION_ERROR(FiniteField::make(2, 17), "field_too_large");
  EXPECT_COMPUTATION_ERROR(FiniteField::make(4, 1), "bad_field");
}

TEST(FiniteField, AxiomsExhaustiveInF9) {
  const FieldRef k = FiniteField::make(3, 2);
  for (const auto& a : k->elements()) {
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(a.pow_q(3).root_q(3), a);
    EXPECT_EQ(a.pow(9), a);
    for (const auto& b : k->elements()) {
      EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
      EXPECT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
    }
  }
}

TEST(FiniteField, DivisionByZeroIsDistinct) {
  const FieldRef k = FiniteField::make(2, 3);
  EXPECT_COMPUTATION_ERROR(k->zero().inverse(), "division_by_zero");
  EXPECT_COMPUTATION_ERROR(LocalElem(k.get()).inverse(), "division_by_zero");
}

TEST(FiniteField, TraceAndSubfields) {
  const FieldRef k = FiniteField::make(2, 4);
  EXPECT_EQ(k->subfield(4).size(), 4u);
  EXPECT_FALSE(k->has_subfield(8));
  size_t zero_trace = 0;
  for (const auto& x : k->elements()) zero_trace += k->absolute_trace(x) == 0;
  EXPECT_EQ(zero_trace, 8u);
}

TEST(LocalElem, Valuations) {
  const FieldRef k = FiniteField::make(2, 1);
  EXPECT_EQ(L(k, "pi^-1").valuation().value, -1);
  EXPECT_EQ(L(k, "(1 + pi)/pi^2").valuation().value, -2);
  EXPECT_EQ(L(k, "(pi^3 + pi^5)/(pi + pi^2)").valuation().value, 2);
  EXPECT_TRUE(LocalElem(k.get()).valuation().is_infinite());
}

TEST(LocalElem, ValuationAgreesWithSeriesOracle) {
  std::mt19937_64 rng(5);
  for (uint32_t p : {2u, 3u}) {
    const FieldRef k = FiniteField::make(p, 2);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<FFElem> n, d;
      for (int i = 0; i < 5; ++i) n.push_back(k->element(static_cast<uint32_t>(rng() % k->size())));
      for (int i = 0; i < 4; ++i) d.push_back(k->element(static_cast<uint32_t>(rng() % k->size())));
      d[0] = k->one();
      const int shift = static_cast<int>(rng() % 9) - 4;
      const FPoly num(k.get(), n);
      if (num.is_zero()) continue;
      const LocalElem x = LocalElem::fraction(num, FPoly(k.get(), d), shift);
      EXPECT_EQ(x.valuation().value, *oracle::valuation_by_series(x)) << to_string(x);
    }
  }
}

TEST(LocalElem, FieldOperations) {
  const FieldRef k = FiniteField::make(3, 1);
  const LocalElem pi = LocalElem::pi(k.get());
  EXPECT_EQ(pi.inverse(), L(k, "pi^-1"));
  const LocalElem a = L(k, "(1 + pi)/(2 + pi^2)"), b = L(k, "pi^-3 + 2*pi");
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a.frobenius(), a * a * a);
  EXPECT_EQ((a + b).pow_q(3), a.pow_q(3) + b.pow_q(3));
  EXPECT_TRUE(a.pow_q(3).is_qth_power(3));
  EXPECT_EQ(a.pow_q(3).root_q(3), a);
}

TEST(LocalElem, PrintParseRoundTrip) {
  const FieldRef k = FiniteField::make(2, 2);
  for (const char* s : {"pi^-2", "(g+1)*pi^-2 + pi", "(pi^-1 + 1)/(1 + pi)", "g", "0", "1 + g*pi^3"}) {
    const LocalElem x = L(k, s);
    EXPECT_EQ(L(k, to_string(x).c_str()), x) << s;
    EXPECT_EQ(to_string(L(k, to_string(x).c_str())), to_string(x));
  }
}

TEST(LocalElem, ParseErrorsCarryColumns) {
  const FieldRef k = FiniteField::make(2, 1);
  EXPECT_PARSE_ERROR_AT(parse_local(*k, "pi^"), 1, 4);
  EXPECT_THROW(parse_local(*k, "pi + x"), ParseError);
  EXPECT_THROW(parse_local(*k, "(1 + pi"), ParseError);
}

TEST(LinearAlgebra, SolveAgainstCramer) {
  const FieldRef k = FiniteField::make(2, 2);
  const FFElem g = k->generator(), one = k->one(), zero = k->zero();
  const Matrix<FFElem> m{{one, one}, {g, g * g}};
  const std::vector<FFElem> b{zero, one};
  const auto x = solve_linear_system(m, b);
  const FFElem det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  EXPECT_EQ(x[0], (b[0] * m[1][1] - m[0][1] * b[1]) / det);
  EXPECT_EQ(x[1], (m[0][0] * b[1] - b[0] * m[1][0]) / det);

  const Matrix<FFElem> id{{one, zero}, {zero, one}};
  EXPECT_EQ(solve_linear_system(id, std::vector<FFElem>{g, one}), (std::vector<FFElem>{g, one}));
  EXPECT_COMPUTATION_ERROR(solve_linear_system(Matrix<FFElem>{{one, one}, {one, one}}, b), "singular_matrix");
}

TEST(LinearAlgebra, LocalSystem) {
  const FieldRef k = FiniteField::make(3, 1);
  const Matrix<LocalElem> m{{L(k, "pi^-1"), L(k, "1 + pi")}, {L(k, "2"), L(k, "1/(1 + pi)")}};
  const std::vector<LocalElem> b{L(k, "pi"), L(k, "pi^-2")};
  const auto x = solve_linear_system(m, b);
  EXPECT_EQ(m[0][0] * x[0] + m[0][1] * x[1], b[0]);
  EXPECT_EQ(m[1][0] * x[0] + m[1][1] * x[1], b[1]);
}

TEST(CoeffRing, AbsInfinity) {
  const CoeffRing ring(FiniteField::make(2, 1), 2);
  const FiniteField& k = *ring.residue_field();
  EXPECT_EQ(ring.abs_infinity(parse_coeff_poly(k, "t^2 + 1")), 2);
  EXPECT_EQ(ring.abs_infinity(ring.one()), 0);
  EXPECT_FALSE(ring.abs_infinity(ring.zero()).has_value());
}

TEST(CoeffRing, EnumerateByDegree) {
  const CoeffRing r2(FiniteField::make(2, 1), 2);
  EXPECT_EQ(r2.enumerate_by_degree(-1).size(), 1u);
  EXPECT_EQ(r2.enumerate_by_degree(0).size(), 2u);
  EXPECT_EQ(r2.enumerate_by_degree(1).size(), 4u);
  const CoeffRing r3(FiniteField::make(3, 1), 3);
  const auto all = r3.enumerate_by_degree(2);
  ASSERT_EQ(all.size(), 27u);
  std::set<std::string> distinct;
  for (const auto& a : all) {
    EXPECT_LE(a.degree(), 2);
    distinct.insert(to_string(a, "t"));
  }
  EXPECT_EQ(distinct.size(), 27u);
}

TEST(CoeffRing, ConstantsLiveInSubfield) {
  const CoeffRing ring(FiniteField::make(2, 2), 2);
  EXPECT_EQ(ring.constants().size(), 2u);
  EXPECT_COMPUTATION_ERROR(ring.check_member(parse_coeff_poly(*ring.residue_field(), "g*t")), "not_in_ring");
}
