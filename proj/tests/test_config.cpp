#include <random>

#include "dmloc/config.hpp"
#include "dmloc/report.hpp"
#include "test_support.hpp"

using namespace dmloc;

TEST(Config, ParsesSections) {
  const auto c = parse_config(R"(# comment
[field]
p = 3
n = 2
modulus = "x^2 + 1"

[drinfeld]
phi_t = "pi + g*T"

[lattice]
generators = ["pi^-2", "pi^-1 + g"]
sublattice = [["t", "1"], ["0", "t^2"]]

[caps]
ext = 6
)");
  EXPECT_EQ(c.p, 3u);
  EXPECT_EQ(c.n, 2u);
  EXPECT_EQ(c.modulus, "x^2 + 1");
  EXPECT_EQ(c.phi_t, "pi + g*T");
  EXPECT_EQ(c.generators.size(), 2u);
  EXPECT_EQ(c.sublattice[1][1], "t^2");
  EXPECT_EQ(c.cap_ext, 6u);
  EXPECT_EQ(c.cap_degree, 4u);
  EXPECT_EQ(c.cap_iterations, 100000u);
  const Problem p(c);
  EXPECT_EQ(p.q(), 9u);
  EXPECT_EQ(p.generators().size(), 2u);
  EXPECT_TRUE(p.sublattice().has_value());
}

TEST(Config, ErrorPositions) {
  EXPECT_PARSE_ERROR_AT(parse_config("[field]\np = 2\n[nope]\n"), 3, 2);
  EXPECT_PARSE_ERROR_AT(parse_config("[field]\n  bogus = 1\n"), 2, 3);
  EXPECT_PARSE_ERROR_AT(parse_config("[field]\np = 2\np = 3\n"), 3, 1);
  EXPECT_PARSE_ERROR_AT(parse_config("[field]\np = [1,\n"), 2, 8);
  EXPECT_PARSE_ERROR_AT(parse_config("[field]\np = \"two\"\n"), 2, 5);
  EXPECT_PARSE_ERROR_AT(parse_config("p = 2\n"), 1, 1);
  EXPECT_THROW(parse_config("[caps]\next = 0\n"), ParseError);
}

TEST(Config, ElementErrorsPointIntoTheFile) {
  const auto c = parse_config("[field]\np = 2\n\n[height]\nelements = [\"pi^-1\", \"pi^\"]\n");
  EXPECT_PARSE_ERROR_AT(Problem(c).height_elements(), 5, 26);
}

TEST(Config, MissingKeysAndBadFields) {
  const Problem p(parse_config("[field]\np = 2\n"));
  EXPECT_THROW(p.module(), ParseError);
  EXPECT_THROW(p.as_w(), ParseError);
  EXPECT_THROW(Problem(parse_config("[field]\np = 4\n")), ParseError);
  EXPECT_THROW(Problem(parse_config("[field]\np = 2\nuniformizer = \"u\"\n")), ParseError);
  EXPECT_THROW(Problem(parse_config("[field]\np = 2\nn = 2\nmodulus = \"x^2 + 1\"\n")), ParseError);
}

namespace {

std::string random_element(std::mt19937_64& rng) {
  static const std::vector<std::string> pool{"pi^-1", "pi^-3 + 1", "(1 + pi)/pi^2", "g*pi^-2", "0", "1 + pi",
                                             "pi^-5 + pi^-2", "t", "t^2 + 1", "\"quoted\" text", "back\\slash"};
  return pool[rng() % pool.size()];
}

ProblemConfig random_config(std::mt19937_64& rng) {
  ProblemConfig c;
  c.p = rng() % 2 ? 2 : 3;
  c.n = 1 + static_cast<unsigned>(rng() % 3);
  if (rng() % 3 == 0) c.modulus = "x^2 + x + 1";
  if (rng() % 3 == 0) c.q = c.p;
  if (rng() % 2) c.phi_t = "pi + T";
  if (rng() % 3 == 0) c.lattice_mode = "abstract";
  for (size_t i = rng() % 3; i > 0; --i) c.generators.push_back(random_element(rng));
  for (size_t i = rng() % 3; i > 0; --i) c.log_norms.push_back(std::to_string(rng() % 5) + "/" + std::to_string(1 + rng() % 3));
  if (rng() % 3 == 0) c.sublattice = {{random_element(rng), "1"}, {"0", random_element(rng)}};
  for (size_t i = rng() % 3; i > 0; --i) c.height_elements.push_back(random_element(rng));
  if (rng() % 2) c.as_w = random_element(rng);
  if (rng() % 2) c.kummer_a = "t^2 + t + 1";
  if (rng() % 2) c.kummer_lambda = random_element(rng);
  if (rng() % 3 == 0) c.cap_degree = 1 + static_cast<unsigned>(rng() % 6);
  if (rng() % 3 == 0) c.cap_ext = 1 + static_cast<unsigned>(rng() % 20);
  if (rng() % 3 == 0) c.cap_iterations = 1 + rng() % 1000000;
  return c;
}

}  // namespace

TEST(Config, PrintParseRoundTripProperty) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const ProblemConfig c = random_config(rng);
    const std::string text = print_config(c);
    const ProblemConfig back = parse_config(text);
    EXPECT_EQ(back, c) << text;
    EXPECT_EQ(print_config(back), text);
  }
}

TEST(Config, CommentsAndSpacingDoNotMatter) {
  const auto a = parse_config("[field]\np=2\n[as_break]\nw=\"pi^-4\"\n");
  const auto b = parse_config("; leading\n\n  [ field ]\n  p   =   2   \n\n[as_break]\n# x\n w = \"pi^-4\"");
  EXPECT_EQ(a, b);
}

TEST(Report, HeightCommand) {
  const Problem p(parse_config("[field]\np = 2\n[height]\nelements = [\"pi^-3\"]\n"));
  EXPECT_EQ(cmd_height(p)["height"], 3);
  const Problem q(parse_config("[field]\np = 2\n[height]\nelements = [\"pi\"]\n"));
  EXPECT_EQ(cmd_height(q)["height"], 0);
  const Problem r(parse_config("[field]\np = 2\n[height]\nelements = [\"(1+pi)/pi^2\"]\n"));
  EXPECT_EQ(cmd_height(r)["height"], 2);
}

TEST(Report, NoFloatingPoint) {
  const Problem p(parse_config(
      "[field]\np = 3\n[drinfeld]\nphi_t = \"pi + T + T^2\"\n[lattice]\ngenerators = [\"pi^-3\", \"pi^-1 + 1\"]\n"));
  for (const auto& j : {cmd_volume(p), cmd_reduce(p), cmd_conductor(p)}) {
    std::function<void(const json&)> walk = [&](const json& x) {
      EXPECT_FALSE(x.is_number_float()) << x.dump();
      if (x.is_structured())
        for (const auto& y : x) walk(y);
    };
    walk(j);
    EXPECT_TRUE(j.contains("provenance"));
  }
}
