#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "reescov/errors.hpp"
#include "reescov/graphs.hpp"
#include "reescov/rees.hpp"

using namespace reescov;

namespace {

std::vector<std::string> formatted(const ReesPresentation& p, const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(p.universe()->format(m));
  return out;
}

}  // namespace

TEST_CASE("presentations of small ideals") {
  const auto k2 = rees_presentation(testing::ideal(2, {"x1", "x2"}));
  CHECK(format_basis(k2.basis()) == "x2*y1 - x1*y2\n");
  const auto p3 = rees_presentation(testing::ideal(3, {"x2", "x1*x3"}));
  CHECK(p3.universe()->format(p3.generators()[0]) == "x1*x3");
  CHECK(format_basis(p3.basis()) == "x2*y1 - x1*x3*y2\n");
  const auto c4 = rees_presentation(testing::ideal(4, {"x1*x3", "x2*x4"}));
  CHECK(format_basis(c4.basis()) == "x2*x4*y1 - x1*x3*y2\n");

  const auto st = p3.base().universe()->with_blocks(0, true);
  CHECK(st->format(p3.evaluate(p3.universe()->parse("x2*y1"))) == "x1*x2*x3*t");
  CHECK(p3.universe()->format(p3.mapped_product(p3.universe()->parse("y1*y2"))) == "x1*x2*x3");
  CHECK_THROWS_AS(rees_presentation(testing::ideal(2, {})), InputError);
}

TEST_CASE("x-condition") {
  const auto p3 = x_condition(rees_presentation(cover_ideal(standard_family(Family::path, 3))));
  CHECK(p3.holds);
  CHECK(p3.quadratic);
  const auto c4p = rees_presentation(cover_ideal(standard_family(Family::cycle, 4)));
  const auto c4 = x_condition(c4p);
  CHECK_FALSE(c4.holds);
  CHECK(formatted(c4p, c4.offending_generators) == std::vector<std::string>{"x2*x4*y1"});

  const auto starp = rees_presentation(cover_ideal(standard_family(Family::star, 3)));
  CHECK(format_basis(starp.basis()) == "x1*y1 - z1*z2*z3*y2\n");
  CHECK(x_condition(starp).holds);

  // center first in priority
  const std::vector<std::string> labels{"x1", "z1", "z2", "z3"};
  const std::vector<std::pair<std::string, std::string>> edges{{"x1", "z1"}, {"x1", "z2"}, {"x1", "z3"}};
  const auto flipped = rees_presentation(cover_ideal(build_graph(labels, edges)));
  CHECK_FALSE(x_condition(flipped).holds);
}

TEST_CASE("degenerate unit ideal") {
  const auto p = rees_presentation(cover_ideal(standard_family(Family::edgeless, 2)));
  CHECK(p.degenerate());
  CHECK(p.basis().empty());
  CHECK(x_condition(p).holds);
  const auto s = standard_monomials(p, 2);
  CHECK(s.members.empty());
  CHECK_FALSE(s.diagnostic.empty());
}

TEST_CASE("standard monomials") {
  const auto p3 = rees_presentation(testing::ideal(3, {"x2", "x1*x3"}));
  const auto s = standard_monomials(p3, 2);
  CHECK(formatted(p3, s.members) == std::vector<std::string>{"y2^2", "y1*y2", "y1^2"});
  CHECK(formatted(p3, s.mapped_generators) ==
        std::vector<std::string>{"x2^2", "x1*x2*x3", "x1^2*x3^2"});
  CHECK(minimal_generation_check(p3, 2));

  const auto k2 = rees_presentation(testing::ideal(2, {"x1", "x2"}));
  CHECK(formatted(k2, standard_monomials(k2, 1).mapped_generators) ==
        std::vector<std::string>{"x2", "x1"});
  CHECK(minimal_generation_check(k2, 3));
  CHECK(standard_monomials(k2, 3).members.size() == 4);
}

TEST_CASE("quadratic presentations minimally generate powers") {
  std::vector<Graph> corpus{standard_family(Family::path, 4),     standard_family(Family::fan, 3),
                            standard_family(Family::star, 4),     standard_family(Family::friendship, 2),
                            standard_family(Family::complete, 4), standard_family(Family::complete_bipartite, 2, 2)};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 12; ++i) corpus.push_back(testing::random_graph(rng, 4 + i % 4, 0.45));
  int quadratic_cases = 0;
  for (const auto& g : corpus) {
    const auto ideal = cover_ideal(g);
    if (ideal.is_unit()) continue;
    const auto p = rees_presentation(ideal);
    const auto x = x_condition(p);
    if (!x.quadratic) continue;
    ++quadratic_cases;
    for (unsigned k = 1; k <= 3; ++k) {
      const auto s = standard_monomials(p, k);
      const auto expected = oracle::power(oracle::exps(ideal.generators(), g.size()), k, g.size());
      CHECK(s.members.size() == expected.size());
      auto mapped = oracle::exps(s.mapped_generators, g.size());
      std::sort(mapped.begin(), mapped.end());
      CHECK(mapped == expected);
    }
  }
  CHECK(quadratic_cases >= 5);
}
