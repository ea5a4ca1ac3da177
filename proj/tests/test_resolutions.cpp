#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "reescov/errors.hpp"
#include "reescov/graphs.hpp"
#include "reescov/homology.hpp"
#include "reescov/resolutions.hpp"

using namespace reescov;

namespace {

std::vector<Monomial> parsed(const MonomialIdeal& i, const std::vector<std::string>& names) {
  std::vector<Monomial> out;
  for (const auto& n : names) out.push_back(i.universe()->parse(n));
  return out;
}

std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& facets) {
  std::vector<std::uint32_t> faces;
  for (auto f : facets) {
    for (std::uint32_t s = f;; s = (s - 1) & f) {
      faces.push_back(s);
      if (s == 0) break;
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

std::uint32_t face(std::initializer_list<int> vs) {
  std::uint32_t m = 0;
  for (int v : vs) m |= 1U << (v - 1);
  return m;
}

}  // namespace

TEST_CASE("rational rank") {
  std::vector<SparseRow> rows{{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{0, 1}, {2, -1}}};
  CHECK(rational_rank(rows) == 2);
  CHECK(rational_rank(std::vector<SparseRow>{}) == 0);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> v(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 7, c = 1 + (trial * 3) % 8;
    std::vector<std::vector<std::int64_t>> dense(r, std::vector<std::int64_t>(c));
    std::vector<SparseRow> sparse(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        dense[i][j] = (trial % 3 == 0 && j % 2 == 1) ? dense[i][j - 1] * 2 : v(rng);
        if (dense[i][j] != 0) sparse[i].push_back({j, dense[i][j]});
      }
    }
    CHECK(rational_rank(sparse) == oracle::rank_mod_p(dense));
  }
}

TEST_CASE("reduced homology") {
  CHECK(reduced_homology(std::vector<std::uint32_t>{0}) == std::vector<std::size_t>{1});
  const auto circle = closure({face({1, 2}), face({2, 3}), face({1, 3})});
  auto h = reduced_homology(circle);
  h.resize(3);
  CHECK(h == std::vector<std::size_t>{0, 0, 1});
  const auto two_points = closure({face({1}), face({2})});
  h = reduced_homology(two_points);
  h.resize(2);
  CHECK(h == std::vector<std::size_t>{0, 1});
  // six-vertex projective plane: no rational homology
  const auto rp2 = closure({face({1, 2, 3}), face({1, 3, 4}), face({1, 4, 5}), face({1, 5, 6}),
                            face({1, 6, 2}), face({2, 3, 5}), face({3, 4, 6}), face({4, 5, 2}),
                            face({5, 6, 3}), face({6, 2, 4})});
  for (auto d : reduced_homology(rp2)) CHECK(d == 0);
}

TEST_CASE("linear quotients checks") {
  const auto i = testing::ideal(3, {"x2", "x1*x3"});
  const auto good = parsed(i, {"x2^2", "x1*x2*x3", "x1^2*x3^2"});
  const auto check = check_linear_quotients(good);
  REQUIRE(check);
  CHECK(verify_certificate(*check.certificate));
  CHECK(check.certificate->witnesses[2][0] == 1);

  const auto bad = parsed(i, {"x1^2*x3^2", "x1*x2*x3", "x2^2"});
  const auto failed = check_linear_quotients(bad);
  CHECK_FALSE(failed);
  CHECK(failed.failed_position == 2);

  CHECK(check_linear_quotients(parsed(i, {"x1"})));

  const auto found = find_linear_quotients_order(power(i, 2).generators());
  REQUIRE(found.certificate);
  CHECK(found.method == OrderSearchMethod::ascending_heuristic);

  const auto ci = testing::ideal(4, {"x1*x3", "x2*x4"});
  const auto none = find_linear_quotients_order(ci.generators());
  CHECK_FALSE(none.certificate);
  CHECK(none.method == OrderSearchMethod::none);

  CHECK_THROWS_AS(find_linear_quotients_order(ci.generators(), {}, parsed(ci, {"x1*x3"})), InputError);
}

TEST_CASE("order search agrees with exhaustive permutations") {
  std::mt19937_64 rng(4242);
  int agree = 0, with_order = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const auto ideal = testing::random_ideal(rng, n, 2 + trial % 5, 2);
    const auto expected = oracle::exists_linear_quotients_order(oracle::exps(ideal.generators(), n));
    const auto found = find_linear_quotients_order(ideal.generators());
    if (found.certificate) {
      CHECK(verify_certificate(*found.certificate));
      CHECK(oracle::has_linear_quotients(oracle::exps(found.certificate->ordering, n)));
      ++with_order;
    }
    agree += found.certificate.has_value() == expected;
  }
  CHECK(agree == 200);
  CHECK(with_order > 20);
  CHECK(with_order < 200);
}

TEST_CASE("betti tables of worked examples") {
  auto xyz = make_universe({"x", "y", "z"});
  const MonomialIdeal tri(xyz, {xyz->parse("x*y"), xyz->parse("x*z"), xyz->parse("y*z")});
  const auto t = betti_table(tri);
  CHECK(t.totals() == std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t>{{{0, 2}, 3}, {{1, 3}, 2}});
  CHECK(has_linear_resolution(tri));
  CHECK(lcm_lattice(tri).size() == 4);

  const auto ci = testing::ideal(4, {"x1*x3", "x2*x4"});
  CHECK(betti_table(ci).totals() ==
        std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t>{{{0, 2}, 2}, {{1, 4}, 1}});
  CHECK_FALSE(has_linear_resolution(ci));
  CHECK(format_betti_table(betti_table(ci)) == "       0 1\ntotal: 2 1\n    2: 2 .\n    3: . 1\n");

  const auto principal = testing::ideal(2, {"x1"});
  CHECK(betti_table(principal).totals().size() == 1);
  CHECK(is_componentwise_linear(principal).componentwise_linear);

  for (unsigned k = 1; k <= 3; ++k) CHECK(has_linear_resolution(power(testing::ideal(2, {"x1", "x2"}), k)));
}

TEST_CASE("componentwise linearity") {
  const auto p3 = is_componentwise_linear(testing::ideal(3, {"x2", "x1*x3"}));
  CHECK(p3.componentwise_linear);
  CHECK(p3.range_limited);
  CHECK(p3.per_degree == std::vector<std::pair<unsigned, bool>>{{1, true}, {2, true}});
  CHECK_FALSE(is_componentwise_linear(testing::ideal(4, {"x1*x3", "x2*x4"})).componentwise_linear);
}

TEST_CASE("betti numbers agree with the taylor complex") {
  std::mt19937_64 rng(8);
  std::vector<MonomialIdeal> corpus;
  for (int trial = 0; trial < 50; ++trial) {
    corpus.push_back(testing::random_ideal(rng, 3 + trial % 3, 2 + trial % 6, 2));
  }
  corpus.push_back(cover_ideal(standard_family(Family::cycle, 5)));
  corpus.push_back(cover_ideal(standard_family(Family::fan, 3)));
  corpus.push_back(power(cover_ideal(standard_family(Family::path, 3)), 2));
  corpus.push_back(cover_ideal(standard_family(Family::friendship, 2)));

  for (const auto& ideal : corpus) {
    const std::size_t n = ideal.universe()->s_count();
    const auto gens = oracle::exps(ideal.generators(), n);
    const auto table = betti_table(ideal);
    std::map<std::pair<int, oracle::Exps>, std::size_t> got;
    for (const auto& m : table.multigraded()) got[{static_cast<int>(m.homological), oracle::exps(m.multidegree, n)}] += m.rank;
    CHECK(got == oracle::taylor_betti(gens));

    // Euler characteristic at every lattice multidegree
    for (const auto& [b, chi] : oracle::taylor_euler(gens)) {
      long alternating = 0;
      for (const auto& [key, beta] : got) {
        if (key.second == b) alternating += (key.first % 2 == 0 ? 1 : -1) * static_cast<long>(beta);
      }
      CHECK(alternating == chi);
    }
  }
}

TEST_CASE("resource bounds") {
  const auto big = power(testing::ideal(4, {"x1", "x2", "x3", "x4"}), 3);
  BettiOptions small;
  small.max_generators = 5;
  CHECK_THROWS_AS(betti_table(big, small), ResourceLimitError);
  OrderSearchOptions tiny;
  tiny.max_generators = 2;
  const auto ci = testing::ideal(6, {"x1*x2", "x3*x4", "x5*x6"});
  CHECK_THROWS_AS(find_linear_quotients_order(ci.generators(), tiny), ResourceLimitError);
}
