#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "reescov/errors.hpp"
#include "reescov/graph_io.hpp"
#include "reescov/graphs.hpp"

using namespace reescov;

namespace {

std::vector<std::string> cover_labels(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& c : minimal_vertex_covers(g)) {
    std::string s;
    for (auto v : c.ids()) s += (s.empty() ? "" : ",") + g.vertex(v).label;
    out.push_back("{" + s + "}");
  }
  return out;
}

std::size_t degree_of(const Graph& g, VertexId v) {
  return static_cast<std::size_t>(__builtin_popcountll(g.neighbors(v)));
}

}  // namespace

TEST_CASE("build_graph small cases") {
  const std::vector<std::string> k2{"x1", "x2"};
  const std::vector<std::pair<std::string, std::string>> e{{"x1", "x2"}};
  const Graph g = build_graph(k2, e);
  CHECK(g.size() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));

  const std::vector<std::string> one{"x1"};
  CHECK(build_graph(one, {}).edge_count() == 0);

  CHECK(standard_family(Family::path, 3) ==
        build_graph(testing::xs(3), std::vector<std::pair<std::string, std::string>>{
                                        {"x1", "x2"}, {"x2", "x3"}}));
}

TEST_CASE("build_graph rejects bad input") {
  const std::vector<std::string> dup{"x1", "x1"};
  CHECK_THROWS_AS(build_graph(dup, {}), InputError);
  const std::vector<std::string> two{"x1", "x2"};
  const std::vector<std::pair<std::string, std::string>> loop{{"x1", "x1"}};
  CHECK_THROWS_AS(build_graph(two, loop), InputError);
  const std::vector<std::pair<std::string, std::string>> twice{{"x1", "x2"}, {"x2", "x1"}};
  CHECK_THROWS_AS(build_graph(two, twice), InputError);
  const std::vector<std::pair<std::string, std::string>> missing{{"x1", "x9"}};
  CHECK_THROWS_AS(build_graph(two, missing), InputError);
  const std::vector<std::string> reserved{"y1", "x2"};
  CHECK_THROWS_AS(build_graph(reserved, {}), InputError);
  const std::vector<std::string> t{"t"};
  CHECK_THROWS_AS(build_graph(t, {}), InputError);
  CHECK_THROWS_AS(standard_family(Family::cycle, 2), InputError);
}

TEST_CASE("family sizes") {
  CHECK(standard_family(Family::path, 3).edge_count() == 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Graph f = standard_family(Family::friendship, n);
    CHECK(f.size() == 2 * n + 1);
    CHECK(f.edge_count() == 3 * n);
  }
  const Graph fan = standard_family(Family::fan, 3);
  CHECK(fan.size() == 4);
  CHECK(fan.edge_count() == 5);
  CHECK(standard_family(Family::complete, 4).edge_count() == 6);
  CHECK(standard_family(Family::cycle, 5).edge_count() == 5);
  const Graph kab = standard_family(Family::complete_bipartite, 2, 3);
  CHECK(kab.edge_count() == 6);
  REQUIRE(kab.parts());
  CHECK(kab.parts()->x.size() == 2);
  const Graph star = standard_family(Family::star, 3);
  CHECK(star.labels() == std::vector<std::string>{"z1", "z2", "z3", "x1"});
  CHECK(degree_of(star, 3) == 3);
}

TEST_CASE("cone") {
  const Graph tri = cone(standard_family(Family::path, 2));
  CHECK(tri.size() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.labels() == std::vector<std::string>{"z1", "z2", "x1"});

  const std::vector<Graph> two{standard_family(Family::path, 2), standard_family(Family::path, 2)};
  const Graph c = cone(disjoint_union(two));
  const Graph f = standard_family(Family::friendship, 2);
  CHECK(c.size() == f.size());
  CHECK(c.edge_count() == f.edge_count());
  std::vector<std::size_t> dc, df;
  for (VertexId v = 0; v < c.size(); ++v) dc.push_back(degree_of(c, v));
  for (VertexId v = 0; v < f.size(); ++v) df.push_back(degree_of(f, v));
  std::sort(dc.begin(), dc.end());
  std::sort(df.begin(), df.end());
  CHECK(dc == df);

  CHECK(cone(standard_family(Family::path, 3)) == standard_family(Family::fan, 3));
}

TEST_CASE("attach") {
  const Graph v = standard_family(Family::path, 1);
  const Graph k2 = standard_family(Family::path, 2);
  const std::vector<Graph> one{k2};
  const Graph tri = attach(v, one);
  CHECK(tri.labels() == std::vector<std::string>{"z1", "z2", "x1"});
  CHECK(tri.edge_count() == 3);

  const std::vector<Graph> two{k2, k2};
  const Graph g = attach(k2, two);
  CHECK(g.size() == 6);
  CHECK(g.edge_count() == 7);
  CHECK(g.labels() == std::vector<std::string>{"z1_1", "z1_2", "z2_1", "z2_2", "x1", "x2"});
  CHECK(g.vertex(0).kind == Vertex::Kind::attached);
  CHECK(g.vertex(0).host == 0);

  const std::vector<Graph> leaves{standard_family(Family::edgeless, 3)};
  CHECK(attach(v, leaves) == standard_family(Family::star, 3));

  CHECK_THROWS_AS(attach(k2, one), InputError);
}

TEST_CASE("cm bipartite graphs from posets") {
  const Graph a1 = cm_bipartite_from_poset(Poset::antichain(1));
  CHECK(a1.size() == 2);
  CHECK(a1.edge_count() == 1);
  const Graph c2 = cm_bipartite_from_poset(Poset::chain(2));
  CHECK(c2.size() == 4);
  CHECK(c2.edge_count() == 3);
  CHECK(c2.labels() == std::vector<std::string>{"a1", "a2", "b1", "b2"});
  CHECK(c2.has_edge(0, 3));
  CHECK_FALSE(c2.has_edge(1, 2));
  const Graph a2 = cm_bipartite_from_poset(Poset::antichain(2));
  CHECK(a2.edge_count() == 2);
  CHECK(is_unmixed(c2));

  CHECK_THROWS_AS(Poset({"p", "q"}, {{0, 1}, {1, 0}}), InputError);
}

TEST_CASE("cameron walker") {
  const Graph core = standard_family(Family::complete_bipartite, 1, 1);
  const std::vector<std::size_t> one{1};
  const Graph g = cameron_walker(core, one, one);
  CHECK(g.size() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(is_unmixed(g));

  const std::vector<std::size_t> leaves{2};
  const Graph h = cameron_walker(core, leaves, one);
  CHECK(h.size() == 6);
  CHECK(h.edge_count() == 6);

  const Graph tri = standard_family(Family::cycle, 3);
  CHECK_THROWS_AS(cameron_walker(tri, one, one), InputError);
}

TEST_CASE("minimal vertex covers on small graphs") {
  CHECK(cover_labels(standard_family(Family::path, 2)) == std::vector<std::string>{"{x1}", "{x2}"});
  CHECK(cover_labels(standard_family(Family::path, 3)) ==
        std::vector<std::string>{"{x1,x3}", "{x2}"});
  CHECK(cover_labels(standard_family(Family::cycle, 4)) ==
        std::vector<std::string>{"{x1,x3}", "{x2,x4}"});
  CHECK(cover_labels(standard_family(Family::edgeless, 3)) == std::vector<std::string>{"{}"});
}

TEST_CASE("unmixed and chordal") {
  const Graph c4 = standard_family(Family::cycle, 4);
  CHECK(is_unmixed(c4));
  CHECK_FALSE(is_chordal(c4));
  CHECK_FALSE(is_unmixed(standard_family(Family::path, 3)));
  const Graph tri = standard_family(Family::complete, 3);
  CHECK(is_unmixed(tri));
  CHECK(is_chordal(tri));
  CHECK(is_chordal(standard_family(Family::fan, 4)));
  CHECK_FALSE(is_chordal(standard_family(Family::cycle, 5)));
}

TEST_CASE("covers agree with subset enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const double p = 0.15 + 0.1 * (trial % 7);
    const Graph g = testing::random_graph(rng, n, p);
    auto expected = oracle::minimal_covers(g);
    std::vector<std::uint64_t> got;
    for (const auto& c : minimal_vertex_covers(g)) {
      CHECK(c.minimal);
      CHECK(is_vertex_cover(g, c.members));
      got.push_back(c.members);
    }
    // canonical order: strictly decreasing in lex
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(compare_lex_sets(got[i - 1], got[i]) > 0);
    std::sort(expected.begin(), expected.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == expected);

    // complements of maximal independent sets
    std::vector<std::uint64_t> complements;
    for (auto s : maximal_independent_sets(g)) complements.push_back(g.all_vertices() & ~s);
    std::sort(complements.begin(), complements.end());
    CHECK(complements == expected);

    // chordality against a brute-force perfect elimination search on tiny graphs
    if (n <= 7) {
      std::vector<VertexId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      bool peo_exists = false;
      do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          std::uint64_t later = 0;
          for (std::size_t j = i + 1; j < n; ++j) {
            if (g.has_edge(perm[i], perm[j])) later |= std::uint64_t{1} << perm[j];
          }
          for (std::size_t a = 0; a < n && ok; ++a) {
            for (std::size_t b = a + 1; b < n && ok; ++b) {
              if (((later >> a) & 1U) && ((later >> b) & 1U) && !g.has_edge(a, b)) ok = false;
            }
          }
        }
        peo_exists = ok;
      } while (!peo_exists && std::next_permutation(perm.begin(), perm.end()));
      CHECK(is_chordal(g) == peo_exists);
    }
  }
}

TEST_CASE("graph json") {
  const Graph g = graph_from_json(
      R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]], "parts": {"X": ["a", "c"], "Y": ["b"]}})");
  CHECK(g.size() == 3);
  REQUIRE(g.parts());
  CHECK(graph_from_json(graph_to_json(g)) == g);

  CHECK_THROWS_AS(graph_from_json("{bad"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"edges": []})"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices": ["a", "b"], "edges": [["a", "q"]]})"), InputError);
  CHECK_THROWS_AS(
      graph_from_json(
          R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"], ["a", "c"]], "parts": {"X": ["a"], "Y": ["b", "c"]}})"),
      InputError);
}

TEST_CASE("construction expressions") {
  CHECK(parse_construction("path:4").graph == standard_family(Family::path, 4));
  CHECK(parse_construction("cone(path:3)").graph == standard_family(Family::fan, 3));
  CHECK(parse_construction("edge").graph == standard_family(Family::path, 2));
  CHECK(parse_construction("complete_bipartite:2:3").graph.edge_count() == 6);

  const auto a = parse_construction("attach(edge;edge,edge)");
  CHECK(a.kind == Construction::Kind::attach);
  CHECK(a.attached.size() == 2);
  CHECK(a.graph.size() == 6);

  const auto cw = parse_construction("cw(edge;leaves=1;triangles=1)");
  CHECK(cw.kind == Construction::Kind::cameron_walker);
  CHECK(cw.one_leaf_per_x);
  CHECK(cw.graph.size() == 5);
  CHECK_FALSE(parse_construction("cw(edge;leaves=2;triangles=1)").one_leaf_per_x);

  CHECK(parse_construction("cmb(chain:2)").graph.edge_count() == 3);

  DslContext ctx;
  ctx.seed = 11;
  CHECK(parse_construction("random:9:0.4", ctx).graph == parse_construction("random:9:0.4", ctx).graph);

  CHECK_THROWS_AS(parse_construction("path:0"), InputError);
  CHECK_THROWS_AS(parse_construction("blob:3"), InputError);
  CHECK_THROWS_AS(parse_construction("attach(edge;edge)"), InputError);
  CHECK_THROWS_AS(parse_construction("cone(path:3"), InputError);
  CHECK_THROWS_AS(parse_construction("missing_file.json"), InputError);
}
