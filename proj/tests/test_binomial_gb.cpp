#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "reescov/binomial_gb.hpp"
#include "reescov/errors.hpp"
#include "reescov/graphs.hpp"
#include "reescov/monomials.hpp"

using namespace reescov;

namespace {

std::vector<Monomial> images_of(const MonomialIdeal& i) {
  std::vector<Monomial> out;
  for (const auto& g : i.generators()) out.push_back(g * Monomial::of(Var::t()));
  return out;
}

// S-part times the y-part evaluated at y_j -> gens[j].
Monomial evaluate(const Monomial& m, const std::vector<Monomial>& gens) {
  Monomial out = m.part(Block::s);
  for (const auto& term : m.terms()) {
    if (term.var.block() == Block::y) out = out * gens.at(term.var.index()).pow(term.exponent);
  }
  return out;
}

Binomial oriented(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  auto bin = make_binomial(order, a, b);
  REQUIRE(bin);
  return *bin;
}

}  // namespace

TEST_CASE("reduce and s-pairs") {
  auto u = make_universe(testing::xs(3), 2, false);
  const MonomialOrder sharp(OrderKind::sharp, u);
  const Binomial f = oriented(sharp, u->parse("x2*y1"), u->parse("x1*x3*y2"));
  CHECK(f.lead == u->parse("x2*y1"));
  const std::vector<Binomial> basis{f};
  CHECK_FALSE(reduce(f, basis, sharp));
  CHECK_FALSE(reduce(oriented(sharp, u->parse("x2^2*y1^2"), u->parse("x1^2*x3^2*y2^2")), basis, sharp));
  const Binomial other = oriented(sharp, u->parse("x1*y1"), u->parse("x3*y2"));
  const std::vector<Binomial> unrelated{oriented(sharp, u->parse("x3^2*y2^2"), u->parse("x1^3*y2^2"))};
  CHECK(reduce(other, unrelated, sharp) == other);
  CHECK_FALSE(s_pair(f, f, sharp));
  CHECK_FALSE(make_binomial(sharp, u->parse("x1"), u->parse("x1")));
}

TEST_CASE("buchberger small inputs") {
  auto u = make_universe(testing::xs(3), 2, false);
  const MonomialOrder sharp(OrderKind::sharp, u);
  const std::vector<Binomial> one{oriented(sharp, u->parse("x2*y1"), u->parse("x1*x3*y2"))};
  const auto gb = buchberger(one, sharp);
  CHECK(gb.reduced());
  CHECK(gb.elements() == one);
  CHECK(buchberger(std::vector<Binomial>{}, sharp).empty());
  CHECK(initial_ideal(gb).size() == 1);
  CHECK(u->format(initial_ideal(gb).generators().front()) == "x2*y1");
}

TEST_CASE("toric kernels of small cover ideals") {
  const auto k2 = cover_ideal(standard_family(Family::path, 2));
  CHECK(format_basis(toric_kernel(images_of(k2), k2.universe())) == "x2*y1 - x1*y2\n");
  const auto p3 = cover_ideal(standard_family(Family::path, 3));
  CHECK(format_basis(toric_kernel(images_of(p3), p3.universe())) == "x2*y1 - x1*x3*y2\n");
  const auto single = testing::ideal(2, {"x1"});
  CHECK(toric_kernel(images_of(single), single.universe()).empty());

  const auto tri = cover_ideal(standard_family(Family::complete, 3));
  const auto gb = toric_kernel(images_of(tri), tri.universe());
  CHECK_FALSE(gb.empty());
  for (const auto& g : initial_ideal(gb).generators()) CHECK(g.degree(Block::s) <= 1);
}

TEST_CASE("toric kernel soundness on random ideals") {
  std::mt19937_64 rng(99);
  GbOptions chain;
  chain.chain_criterion = true;
  for (int trial = 0; trial < 40; ++trial) {
    const auto ideal = testing::random_ideal(rng, 4, 2 + trial % 4, 2);
    const auto& gens = ideal.generators();
    const auto gb = toric_kernel(images_of(ideal), ideal.universe());
    const auto& order = gb.order();
    const auto& u = *order.universe();
    CHECK(gb.reduced());

    // every element lies in the kernel
    for (const auto& b : gb.elements()) {
      CHECK(order.compare(b.lead, b.trail) > 0);
      CHECK(b.lead.degree(Block::y) == b.trail.degree(Block::y));
      CHECK(evaluate(b.lead, gens) == evaluate(b.trail, gens));
      CHECK(b.lead.degree(Block::t) == 0);
    }
    // reducedness: no lead divides another term
    for (std::size_t i = 0; i < gb.size(); ++i) {
      for (std::size_t j = 0; j < gb.size(); ++j) {
        if (i != j) CHECK_FALSE(gb.elements()[i].lead.divides(gb.elements()[j].lead));
        CHECK_FALSE(gb.elements()[i].lead.divides(gb.elements()[j].trail));
      }
    }
    // every low-degree kernel binomial reduces to zero
    const std::size_t q = gens.size();
    for (unsigned d = 1; d <= 2; ++d) {
      std::vector<Monomial> ys;
      for_each_multiset(q, d, [&](std::span<const std::size_t> idx) {
        Monomial m;
        for (auto j : idx) m = m * Monomial::of(Var::y(static_cast<std::uint32_t>(j)));
        ys.push_back(m);
      });
      for (std::size_t a = 0; a < ys.size(); ++a) {
        for (std::size_t b = a + 1; b < ys.size(); ++b) {
          const Monomial ua = evaluate(ys[a], gens);
          const Monomial ub = evaluate(ys[b], gens);
          const Monomial g = gcd(ua, ub);
          const Monomial lhs = ub.divided_by(g) * ys[a];
          const Monomial rhs = ua.divided_by(g) * ys[b];
          CHECK(normal_form(lhs, gb.elements(), order) == normal_form(rhs, gb.elements(), order));
        }
      }
    }
    // idempotent under recomputation, and the chain criterion changes nothing
    CHECK(buchberger(gb.elements(), order) == gb);
    CHECK(toric_kernel(images_of(ideal), ideal.universe(), chain) == gb);
    CHECK(u.y_count() == q);
  }
}

TEST_CASE("s-pairs stay pure differences") {
  auto u = make_universe(testing::xs(3), 3, false);
  const MonomialOrder sharp(OrderKind::sharp, u);
  const Binomial f = oriented(sharp, u->parse("x2*y1"), u->parse("x1*x3*y2"));
  const Binomial g = oriented(sharp, u->parse("x2*y3"), u->parse("x1*y2"));
  const auto s = s_pair(f, g, sharp);
  if (s) {
    CHECK(s->lead != s->trail);
    CHECK(sharp.compare(s->lead, s->trail) > 0);
  }
}

TEST_CASE("degree cap") {
  const auto ideal = testing::ideal(3, {"x1^5*x2^3", "x2^5*x3^4", "x1^4*x3^5", "x1^2*x2^2*x3^2"});
  GbOptions tight;
  tight.degree_cap = 4;
  CHECK_THROWS_AS(toric_kernel(images_of(ideal), ideal.universe(), tight), ResourceLimitError);
}
