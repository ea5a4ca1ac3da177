#pragma once

#include <random>
#include <string>
#include <vector>

#include "reescov/graphs.hpp"
#include "reescov/monomials.hpp"

namespace testing {

inline std::vector<std::string> xs(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

inline reescov::MonomialIdeal ideal(std::size_t n, const std::vector<std::string>& gens) {
  auto u = reescov::make_universe(xs(n));
  std::vector<reescov::Monomial> ms;
  for (const auto& g : gens) ms.push_back(u->parse(g));
  return reescov::MonomialIdeal(u, ms);
}

inline std::vector<std::string> format(const reescov::MonomialIdeal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(i.universe()->format(g));
  return out;
}

/// G(n, p) with labels x1..xn.
inline reescov::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::string, std::string>> edges;
  const auto names = xs(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(names[a], names[b]);
    }
  }
  return reescov::build_graph(names, edges);
}

/// Squarefree-free random monomial ideal over x1..xn.
inline reescov::MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t gens,
                                           int max_exp) {
  auto u = reescov::make_universe(xs(n));
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<reescov::Monomial> ms;
  for (std::size_t k = 0; k < gens; ++k) {
    std::vector<reescov::Monomial::Term> terms;
    for (std::uint32_t i = 0; i < n; ++i) {
      const int x = e(rng);
      if (x > 0) terms.push_back({reescov::Var::s(i), static_cast<reescov::Exponent>(x)});
    }
    if (terms.empty()) terms.push_back({reescov::Var::s(0), 1});
    ms.emplace_back(std::move(terms));
  }
  return reescov::MonomialIdeal(u, ms);
}

}  // namespace testing
