#include "reescov/rees.hpp"

#include <algorithm>

#include "reescov/errors.hpp"

namespace reescov {

ReesPresentation::ReesPresentation(MonomialIdeal base, std::vector<Monomial> generators,
                                   UniversePtr universe, GroebnerBasis basis, bool degenerate)
    : base_(std::move(base)),
      generators_(std::move(generators)),
      universe_(std::move(universe)),
      basis_(std::move(basis)),
      initial_(initial_ideal(basis_)),
      degenerate_(degenerate) {}

Monomial ReesPresentation::evaluate(const Monomial& m) const {
  Monomial out;
  std::vector<Monomial::Term> s_terms;
  for (const auto& t : m.terms()) {
    switch (t.var.block()) {
      case Block::s:
        s_terms.push_back(t);
        break;
      case Block::y: {
        const auto& u = generators_.at(t.var.index());
        out = out * (u * Monomial::of(Var::t())).pow(t.exponent);
        break;
      }
      case Block::t:
        throw InputError("evaluate: t is not a variable of T");
    }
  }
  return out * Monomial(std::move(s_terms));
}

Monomial ReesPresentation::mapped_product(const Monomial& y_monomial) const {
  Monomial out;
  for (const auto& t : y_monomial.terms()) {
    if (t.var.block() != Block::y) throw InputError("mapped_product expects a monomial in y");
    out = out * generators_.at(t.var.index()).pow(t.exponent);
  }
  return out;
}

ReesPresentation rees_presentation(const MonomialIdeal& ideal, const GbOptions& options) {
  if (ideal.is_zero()) throw InputError("Rees presentation of the zero ideal");
  const auto& s_universe = ideal.universe();
  if (s_universe->y_count() != 0 || s_universe->has_t()) {
    throw InputError("Rees presentation expects an ideal over the base variables only");
  }
  // Canonical generator order is already lex-descending on S.
  std::vector<Monomial> gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return lex_compare(a, b, Block::s) > 0;
  });
  std::vector<Monomial> images;
  images.reserve(gens.size());
  for (const auto& u : gens) images.push_back(u * Monomial::of(Var::t()));
  auto basis = toric_kernel(images, s_universe, options);
  auto universe = s_universe->with_blocks(gens.size(), false);
  return ReesPresentation(ideal, std::move(gens), std::move(universe), std::move(basis),
                          ideal.is_unit());
}

XConditionReport x_condition(const ReesPresentation& p) {
  XConditionReport report;
  for (const auto& g : p.initial().generators()) {
    if (g.degree(Block::s) > 1) report.offending_generators.push_back(g);
    if (g.degree() != 2) report.quadratic_offenders.push_back(g);
  }
  report.holds = report.offending_generators.empty();
  report.quadratic = report.quadratic_offenders.empty();
  return report;
}

StandardMonomialSet standard_monomials(const ReesPresentation& p, unsigned k) {
  if (k < 1) throw InputError("standard_monomials: k must be >= 1");
  StandardMonomialSet out;
  out.k = k;
  if (p.degenerate()) {
    out.diagnostic = "unit base ideal: standard monomial set left empty";
    return out;
  }
  // Only pure-y generators of in(J) can divide a monomial in y alone.
  std::vector<Monomial> pure_y;
  for (const auto& g : p.initial().generators()) {
    if (g.degree(Block::s) == 0) pure_y.push_back(g);
  }
  std::sort(pure_y.begin(), pure_y.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });

  for_each_multiset(p.q(), k, [&](std::span<const std::size_t> pick) {
    std::vector<Monomial::Term> terms;
    terms.reserve(pick.size());
    for (std::size_t i : pick) terms.push_back({Var::y(static_cast<std::uint32_t>(i)), 1});
    Monomial m(std::move(terms));
    for (const auto& g : pure_y) {
      if (g.degree() > k) break;
      if (g.divides(m)) return;
    }
    out.members.push_back(std::move(m));
  });
  std::sort(out.members.begin(), out.members.end(), [](const Monomial& a, const Monomial& b) {
    return lex_compare(a, b, Block::y) < 0;
  });
  out.mapped_generators.reserve(out.members.size());
  for (const auto& m : out.members) out.mapped_generators.push_back(p.mapped_product(m));
  return out;
}

bool minimal_generation_check(const ReesPresentation& p, unsigned k) {
  auto mapped = standard_monomials(p, k).mapped_generators;
  sort_canonically(mapped);
  return mapped == power(p.base(), k).generators();
}

}  // namespace reescov
