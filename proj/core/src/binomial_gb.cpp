#include "reescov/binomial_gb.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include "reescov/errors.hpp"

namespace reescov {

std::optional<Binomial> make_binomial(const MonomialOrder& order, Monomial a, Monomial b) {
  const auto c = order.compare_unchecked(a, b);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<Binomial> elements, bool reduced)
    : order_(std::move(order)), elements_(std::move(elements)), reduced_(reduced) {}

Monomial normal_form(const Monomial& m, std::span<const Binomial> basis,
                     const MonomialOrder& /*order*/) {
  Monomial current = m;
  bool rewritten = true;
  while (rewritten) {
    rewritten = false;
    for (const auto& b : basis) {
      if (b.lead.divides(current)) {
        current = current.divided_by(b.lead) * b.trail;
        rewritten = true;
        break;
      }
    }
  }
  return current;
}

std::optional<Binomial> reduce(const Binomial& b, std::span<const Binomial> basis,
                               const MonomialOrder& order) {
  return make_binomial(order, normal_form(b.lead, basis, order), normal_form(b.trail, basis, order));
}

std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.lead, g.lead);
  return make_binomial(order, l.divided_by(f.lead) * f.trail, l.divided_by(g.lead) * g.trail);
}

namespace {

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

void check_cap(const Binomial& b, const GbOptions& options) {
  const auto d = std::max(b.lead.degree(), b.trail.degree());
  if (d > options.degree_cap) {
    throw ResourceLimitError("Groebner basis element of degree " + std::to_string(d) +
                             " exceeds the degree cap " + std::to_string(options.degree_cap));
  }
}

std::vector<Binomial> interreduce(std::vector<Binomial> basis, const MonomialOrder& order) {
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lead.divides(basis[i].lead)) continue;
      // Equal leads: keep the earliest copy.
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Binomial> reduced;
  reduced.reserve(minimal.size());
  for (const auto& b : minimal) {
    Monomial trail = normal_form(b.trail, minimal, order);
    reduced.push_back(Binomial{b.lead, std::move(trail)});
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Binomial& a, const Binomial& b) {
    if (auto c = order.compare_unchecked(a.lead, b.lead); c != 0) return c > 0;
    return order.compare_unchecked(a.trail, b.trail) > 0;
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& order,
                         const GbOptions& options) {
  std::vector<Binomial> basis;
  for (const auto& g : generators) {
    auto oriented = make_binomial(order, g.lead, g.trail);
    if (!oriented) continue;
    if (std::find(basis.begin(), basis.end(), *oriented) != basis.end()) continue;
    check_cap(*oriented, options);
    basis.push_back(std::move(*oriented));
  }

  // Normal selection strategy: smallest lcm first, ties broken by indices.
  auto later = [&order](const Pair& a, const Pair& b) {
    if (auto c = order.compare_unchecked(a.lcm, b.lcm); c != 0) return c > 0;
    return std::pair(a.i, a.j) > std::pair(b.i, b.j);
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  // Elements whose lead is divisible by a later lead take part in no new pairs.
  std::vector<bool> active;

  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!active[i]) continue;
      queue.push(Pair{lcm(basis[i].lead, basis[j].lead), i, j});
      pending.emplace(i, j);
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (active[i] && basis[j].lead.divides(basis[i].lead)) active[i] = false;
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) {
    active.push_back(true);
    add_pairs_for(j);
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    pending.erase({p.i, p.j});

    // Coprime leads: the S-polynomial reduces to zero.
    if (gcd(basis[p.i].lead, basis[p.j].lead).is_one()) continue;

    if (options.chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        skip = basis[k].lead.divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
      }
      if (skip) continue;
    }

    auto s = s_pair(basis[p.i], basis[p.j], order);
    if (!s) continue;
    auto h = reduce(*s, basis, order);
    if (!h) continue;
    check_cap(*h, options);
    basis.push_back(std::move(*h));
    active.push_back(true);
    add_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis(order, interreduce(std::move(basis), order), true);
}

GroebnerBasis toric_kernel(std::span<const Monomial> images, const UniversePtr& s_universe,
                           const GbOptions& options) {
  if (!s_universe) throw std::invalid_argument("toric_kernel needs a universe");
  const std::size_t q = images.size();
  auto full = s_universe->with_blocks(q, true);
  const MonomialOrder elim(OrderKind::elim_sharp, full);

  std::vector<Binomial> graph_ideal;
  for (std::size_t j = 0; j < q; ++j) {
    const auto& image = images[j];
    if (image.degree(Block::y) != 0 || !full->contains(image)) {
      throw InputError("toric_kernel: image " + std::to_string(j + 1) +
                       " must be a monomial in the base variables and t");
    }
    auto b = make_binomial(elim, Monomial::of(Var::y(static_cast<std::uint32_t>(j))), image);
    graph_ideal.push_back(std::move(*b));
  }
  const auto eliminated = buchberger(graph_ideal, elim, options);

  std::vector<Binomial> kernel;
  for (const auto& b : eliminated.elements()) {
    // Elimination order: a t-free lead forces a t-free trail.
    if (b.lead.degree(Block::t) == 0) kernel.push_back(b);
  }
  MonomialOrder sharp(OrderKind::sharp, s_universe->with_blocks(q, false));
  std::sort(kernel.begin(), kernel.end(), [&](const Binomial& a, const Binomial& b) {
    if (auto c = sharp.compare_unchecked(a.lead, b.lead); c != 0) return c > 0;
    return sharp.compare_unchecked(a.trail, b.trail) > 0;
  });
  return GroebnerBasis(std::move(sharp), std::move(kernel), true);
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  if (!basis.reduced()) throw InputError("initial_ideal requires a reduced Groebner basis");
  if (!basis.order().universe()) throw InputError("initial_ideal requires a basis with a universe");
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis.elements()) leads.push_back(b.lead);
  return MonomialIdeal(basis.order().universe(), std::move(leads));
}

std::string format_basis(const GroebnerBasis& basis) {
  const auto& u = basis.order().universe();
  if (!u) throw InputError("format_basis requires a basis with a universe");
  std::string out;
  for (const auto& b : basis.elements()) {
    out += u->format(b.lead) + " - " + u->format(b.trail) + "\n";
  }
  return out;
}

}  // namespace reescov
