#include "reescov/monomials.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "reescov/errors.hpp"
#include "reescov/graphs.hpp"

namespace reescov {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return a + b;
}

std::uint64_t signature_bit(Var v) {
  switch (v.block()) {
    case Block::s:
      return std::uint64_t{1} << (v.index() % 48);
    case Block::y:
      return std::uint64_t{1} << (48 + v.index() % 15);
    case Block::t:
      return std::uint64_t{1} << 63;
  }
  return 0;
}

using TermSpan = std::span<const Monomial::Term>;

TermSpan block_range(TermSpan terms, Block b) {
  const Var lo(b, 0);
  auto first = std::lower_bound(terms.begin(), terms.end(), lo,
                                [](const Monomial::Term& t, Var v) { return t.var < v; });
  auto last = first;
  while (last != terms.end() && last->var.block() == b) ++last;
  return TermSpan(first, last);
}

// Lex on a sorted run of terms: the smallest variable key carries the
// highest priority.
std::strong_ordering lex_terms(TermSpan a, TermSpan b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    if (i == a.size() && j == b.size()) return std::strong_ordering::equal;
    if (i == a.size()) return std::strong_ordering::less;
    if (j == b.size()) return std::strong_ordering::greater;
    if (a[i].var < b[j].var) return std::strong_ordering::greater;
    if (b[j].var < a[i].var) return std::strong_ordering::less;
    if (a[i].exponent != b[j].exponent) return a[i].exponent <=> b[j].exponent;
    ++i;
    ++j;
  }
}

std::strong_ordering sharp_compare(const Monomial& u, const Monomial& v) {
  if (auto c = lex_compare(u, v, Block::y); c != 0) return c;
  if (auto c = lex_compare(u, v, Block::s); c != 0) return c;
  return u.degree(Block::t) <=> v.degree(Block::t);
}

}  // namespace

Monomial::Monomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exponent == 0) continue;
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().exponent = checked_add(merged.back().exponent, t.exponent);
    } else {
      merged.push_back(t);
    }
  }
  terms_ = std::move(merged);
  recompute();
}

Monomial Monomial::of(Var v, Exponent e) { return Monomial({Term{v, e}}); }

void Monomial::recompute() {
  degree_ = {};
  signature_ = 0;
  for (const auto& t : terms_) {
    degree_[static_cast<std::size_t>(t.var.block())] += t.exponent;
    signature_ |= signature_bit(t.var);
  }
}

Exponent Monomial::exponent(Var v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, Var x) { return t.var < x; });
  return (it != terms_.end() && it->var == v) ? it->exponent : 0;
}

Monomial Monomial::part(Block b) const {
  auto range = block_range(terms_, b);
  Monomial out;
  out.terms_.assign(range.begin(), range.end());
  out.recompute();
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if ((signature_ & ~other.signature_) != 0) return false;
  if (degree() > other.degree()) return false;
  std::size_t j = 0;
  for (const auto& t : terms_) {
    while (j < other.terms_.size() && other.terms_[j].var < t.var) ++j;
    if (j == other.terms_.size() || other.terms_[j].var != t.var ||
        other.terms_[j].exponent < t.exponent) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial out;
  std::size_t j = 0;
  for (const auto& t : terms_) {
    Exponent e = t.exponent;
    if (j < divisor.terms_.size() && divisor.terms_[j].var == t.var) {
      e -= divisor.terms_[j].exponent;
      ++j;
    }
    if (e != 0) out.terms_.push_back({t.var, e});
  }
  out.recompute();
  return out;
}

Monomial Monomial::pow(std::uint32_t k) const {
  Monomial out;
  for (const auto& t : terms_) {
    const std::uint64_t e = std::uint64_t{t.exponent} * k;
    if (e > std::numeric_limits<Exponent>::max()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    if (e != 0) out.terms_.push_back({t.var, static_cast<Exponent>(e)});
  }
  out.recompute();
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].var < b.terms_[j].var)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].var < a.terms_[i].var) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      out.terms_.push_back({a.terms_[i].var, checked_add(a.terms_[i].exponent, b.terms_[j].exponent)});
      ++i;
      ++j;
    }
  }
  out.recompute();
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& t : terms_) {
    h ^= (std::size_t{t.var.key()} << 20) ^ t.exponent;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> out;
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t j = 0;
  for (const auto& t : ta) {
    while (j < tb.size() && tb[j].var < t.var) ++j;
    if (j < tb.size() && tb[j].var == t.var) out.push_back({t.var, std::min(t.exponent, tb[j].exponent)});
  }
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> out(a.terms().begin(), a.terms().end());
  for (const auto& t : b.terms()) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& x) { return x.var == t.var; });
    if (it == out.end()) {
      out.push_back(t);
    } else {
      it->exponent = std::max(it->exponent, t.exponent);
    }
  }
  return Monomial(std::move(out));
}

Monomial colon(const Monomial& u, const Monomial& v) { return u.divided_by(gcd(u, v)); }

VariableUniverse::VariableUniverse(std::vector<std::string> s_names, std::size_t y_count, bool has_t)
    : s_names_(std::move(s_names)), y_count_(y_count), has_t_(has_t) {
  std::unordered_set<std::string> seen;
  for (const auto& n : s_names_) {
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
}

bool VariableUniverse::contains(Var v) const {
  switch (v.block()) {
    case Block::s:
      return v.index() < s_names_.size();
    case Block::y:
      return v.index() < y_count_;
    case Block::t:
      return has_t_ && v.index() == 0;
  }
  return false;
}

bool VariableUniverse::contains(const Monomial& m) const {
  return std::all_of(m.terms().begin(), m.terms().end(),
                     [&](const Monomial::Term& t) { return contains(t.var); });
}

std::string VariableUniverse::name(Var v) const {
  if (!contains(v)) throw InputError("variable outside the universe");
  switch (v.block()) {
    case Block::s:
      return s_names_[v.index()];
    case Block::y:
      return "y" + std::to_string(v.index() + 1);
    case Block::t:
      return "t";
  }
  return {};
}

std::optional<Var> VariableUniverse::find(std::string_view name) const {
  for (std::size_t i = 0; i < s_names_.size(); ++i) {
    if (s_names_[i] == name) return Var::s(static_cast<std::uint32_t>(i));
  }
  if (name == "t") return has_t_ ? std::optional<Var>(Var::t()) : std::nullopt;
  if (name.size() >= 2 && name[0] == 'y') {
    std::size_t j = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), j);
    if (ec == std::errc{} && ptr == name.data() + name.size() && j >= 1 && j <= y_count_) {
      return Var::y(static_cast<std::uint32_t>(j - 1));
    }
  }
  return std::nullopt;
}

std::string VariableUniverse::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& t : m.terms()) {
    if (!out.empty()) out += '*';
    out += name(t.var);
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

Monomial VariableUniverse::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return Monomial();
  if (text.empty()) throw InputError("empty monomial");
  std::vector<Monomial::Term> terms;
  while (true) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    std::string_view name = factor;
    Exponent e = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      name = trim(factor.substr(0, caret));
      auto digits = trim(factor.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw InputError("bad exponent in monomial factor '" + std::string(factor) + "'");
      }
    }
    auto var = find(name);
    if (!var) throw InputError("unknown variable '" + std::string(name) + "'");
    terms.push_back({*var, e});
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return Monomial(std::move(terms));
}

std::shared_ptr<const VariableUniverse> VariableUniverse::with_blocks(std::size_t y_count,
                                                                      bool has_t) const {
  return std::make_shared<const VariableUniverse>(s_names_, y_count, has_t);
}

UniversePtr make_universe(std::vector<std::string> s_names, std::size_t y_count, bool has_t) {
  return std::make_shared<const VariableUniverse>(std::move(s_names), y_count, has_t);
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v, Block block) {
  return lex_terms(block_range(u.terms(), block), block_range(v.terms(), block));
}

MonomialOrder::MonomialOrder(OrderKind kind, UniversePtr universe)
    : kind_(kind), universe_(std::move(universe)) {}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (universe_ && (!universe_->contains(u) || !universe_->contains(v))) {
    throw InputError("monomial outside the order's variable universe");
  }
  return compare_unchecked(u, v);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& u, const Monomial& v) const {
  switch (kind_) {
    case OrderKind::lex_on_s:
      if (auto c = lex_compare(u, v, Block::s); c != 0) return c;
      if (auto c = lex_compare(u, v, Block::y); c != 0) return c;
      return u.degree(Block::t) <=> v.degree(Block::t);
    case OrderKind::lex_on_y:
      if (auto c = lex_compare(u, v, Block::y); c != 0) return c;
      if (auto c = u.degree(Block::t) <=> v.degree(Block::t); c != 0) return c;
      return lex_compare(u, v, Block::s);
    case OrderKind::sharp:
      return sharp_compare(u, v);
    case OrderKind::elim_sharp:
      if (auto c = u.degree(Block::t) <=> v.degree(Block::t); c != 0) return c;
      return sharp_compare(u, v);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const MonomialOrder& order, const Monomial& u, const Monomial& v) {
  return order.compare(u, v);
}

void sort_canonically(std::vector<Monomial>& monomials) {
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return sharp_compare(a, b) > 0; });
}

MonomialIdeal::MonomialIdeal(UniversePtr universe, std::vector<Monomial> generators)
    : universe_(std::move(universe)) {
  if (!universe_) throw std::invalid_argument("monomial ideal without a universe");
  for (const auto& g : generators) {
    if (!universe_->contains(g)) throw InputError("generator outside the ideal's universe");
  }
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (auto& g : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) generators_.push_back(std::move(g));
  }
  sort_canonically(generators_);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::uint64_t MonomialIdeal::min_degree() const {
  std::uint64_t d = std::numeric_limits<std::uint64_t>::max();
  for (const auto& g : generators_) d = std::min(d, g.degree());
  return generators_.empty() ? 0 : d;
}

std::uint64_t MonomialIdeal::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::is_equigenerated() const { return min_degree() == max_degree(); }

MonomialIdeal minimalize(UniversePtr universe, std::vector<Monomial> generators) {
  return MonomialIdeal(std::move(universe), std::move(generators));
}

Monomial cover_monomial(std::uint64_t vertex_set) {
  std::vector<Monomial::Term> terms;
  for (auto m = vertex_set; m != 0; m &= m - 1) {
    terms.push_back({Var::s(static_cast<std::uint32_t>(std::countr_zero(m))), 1});
  }
  return Monomial(std::move(terms));
}

MonomialIdeal cover_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const auto& c : minimal_vertex_covers(g)) gens.push_back(cover_monomial(c.members));
  return MonomialIdeal(make_universe(g.labels()), std::move(gens));
}

void for_each_multiset(std::size_t n, unsigned k,
                       const std::function<void(std::span<const std::size_t>)>& visit) {
  if (n == 0) {
    if (k == 0) visit({});
    return;
  }
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    visit(idx);
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) return;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto p = static_cast<std::size_t>(pos); p < k; ++p) idx[p] = next;
  }
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned k) {
  if (k < 1) throw InputError("power exponent must be >= 1");
  const auto& gens = ideal.generators();
  std::unordered_set<Monomial, MonomialHash> products;
  for_each_multiset(gens.size(), k, [&](std::span<const std::size_t> pick) {
    Monomial m;
    for (std::size_t i : pick) m = m * gens[i];
    products.insert(std::move(m));
  });
  return MonomialIdeal(ideal.universe(), {products.begin(), products.end()});
}

std::vector<Monomial> monomials_of_degree(std::size_t s_count, unsigned degree) {
  std::vector<Monomial> out;
  for_each_multiset(s_count, degree, [&](std::span<const std::size_t> pick) {
    std::vector<Monomial::Term> terms;
    for (std::size_t i : pick) terms.push_back({Var::s(static_cast<std::uint32_t>(i)), 1});
    out.emplace_back(std::move(terms));
  });
  return out;
}

MonomialIdeal component(const MonomialIdeal& ideal, unsigned j) {
  std::unordered_set<Monomial, MonomialHash> out;
  const std::size_t n = ideal.universe()->s_count();
  for (const auto& g : ideal.generators()) {
    if (g.degree() > j) continue;
    for (const auto& m : monomials_of_degree(n, static_cast<unsigned>(j - g.degree()))) {
      out.insert(g * m);
    }
  }
  return MonomialIdeal(ideal.universe(), {out.begin(), out.end()});
}

}  // namespace reescov
