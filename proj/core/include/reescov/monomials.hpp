#pragma once

// Sparse exponent-vector monomials over a three-block variable universe
// (base variables S, Rees variables y_1..y_q, elimination variable t),
// block monomial orders, and monomial ideals kept inclusion-minimal.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reescov {

class Graph;

enum class Block : std::uint8_t { s = 0, y = 1, t = 2 };

/// A variable tagged with its block. Ordering by key puts the S block
/// first (priority order), then y_1, ..., y_q, then t.
class Var {
 public:
  constexpr Var() = default;
  constexpr Var(Block block, std::uint32_t index)
      : key_((static_cast<std::uint32_t>(block) << kBlockShift) | index) {}

  static constexpr Var s(std::uint32_t index) { return Var(Block::s, index); }
  static constexpr Var y(std::uint32_t index) { return Var(Block::y, index); }
  static constexpr Var t() { return Var(Block::t, 0); }

  constexpr Block block() const { return static_cast<Block>(key_ >> kBlockShift); }
  constexpr std::uint32_t index() const { return key_ & kIndexMask; }
  constexpr std::uint32_t key() const { return key_; }

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  static constexpr unsigned kBlockShift = 24;
  static constexpr std::uint32_t kIndexMask = (1U << kBlockShift) - 1;
  std::uint32_t key_ = 0;
};

using Exponent = std::uint32_t;

class Monomial {
 public:
  struct Term {
    Var var;
    Exponent exponent = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// The monomial 1.
  Monomial() = default;
  /// Sorts by variable, merges repeated variables, drops zero exponents.
  explicit Monomial(std::vector<Term> terms);

  static Monomial of(Var v, Exponent e = 1);

  std::span<const Term> terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  std::uint64_t degree() const { return degree_[0] + degree_[1] + degree_[2]; }
  std::uint64_t degree(Block b) const { return degree_[static_cast<std::size_t>(b)]; }
  Exponent exponent(Var v) const;
  Monomial part(Block b) const;
  std::uint64_t signature() const { return signature_; }

  bool divides(const Monomial& other) const;
  /// Exact quotient; throws std::invalid_argument when `divisor` does not divide.
  Monomial divided_by(const Monomial& divisor) const;
  Monomial pow(std::uint32_t k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.terms_ == b.terms_; }

  std::size_t hash() const;

 private:
  void recompute();

  std::vector<Term> terms_;
  std::array<std::uint64_t, 3> degree_{};
  std::uint64_t signature_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// u / gcd(u, v): generator of the colon ideal (u) : v.
Monomial colon(const Monomial& u, const Monomial& v);

/// Names and sizes of the variable blocks. S variables are listed in
/// priority order (index 0 highest), y_j is printed as "y<j+1>".
class VariableUniverse {
 public:
  explicit VariableUniverse(std::vector<std::string> s_names, std::size_t y_count = 0,
                            bool has_t = false);

  std::size_t s_count() const { return s_names_.size(); }
  std::size_t y_count() const { return y_count_; }
  bool has_t() const { return has_t_; }
  const std::vector<std::string>& s_names() const { return s_names_; }

  bool contains(Var v) const;
  bool contains(const Monomial& m) const;
  std::string name(Var v) const;
  std::optional<Var> find(std::string_view name) const;

  /// "x1^2*x3^2", "z1_2*y3", "1".
  std::string format(const Monomial& m) const;
  Monomial parse(std::string_view text) const;

  std::shared_ptr<const VariableUniverse> with_blocks(std::size_t y_count, bool has_t) const;

  friend bool operator==(const VariableUniverse& a, const VariableUniverse& b) {
    return a.s_names_ == b.s_names_ && a.y_count_ == b.y_count_ && a.has_t_ == b.has_t_;
  }

 private:
  std::vector<std::string> s_names_;
  std::size_t y_count_ = 0;
  bool has_t_ = false;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

UniversePtr make_universe(std::vector<std::string> s_names, std::size_t y_count = 0,
                          bool has_t = false);

/// Lex comparison restricted to one block (lower index = higher variable).
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v, Block block);

enum class OrderKind {
  lex_on_s,    // S by lex, then y by lex, then t-degree
  lex_on_y,    // y by lex, then t-degree, then S by lex
  sharp,       // y by lex, then S by lex (then t-degree)
  elim_sharp,  // t-degree, then sharp
};

class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, UniversePtr universe);

  OrderKind kind() const { return kind_; }
  const UniversePtr& universe() const { return universe_; }

  /// Throws InputError when either monomial mentions a variable outside the universe.
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  std::strong_ordering compare_unchecked(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare_unchecked(u, v) < 0; }

 private:
  OrderKind kind_;
  UniversePtr universe_;
};

std::strong_ordering compare(const MonomialOrder& order, const Monomial& u, const Monomial& v);

/// Sorts descending in the sharp order (the canonical report order).
void sort_canonically(std::vector<Monomial>& monomials);

/// Monomial ideal stored by its minimal generators in canonical order.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(UniversePtr universe, std::vector<Monomial> generators = {});

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }
  bool contains(const Monomial& m) const;
  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;
  bool is_equigenerated() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.universe_ == *b.universe_ && a.generators_ == b.generators_;
  }

 private:
  UniversePtr universe_;
  std::vector<Monomial> generators_;
};

/// Inclusion-minimal subset of `generators` (deduplicated, canonical order).
MonomialIdeal minimalize(UniversePtr universe, std::vector<Monomial> generators);

/// The squarefree monomial of a vertex set over the graph's S universe.
Monomial cover_monomial(std::uint64_t vertex_set);

/// I_G = (u_C : C minimal vertex cover), universe = the vertex labels.
MonomialIdeal cover_ideal(const Graph& g);

/// Minimal generators of I^k from all k-fold products of generators.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned k);

/// The ideal generated by the degree-j monomials of I.
MonomialIdeal component(const MonomialIdeal& ideal, unsigned j);

/// All monomials of degree `degree` in S variables 0..s_count-1.
std::vector<Monomial> monomials_of_degree(std::size_t s_count, unsigned degree);

/// Calls `visit` with each multiset of size k drawn from 0..n-1, as a
/// non-decreasing index sequence, in lexicographic order of sequences.
void for_each_multiset(std::size_t n, unsigned k,
                       const std::function<void(std::span<const std::size_t>)>& visit);

}  // namespace reescov
