#pragma once

// Buchberger's algorithm for pure-difference binomial ideals (coefficients
// +-1), toric kernels of monomial maps by elimination of t, and initial
// ideals of reduced bases.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reescov/monomials.hpp"

namespace reescov {

/// lead - trail with lead > trail under the order it was built for.
struct Binomial {
  Monomial lead;
  Monomial trail;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Orients a - b. Returns nullopt (the zero binomial) when a == b.
std::optional<Binomial> make_binomial(const MonomialOrder& order, Monomial a, Monomial b);

struct GbOptions {
  /// Skip pairs whose lcm is divisible by a third lead whose pairs are done.
  bool chain_criterion = false;
  /// Abort when a basis element reaches this total degree.
  std::uint64_t degree_cap = 40;
};

class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Binomial> elements, bool reduced);

  const MonomialOrder& order() const { return order_; }
  const std::vector<Binomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool reduced() const { return reduced_; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_.kind() == b.order_.kind() && a.elements_ == b.elements_ &&
           a.reduced_ == b.reduced_;
  }

 private:
  MonomialOrder order_;
  std::vector<Binomial> elements_;
  bool reduced_;
};

/// Normal form of a monomial: rewrite with the first element whose lead
/// divides it until none does.
Monomial normal_form(const Monomial& m, std::span<const Binomial> basis, const MonomialOrder& order);

/// Reduces both terms to normal form; nullopt when they meet.
std::optional<Binomial> reduce(const Binomial& b, std::span<const Binomial> basis,
                               const MonomialOrder& order);

std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& order);

/// Reduced Groebner basis, canonically sorted (leads descending).
GroebnerBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& order,
                         const GbOptions& options = {});

/// Kernel of y_j -> images[j] (monomials in S and t), as the reduced
/// Groebner basis under the sharp order over S and y_1..y_q. `s_universe`
/// names the S block.
GroebnerBasis toric_kernel(std::span<const Monomial> images, const UniversePtr& s_universe,
                           const GbOptions& options = {});

/// Ideal of leads; requires a reduced basis.
MonomialIdeal initial_ideal(const GroebnerBasis& basis);

/// One "lead - trail" line per element, in basis order.
std::string format_basis(const GroebnerBasis& basis);

}  // namespace reescov
