#pragma once

// Rees presentation of a monomial ideal: the toric ideal J of
// R(I) = K[x, u_1 t, ..., u_q t] under the sharp order, the x-condition and
// quadraticity of in(J), and standard monomials in y of degree k.

#include <cstddef>
#include <string>
#include <vector>

#include "reescov/binomial_gb.hpp"
#include "reescov/monomials.hpp"

namespace reescov {

class ReesPresentation {
 public:
  ReesPresentation(MonomialIdeal base, std::vector<Monomial> generators, UniversePtr universe,
                   GroebnerBasis basis, bool degenerate);

  const MonomialIdeal& base() const { return base_; }
  /// u_1 >lex ... >lex u_q; y_j maps to generators()[j-1] * t.
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t q() const { return generators_.size(); }
  /// S together with y_1..y_q.
  const UniversePtr& universe() const { return universe_; }
  const GroebnerBasis& basis() const { return basis_; }
  const MonomialIdeal& initial() const { return initial_; }
  /// True for the unit ideal (edgeless graphs): q = 1, u_1 = 1, J = 0.
  bool degenerate() const { return degenerate_; }

  /// pi: x -> x, y_j -> u_j t, into S[t].
  Monomial evaluate(const Monomial& m) const;
  /// The S-monomial u_{i_1} ... u_{i_k} for a monomial in y alone.
  Monomial mapped_product(const Monomial& y_monomial) const;

 private:
  MonomialIdeal base_;
  std::vector<Monomial> generators_;
  UniversePtr universe_;
  GroebnerBasis basis_;
  MonomialIdeal initial_;
  bool degenerate_;
};

struct XConditionReport {
  bool holds = true;
  std::vector<Monomial> offending_generators;  // s-degree > 1
  bool quadratic = true;
  std::vector<Monomial> quadratic_offenders;  // total degree != 2
};

struct StandardMonomialSet {
  unsigned k = 0;
  /// Degree-k monomials in y, ascending in lex on y.
  std::vector<Monomial> members;
  std::vector<Monomial> mapped_generators;
  /// Set when the base ideal is the unit ideal and the set was left empty.
  std::string diagnostic;
};

/// Throws InputError for the zero ideal.
ReesPresentation rees_presentation(const MonomialIdeal& ideal, const GbOptions& options = {});

XConditionReport x_condition(const ReesPresentation& p);

StandardMonomialSet standard_monomials(const ReesPresentation& p, unsigned k);

/// Mapped standard monomials of degree k coincide with the minimal
/// generators of I^k.
bool minimal_generation_check(const ReesPresentation& p, unsigned k);

}  // namespace reescov
