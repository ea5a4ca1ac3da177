#pragma once

// Linear quotients certificates and order search, multigraded Betti
// numbers via upper Koszul simplicial complexes on the lcm lattice, linear
// resolutions and componentwise linearity.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reescov/monomials.hpp"

namespace reescov {

struct LinearQuotientsCertificate {
  std::vector<Monomial> ordering;
  /// witnesses[j][i] = l (all indices 0-based, i, l < j): colon(f_l, f_j)
  /// is a single variable dividing colon(f_i, f_j). witnesses[0] is empty.
  std::vector<std::vector<std::size_t>> witnesses;
};

struct LinearQuotientsCheck {
  std::optional<LinearQuotientsCertificate> certificate;
  /// 1-based position j whose colon ideal is not generated by variables.
  std::size_t failed_position = 0;

  explicit operator bool() const { return certificate.has_value(); }
};

LinearQuotientsCheck check_linear_quotients(std::span<const Monomial> ordered);

/// Re-checks every witness of a certificate.
bool verify_certificate(const LinearQuotientsCertificate& certificate);

enum class OrderSearchMethod { none, ascending_heuristic, descending_heuristic, backtracking };

std::string to_string(OrderSearchMethod method);

struct OrderSearchOptions {
  std::size_t max_generators = 24;
};

struct OrderSearchResult {
  std::optional<LinearQuotientsCertificate> certificate;
  OrderSearchMethod method = OrderSearchMethod::none;
  std::size_t states_explored = 0;
};

/// Tries `heuristic_order` (default: ascending sharp order of `gens`), its
/// reverse, then an exact backtracking search over generator subsets with
/// memoised dead subsets. No certificate means no order exists. Only the
/// backtracking step is bounded by max_generators (ResourceLimitError).
OrderSearchResult find_linear_quotients_order(std::span<const Monomial> gens,
                                              const OrderSearchOptions& options = {},
                                              std::span<const Monomial> heuristic_order = {});

struct BettiOptions {
  std::size_t max_generators = 18;
  std::size_t max_lattice = 4096;
};

struct MultigradedBetti {
  unsigned homological = 0;
  Monomial multidegree;
  std::uint64_t rank = 0;
};

class BettiTable {
 public:
  void add(unsigned i, const Monomial& multidegree, std::uint64_t rank);

  /// beta_{i,j}; zero when absent.
  std::uint64_t get(unsigned i, std::uint64_t j) const;
  /// Nonzero (i, j) -> beta_{i,j}.
  const std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t>& totals() const {
    return totals_;
  }
  const std::vector<MultigradedBetti>& multigraded() const { return multigraded_; }
  bool empty() const { return totals_.empty(); }

 private:
  std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t> totals_;
  std::vector<MultigradedBetti> multigraded_;
};

/// All lcms of nonempty subsets of the minimal generators, canonical order.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_size = 4096);

/// Faces of the upper Koszul complex at multidegree b: squarefree tau with
/// tau | b and b / tau in I, as bitmasks over the support of b (bit k is
/// the k-th variable of b in variable order).
std::vector<std::uint32_t> upper_koszul_faces(const MonomialIdeal& ideal, const Monomial& b);

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiTable& table);
bool has_linear_resolution(const MonomialIdeal& ideal, const BettiOptions& options = {});

struct ComponentwiseReport {
  bool componentwise_linear = true;
  /// Only degrees between the smallest and largest generator degree are checked.
  bool range_limited = true;
  std::vector<std::pair<unsigned, bool>> per_degree;
};

ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal,
                                            const BettiOptions& options = {});

/// Macaulay-style layout: columns i, rows j - i, "." for zero.
std::string format_betti_table(const BettiTable& table);

}  // namespace reescov
