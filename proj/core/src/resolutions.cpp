#include "reescov/resolutions.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "reescov/errors.hpp"
#include "reescov/homology.hpp"

namespace reescov {

LinearQuotientsCheck check_linear_quotients(std::span<const Monomial> ordered) {
  LinearQuotientsCheck result;
  LinearQuotientsCertificate cert;
  cert.ordering.assign(ordered.begin(), ordered.end());
  cert.witnesses.resize(ordered.size());
  for (std::size_t j = 1; j < ordered.size(); ++j) {
    std::vector<Monomial> colons;
    colons.reserve(j);
    for (std::size_t i = 0; i < j; ++i) colons.push_back(colon(ordered[i], ordered[j]));
    auto& row = cert.witnesses[j];
    row.resize(j);
    for (std::size_t i = 0; i < j; ++i) {
      std::optional<std::size_t> witness;
      if (colons[i].degree() == 1) {
        witness = i;
      } else {
        for (std::size_t l = 0; l < j; ++l) {
          if (colons[l].degree() == 1 && colons[l].divides(colons[i])) {
            witness = l;
            break;
          }
        }
      }
      if (!witness) {
        result.failed_position = j + 1;
        return result;
      }
      row[i] = *witness;
    }
  }
  result.certificate = std::move(cert);
  return result;
}

bool verify_certificate(const LinearQuotientsCertificate& certificate) {
  const auto& f = certificate.ordering;
  if (certificate.witnesses.size() != f.size()) return false;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (certificate.witnesses[j].size() != j) return false;
    for (std::size_t i = 0; i < j; ++i) {
      const std::size_t l = certificate.witnesses[j][i];
      if (l >= j) return false;
      const Monomial witness = colon(f[l], f[j]);
      if (witness.degree() != 1 || !witness.divides(colon(f[i], f[j]))) return false;
    }
  }
  return true;
}

std::string to_string(OrderSearchMethod method) {
  switch (method) {
    case OrderSearchMethod::none:
      return "none";
    case OrderSearchMethod::ascending_heuristic:
      return "ascending_heuristic";
    case OrderSearchMethod::descending_heuristic:
      return "descending_heuristic";
    case OrderSearchMethod::backtracking:
      return "backtracking";
  }
  return "unknown";
}

namespace {

using Mask = std::uint32_t;

class OrderSearch {
 public:
  explicit OrderSearch(std::span<const Monomial> gens) : gens_(gens), n_(gens.size()) {
    // witness_masks_[g][i]: generators l whose colon with g is a variable
    // dividing colon(f_i, g).
    witness_masks_.assign(n_, std::vector<Mask>(n_, 0));
    std::vector<std::vector<Monomial>> colons(n_);
    for (std::size_t g = 0; g < n_; ++g) {
      for (std::size_t i = 0; i < n_; ++i) colons[g].push_back(colon(gens_[i], gens_[g]));
    }
    for (std::size_t g = 0; g < n_; ++g) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == g) continue;
        for (std::size_t l = 0; l < n_; ++l) {
          if (l == g) continue;
          if (colons[g][l].degree() == 1 && colons[g][l].divides(colons[g][i])) {
            witness_masks_[g][i] |= Mask{1} << l;
          }
        }
      }
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    full_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    if (dfs(0)) return order_;
    return std::nullopt;
  }

  std::size_t states() const { return states_; }

 private:
  bool feasible(Mask placed, std::size_t g) const {
    for (Mask rest = placed; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if ((witness_masks_[g][i] & placed) == 0) return false;
    }
    return true;
  }

  bool dfs(Mask placed) {
    if (placed == full_) return true;
    if (dead_.count(placed) != 0) return false;
    ++states_;
    for (std::size_t g = 0; g < n_; ++g) {
      if ((placed >> g) & 1U) continue;
      if (!feasible(placed, g)) continue;
      order_.push_back(g);
      if (dfs(placed | (Mask{1} << g))) return true;
      order_.pop_back();
    }
    dead_.insert(placed);
    return false;
  }

  std::span<const Monomial> gens_;
  std::size_t n_;
  Mask full_ = 0;
  std::vector<std::vector<Mask>> witness_masks_;
  std::unordered_set<Mask> dead_;
  std::vector<std::size_t> order_;
  std::size_t states_ = 0;
};

bool same_elements(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> x(a.begin(), a.end());
  std::vector<Monomial> y(b.begin(), b.end());
  sort_canonically(x);
  sort_canonically(y);
  return x == y;
}

}  // namespace

OrderSearchResult find_linear_quotients_order(std::span<const Monomial> gens,
                                              const OrderSearchOptions& options,
                                              std::span<const Monomial> heuristic_order) {
  OrderSearchResult result;
  std::vector<Monomial> ascending;
  if (!heuristic_order.empty()) {
    if (!same_elements(gens, heuristic_order)) {
      throw InputError("heuristic order is not a permutation of the generators");
    }
    ascending.assign(heuristic_order.begin(), heuristic_order.end());
  } else {
    ascending.assign(gens.begin(), gens.end());
    sort_canonically(ascending);
    std::reverse(ascending.begin(), ascending.end());
  }

  if (auto check = check_linear_quotients(ascending)) {
    result.certificate = std::move(check.certificate);
    result.method = OrderSearchMethod::ascending_heuristic;
    return result;
  }
  std::vector<Monomial> descending(ascending.rbegin(), ascending.rend());
  if (auto check = check_linear_quotients(descending)) {
    result.certificate = std::move(check.certificate);
    result.method = OrderSearchMethod::descending_heuristic;
    return result;
  }

  if (gens.size() > options.max_generators || gens.size() > 32) {
    throw ResourceLimitError("linear quotients search: " + std::to_string(gens.size()) +
                             " generators exceed the bound " +
                             std::to_string(std::min<std::size_t>(options.max_generators, 32)));
  }
  OrderSearch search(ascending);
  auto order = search.run();
  result.states_explored = search.states();
  if (!order) return result;
  std::vector<Monomial> ordered;
  for (std::size_t idx : *order) ordered.push_back(ascending[idx]);
  auto check = check_linear_quotients(ordered);
  result.certificate = std::move(check.certificate);
  result.method = OrderSearchMethod::backtracking;
  return result;
}

void BettiTable::add(unsigned i, const Monomial& multidegree, std::uint64_t rank) {
  if (rank == 0) return;
  multigraded_.push_back({i, multidegree, rank});
  totals_[{i, multidegree.degree()}] += rank;
}

std::uint64_t BettiTable::get(unsigned i, std::uint64_t j) const {
  auto it = totals_.find({i, j});
  return it == totals_.end() ? 0 : it->second;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_size) {
  const auto& gens = ideal.generators();
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> frontier = gens;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        Monomial l = lcm(a, g);
        if (seen.insert(l).second) {
          if (seen.size() > max_size) {
            throw ResourceLimitError("lcm lattice exceeds " + std::to_string(max_size) +
                                     " multidegrees");
          }
          next.push_back(std::move(l));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  sort_canonically(out);
  return out;
}

std::vector<std::uint32_t> upper_koszul_faces(const MonomialIdeal& ideal, const Monomial& b) {
  const auto support = b.terms();
  if (support.size() > 20) {
    throw ResourceLimitError("upper Koszul complex on more than 20 variables");
  }
  const std::uint32_t limit = std::uint32_t{1} << support.size();
  std::vector<std::uint32_t> faces;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Monomial::Term> terms;
    for (std::size_t k = 0; k < support.size(); ++k) {
      terms.push_back({support[k].var, support[k].exponent - ((mask >> k) & 1U)});
    }
    if (ideal.contains(Monomial(std::move(terms)))) faces.push_back(mask);
  }
  return faces;
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (ideal.size() > options.max_generators) {
    throw ResourceLimitError("Betti table: " + std::to_string(ideal.size()) +
                             " generators exceed the bound " +
                             std::to_string(options.max_generators));
  }
  BettiTable table;
  for (const auto& b : lcm_lattice(ideal, options.max_lattice)) {
    const auto faces = upper_koszul_faces(ideal, b);
    const auto homology = reduced_homology(faces);
    // beta_{i,b} = dim H~_{i-1}, stored at index i.
    for (std::size_t i = 0; i < homology.size(); ++i) {
      table.add(static_cast<unsigned>(i), b, homology[i]);
    }
  }
  return table;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiTable& table) {
  if (ideal.is_zero()) return true;
  if (!ideal.is_equigenerated()) return false;
  const std::uint64_t d = ideal.min_degree();
  return std::all_of(table.totals().begin(), table.totals().end(), [d](const auto& entry) {
    return entry.first.second == entry.first.first + d;
  });
}

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (!ideal.is_equigenerated()) return false;
  return has_linear_resolution(ideal, betti_table(ideal, options));
}

ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal, const BettiOptions& options) {
  ComponentwiseReport report;
  if (ideal.is_zero()) return report;
  for (auto j = static_cast<unsigned>(ideal.min_degree()); j <= ideal.max_degree(); ++j) {
    const bool linear = has_linear_resolution(component(ideal, j), options);
    report.per_degree.emplace_back(j, linear);
    report.componentwise_linear = report.componentwise_linear && linear;
  }
  return report;
}

std::string format_betti_table(const BettiTable& table) {
  if (table.empty()) return "0\n";
  unsigned max_i = 0;
  long min_row = std::numeric_limits<long>::max();
  long max_row = std::numeric_limits<long>::min();
  for (const auto& [key, value] : table.totals()) {
    max_i = std::max(max_i, key.first);
    const long row = static_cast<long>(key.second) - static_cast<long>(key.first);
    min_row = std::min(min_row, row);
    max_row = std::max(max_row, row);
  }
  std::vector<std::uint64_t> column_totals(max_i + 1, 0);
  for (const auto& [key, value] : table.totals()) column_totals[key.first] += value;

  std::vector<std::size_t> width(max_i + 1, 1);
  for (unsigned i = 0; i <= max_i; ++i) {
    width[i] = std::max(std::to_string(i).size(), std::to_string(column_totals[i]).size());
  }
  std::ostringstream out;
  out << std::setw(6) << "";
  for (unsigned i = 0; i <= max_i; ++i) out << ' ' << std::setw(static_cast<int>(width[i])) << i;
  out << "\ntotal:";
  for (unsigned i = 0; i <= max_i; ++i) {
    out << ' ' << std::setw(static_cast<int>(width[i])) << column_totals[i];
  }
  out << '\n';
  for (long row = min_row; row <= max_row; ++row) {
    out << std::setw(5) << row << ':';
    for (unsigned i = 0; i <= max_i; ++i) {
      const auto v = table.get(i, static_cast<std::uint64_t>(row + static_cast<long>(i)));
      out << ' ' << std::setw(static_cast<int>(width[i]));
      if (v == 0) {
        out << '.';
      } else {
        out << v;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace reescov
