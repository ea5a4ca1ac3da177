#include "reescov/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace reescov {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRow = std::vector<std::pair<std::size_t, BigInt>>;

void normalise(BigRow& row) {
  if (row.empty()) return;
  BigInt content = abs(row.front().second);
  for (const auto& [c, v] : row) {
    content = gcd(content, abs(v));
    if (content == 1) break;
  }
  if (row.front().second < 0) content = -content;
  if (content != 1) {
    for (auto& [c, v] : row) v /= content;
  }
}

// a * row - b * pivot, both sorted by column.
BigRow combine(const BigRow& row, const BigInt& a, const BigRow& pivot, const BigInt& b) {
  BigRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      BigInt v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rational_rank(std::span<const SparseRow> rows) {
  std::map<std::size_t, BigRow> pivots;
  for (const auto& input : rows) {
    BigRow row;
    row.reserve(input.size());
    for (const auto& [c, v] : input) {
      if (v != 0) row.emplace_back(c, BigInt(v));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    normalise(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const BigInt a = it->second.front().second;
      const BigInt b = row.front().second;
      row = combine(row, a, it->second, b);
      normalise(row);
    }
    if (!row.empty()) pivots.emplace(row.front().first, std::move(row));
  }
  return pivots.size();
}

std::vector<std::size_t> reduced_homology(std::span<const std::uint32_t> faces) {
  if (faces.empty()) return {};
  int top = -1;
  for (auto f : faces) top = std::max(top, std::popcount(f) - 1);
  // by_dim[d + 1] lists the faces of dimension d.
  std::vector<std::vector<std::uint32_t>> by_dim(static_cast<std::size_t>(top) + 2);
  for (auto f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& level : by_dim) std::sort(level.begin(), level.end());

  // rank_of[d + 1] = rank of the boundary map from dimension d to d - 1.
  std::vector<std::size_t> rank_of(by_dim.size() + 1, 0);
  for (std::size_t level = 1; level < by_dim.size(); ++level) {
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t k = 0; k < by_dim[level - 1].size(); ++k) index.emplace(by_dim[level - 1][k], k);
    std::vector<SparseRow> rows;
    rows.reserve(by_dim[level].size());
    for (auto face : by_dim[level]) {
      SparseRow row;
      std::int64_t sign = 1;
      for (std::uint32_t rest = face; rest != 0; rest &= rest - 1) {
        const std::uint32_t v = rest & (~rest + 1);
        auto it = index.find(face & ~v);
        if (it != index.end()) row.emplace_back(it->second, sign);
        sign = -sign;
      }
      rows.push_back(std::move(row));
    }
    rank_of[level] = rational_rank(rows);
  }

  std::vector<std::size_t> out(by_dim.size(), 0);
  for (std::size_t level = 0; level < by_dim.size(); ++level) {
    const std::size_t cycles = by_dim[level].size() - rank_of[level];
    out[level] = cycles - rank_of[level + 1];
  }
  return out;
}

}  // namespace reescov
