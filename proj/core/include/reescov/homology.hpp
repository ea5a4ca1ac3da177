#pragma once

// Exact ranks over Q and reduced simplicial homology of small complexes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace reescov {

/// Sparse integer row: (column, value) pairs with distinct columns.
using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Rank over Q by fraction-free elimination with arbitrary-precision
/// integers; rows are content-normalised after every step.
std::size_t rational_rank(std::span<const SparseRow> rows);

/// Reduced homology dimensions over Q of the complex whose faces are the
/// given vertex bitmasks (must be closed under subsets and contain 0 for a
/// non-void complex). Entry d + 1 holds dim H~_d for d = -1, 0, ...
std::vector<std::size_t> reduced_homology(std::span<const std::uint32_t> faces);

}  // namespace reescov
