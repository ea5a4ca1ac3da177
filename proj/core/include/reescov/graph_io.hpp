#pragma once

// Graph JSON ingestion/emission and the construction DSL:
//   path:4  cycle:5  complete:3  complete_bipartite:2:3  star:3  fan:3
//   friendship:2  edgeless:3  edge  vertex  random:8:0.4
//   cone(<expr>)   attach(<expr>;<expr>,<expr>,...)
//   cw(<expr>;leaves=1;triangles=1)   cmb(<poset.json>|chain:n|antichain:n)
//   any token ending in .json is read as a graph (or poset) file.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reescov/graphs.hpp"
#include "reescov/monomials.hpp"

namespace reescov {

/// {"vertices": [...], "edges": [[a, b], ...], "parts": {"X": [...], "Y": [...]}}
Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);
Graph load_graph_file(const std::filesystem::path& path);

/// {"elements": [...], "relations": [[p, q], ...]} with (p, q) meaning p <= q.
Poset poset_from_json(std::string_view text);

/// JSON array of monomial strings; variables are named by `universe`.
MonomialIdeal ideal_from_json(std::string_view text, const UniversePtr& universe);
/// JSON array of monomial strings; the variable universe is inferred from
/// the names, ordered by prefix then numeric suffix.
MonomialIdeal ideal_from_json(std::string_view text);

struct DslContext {
  std::filesystem::path base_dir = ".";
  std::uint64_t seed = 0;
};

/// How a parsed graph was built: attachment constructions keep their
/// attached graphs so callers can check hypotheses on each H_i.
struct Construction {
  enum class Kind { plain, attach, cameron_walker };

  Graph graph;
  Kind kind = Kind::plain;
  std::vector<Graph> attached;
  /// Cameron-Walker with exactly one leaf on every X-vertex.
  bool one_leaf_per_x = false;
  std::string source;
};

/// Accepts DSL expressions and .json paths. Throws InputError.
Construction parse_construction(std::string_view text, const DslContext& context = {});

}  // namespace reescov
