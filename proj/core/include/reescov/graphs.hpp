#pragma once

// Finite simple graphs with an explicit variable priority, minimal vertex
// covers, and the graph families / constructions used by the cover-ideal
// pipeline (cones, attachments G(H_1, ..., H_n), Cameron-Walker graphs,
// Cohen-Macaulay bipartite graphs from posets).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reescov {

/// Position of a vertex in the graph's priority sequence (0 = highest).
using VertexId = std::size_t;

/// Bitmask over VertexIds; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

/// Largest graph the bitset-based enumerators accept.
inline constexpr std::size_t kMaxVertices = 64;

struct Vertex {
  enum class Kind : std::uint8_t { base, attached };

  Kind kind = Kind::base;
  std::size_t host = 0;  // meaningful for attached vertices only
  std::size_t index = 0;
  std::string label;

  static Vertex base(std::size_t index, std::string label) {
    return Vertex{Kind::base, 0, index, std::move(label)};
  }
  static Vertex attached(std::size_t host, std::size_t index, std::string label) {
    return Vertex{Kind::attached, host, index, std::move(label)};
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  VertexId a = 0;  // a < b
  VertexId b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Declared bipartition; X and Y list vertex ids.
struct Bipartition {
  std::vector<VertexId> x;
  std::vector<VertexId> y;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Immutable simple graph. The vertex sequence is the variable priority,
/// highest first; every construction in this header emits the attached
/// blocks before the base vertices.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
        std::optional<Bipartition> parts = std::nullopt);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::optional<Bipartition>& parts() const { return parts_; }

  bool has_edge(VertexId a, VertexId b) const;
  VertexSet neighbors(VertexId v) const { return adjacency_.at(v); }
  VertexSet all_vertices() const;
  std::optional<VertexId> find(std::string_view label) const;
  std::vector<std::string> labels() const;

  Graph with_parts(std::optional<Bipartition> parts) const;

  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.vertices_ == rhs.vertices_ && lhs.edges_ == rhs.edges_ &&
           lhs.parts_ == rhs.parts_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  std::optional<Bipartition> parts_;
};

struct VertexCover {
  VertexSet members = 0;
  bool minimal = false;

  std::size_t size() const;
  bool contains(VertexId v) const { return (members >> v) & 1U; }
  std::vector<VertexId> ids() const;
  friend bool operator==(const VertexCover&, const VertexCover&) = default;
};

/// Finite poset given by elements and a relation; `relation` holds pairs
/// (p, q) meaning p <= q. Closed reflexively and transitively on
/// construction.
class Poset {
 public:
  Poset(std::vector<std::string> elements,
        std::vector<std::pair<std::size_t, std::size_t>> relation);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(std::size_t p, std::size_t q) const { return leq_[p * size() + q]; }

 private:
  std::vector<std::string> elements_;
  std::vector<bool> leq_;
};

enum class Family { path, cycle, complete, complete_bipartite, star, friendship, fan, edgeless };

Graph build_graph(std::span<const std::string> vertex_labels,
                  std::span<const std::pair<std::string, std::string>> edges);

/// `param2` is used by complete_bipartite only.
Graph standard_family(Family kind, std::size_t param, std::size_t param2 = 0);

/// Vertex-disjoint union; priorities concatenated in argument order.
/// Vertices are relabelled v1, v2, ... when labels would collide.
Graph disjoint_union(std::span<const Graph> parts);

/// Adds a universal vertex, placed last in priority. Equivalent to
/// attach(single vertex, {g}).
Graph cone(const Graph& g);

/// G(H_1, ..., H_n): every vertex of hs[i] is joined to vertex i of g.
/// Priority: the block of hs[0] (in its own order), ..., the block of
/// hs[n-1], then the vertices of g. Attached vertices are labelled z<j>
/// when g has one vertex, z<i>_<j> otherwise.
Graph attach(const Graph& g, std::span<const Graph> hs);

/// Bipartite graph on {a_p} and {b_p} with a_p ~ b_q iff p <= q.
Graph cm_bipartite_from_poset(const Poset& p);

/// Pendant leaves on X-vertices and pendant triangles on Y-vertices of a
/// connected bipartite core with declared parts. Counts align with
/// parts().x and parts().y.
Graph cameron_walker(const Graph& bipartite, std::span<const std::size_t> leaves_per_x,
                     std::span<const std::size_t> triangles_per_y);

bool is_vertex_cover(const Graph& g, VertexSet candidate);

/// Maximal independent sets via Bron-Kerbosch with pivoting on the
/// complement graph.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Inclusion-minimal vertex covers, sorted by u_C descending in lex order
/// of the vertex priority.
std::vector<VertexCover> minimal_vertex_covers(const Graph& g);

/// Lex comparison of the squarefree monomials u_A and u_B (bit 0 is the
/// highest variable). Returns <0, 0, >0.
int compare_lex_sets(VertexSet a, VertexSet b);

bool is_unmixed(const Graph& g);
bool is_chordal(const Graph& g);
bool is_connected(const Graph& g);

/// A 2-colouring with X containing the first vertex of each component,
/// or nullopt when g has an odd cycle.
std::optional<Bipartition> two_coloring(const Graph& g);

/// Lexicographic breadth-first search order (first visited first).
std::vector<VertexId> lex_bfs_order(const Graph& g);

}  // namespace reescov
