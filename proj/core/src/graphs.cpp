#include "reescov/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

#include "reescov/errors.hpp"

namespace reescov {

namespace {

VertexSet bit(VertexId v) { return VertexSet{1} << v; }

bool is_reserved_label(std::string_view label) {
  if (label == "t") return true;
  if (label.size() >= 2 && label[0] == 'y' &&
      std::all_of(label.begin() + 1, label.end(),
                  [](unsigned char c) { return std::isdigit(c) != 0; })) {
    return true;
  }
  return false;
}

void validate_label(std::string_view label) {
  if (label.empty()) throw InputError("empty vertex label");
  auto ident_start = [](unsigned char c) { return std::isalpha(c) != 0 || c == '_'; };
  auto ident_char = [](unsigned char c) { return std::isalnum(c) != 0 || c == '_'; };
  if (!ident_start(static_cast<unsigned char>(label.front())) ||
      !std::all_of(label.begin(), label.end(),
                   [&](char c) { return ident_char(static_cast<unsigned char>(c)); })) {
    throw InputError("vertex label '" + std::string(label) +
                     "' is not an identifier ([A-Za-z_][A-Za-z0-9_]*)");
  }
  // y<digits> and t name the Rees variables in reports.
  if (is_reserved_label(label)) {
    throw InputError("vertex label '" + std::string(label) + "' is reserved for Rees variables");
  }
}

std::vector<Vertex> numbered_base(std::size_t n, std::string_view prefix) {
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Vertex::base(i, std::string(prefix) + std::to_string(i + 1)));
  }
  return out;
}

Graph single_vertex() { return Graph(numbered_base(1, "x"), {}); }

void require_positive(std::size_t value, std::string_view what) {
  if (value < 1) throw InputError(std::string(what) + " must be >= 1");
}

}  // namespace

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
             std::optional<Bipartition> parts)
    : vertices_(std::move(vertices)), parts_(std::move(parts)) {
  if (vertices_.size() > kMaxVertices) {
    throw InputError("graph has " + std::to_string(vertices_.size()) +
                     " vertices; at most " + std::to_string(kMaxVertices) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    validate_label(v.label);
    if (!seen.insert(v.label).second) throw InputError("duplicate vertex label '" + v.label + "'");
  }
  adjacency_.assign(vertices_.size(), 0);
  std::set<Edge> unique;
  for (auto e : edges) {
    if (e.a >= vertices_.size() || e.b >= vertices_.size()) {
      throw InputError("edge endpoint out of range");
    }
    if (e.a == e.b) throw InputError("loop at vertex '" + vertices_[e.a].label + "'");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (!unique.insert(e).second) {
      throw InputError("parallel edge {" + vertices_[e.a].label + "," + vertices_[e.b].label + "}");
    }
    adjacency_[e.a] |= bit(e.b);
    adjacency_[e.b] |= bit(e.a);
  }
  edges_.assign(unique.begin(), unique.end());

  if (parts_) {
    VertexSet covered = 0;
    for (const auto* side : {&parts_->x, &parts_->y}) {
      for (VertexId v : *side) {
        if (v >= vertices_.size()) throw InputError("bipartition names an unknown vertex");
        if (covered & bit(v)) {
          throw InputError("vertex '" + vertices_[v].label + "' appears twice in the bipartition");
        }
        covered |= bit(v);
      }
    }
    if (covered != all_vertices()) throw InputError("bipartition does not cover every vertex");
    VertexSet x_mask = 0;
    for (VertexId v : parts_->x) x_mask |= bit(v);
    for (const auto& e : edges_) {
      if (((x_mask >> e.a) & 1U) == ((x_mask >> e.b) & 1U)) {
        throw InputError("edge {" + vertices_[e.a].label + "," + vertices_[e.b].label +
                         "} lies inside one side of the bipartition");
      }
    }
  }
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  return a < size() && b < size() && ((adjacency_[a] >> b) & 1U);
}

VertexSet Graph::all_vertices() const {
  return size() == kMaxVertices ? ~VertexSet{0} : bit(size()) - 1;
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].label == label) return v;
  }
  return std::nullopt;
}

std::vector<std::string> Graph::labels() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.label);
  return out;
}

Graph Graph::with_parts(std::optional<Bipartition> parts) const {
  return Graph(vertices_, edges_, std::move(parts));
}

std::size_t VertexCover::size() const { return static_cast<std::size_t>(std::popcount(members)); }

std::vector<VertexId> VertexCover::ids() const {
  std::vector<VertexId> out;
  for (VertexSet m = members; m != 0; m &= m - 1) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
  }
  return out;
}

Poset::Poset(std::vector<std::string> elements,
             std::vector<std::pair<std::size_t, std::size_t>> relation)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  leq_.assign(n * n, false);
  for (std::size_t p = 0; p < n; ++p) leq_[p * n + p] = true;
  for (auto [p, q] : relation) {
    if (p >= n || q >= n) throw InputError("poset relation names an unknown element");
    leq_[p * n + q] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq_[k * n + j]) leq_[i * n + j] = true;
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (leq_[p * n + q] && leq_[q * n + p]) {
        throw InputError("relation is not a partial order: '" + elements_[p] + "' and '" +
                         elements_[q] + "' are mutually related");
      }
    }
  }
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i + 1));
    if (i + 1 < n) rel.emplace_back(i, i + 1);
  }
  return Poset(std::move(names), std::move(rel));
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i + 1));
  return Poset(std::move(names), {});
}

Graph build_graph(std::span<const std::string> vertex_labels,
                  std::span<const std::pair<std::string, std::string>> edges) {
  std::vector<Vertex> vertices;
  std::map<std::string, VertexId, std::less<>> index;
  for (std::size_t i = 0; i < vertex_labels.size(); ++i) {
    if (!index.emplace(vertex_labels[i], i).second) {
      throw InputError("duplicate vertex label '" + vertex_labels[i] + "'");
    }
    vertices.push_back(Vertex::base(i, vertex_labels[i]));
  }
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InputError("edge endpoint '" + a + "' is not a vertex");
    if (ib == index.end()) throw InputError("edge endpoint '" + b + "' is not a vertex");
    out.push_back({ia->second, ib->second});
  }
  return Graph(std::move(vertices), std::move(out));
}

Graph standard_family(Family kind, std::size_t param, std::size_t param2) {
  std::vector<Edge> edges;
  switch (kind) {
    case Family::path:
      require_positive(param, "path length");
      for (std::size_t i = 0; i + 1 < param; ++i) edges.push_back({i, i + 1});
      return Graph(numbered_base(param, "x"), std::move(edges));
    case Family::cycle:
      if (param < 3) throw InputError("cycle needs at least 3 vertices");
      for (std::size_t i = 0; i < param; ++i) edges.push_back({i, (i + 1) % param});
      return Graph(numbered_base(param, "x"), std::move(edges));
    case Family::complete:
      require_positive(param, "complete graph size");
      for (std::size_t i = 0; i < param; ++i) {
        for (std::size_t j = i + 1; j < param; ++j) edges.push_back({i, j});
      }
      return Graph(numbered_base(param, "x"), std::move(edges));
    case Family::complete_bipartite: {
      require_positive(param, "complete bipartite part size");
      require_positive(param2, "complete bipartite part size");
      auto vertices = numbered_base(param, "a");
      Bipartition parts;
      for (std::size_t i = 0; i < param; ++i) parts.x.push_back(i);
      for (std::size_t j = 0; j < param2; ++j) {
        vertices.push_back(Vertex::base(param + j, "b" + std::to_string(j + 1)));
        parts.y.push_back(param + j);
        for (std::size_t i = 0; i < param; ++i) edges.push_back({i, param + j});
      }
      return Graph(std::move(vertices), std::move(edges), std::move(parts));
    }
    case Family::star: {
      require_positive(param, "star size");
      const Graph leaves = standard_family(Family::edgeless, param);
      return attach(single_vertex(), std::span(&leaves, 1));
    }
    case Family::friendship: {
      require_positive(param, "friendship size");
      std::vector<Graph> copies(param, standard_family(Family::path, 2));
      const Graph matching = disjoint_union(copies);
      return attach(single_vertex(), std::span(&matching, 1));
    }
    case Family::fan: {
      require_positive(param, "fan size");
      const Graph p = standard_family(Family::path, param);
      return attach(single_vertex(), std::span(&p, 1));
    }
    case Family::edgeless:
      return Graph(numbered_base(param, "x"), {});
  }
  throw InputError("unknown graph family");
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::unordered_set<std::string> labels;
  bool collide = false;
  for (const auto& g : parts) {
    for (const auto& v : g.vertices()) collide |= !labels.insert(v.label).second;
  }
  std::size_t offset = 0;
  for (const auto& g : parts) {
    for (const auto& v : g.vertices()) {
      Vertex copy = v;
      copy.index = vertices.size();
      copy.kind = Vertex::Kind::base;
      copy.host = 0;
      if (collide) copy.label = "v" + std::to_string(vertices.size() + 1);
      vertices.push_back(std::move(copy));
    }
    for (const auto& e : g.edges()) edges.push_back({e.a + offset, e.b + offset});
    offset += g.size();
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph cone(const Graph& g) {
  if (g.empty()) throw InputError("cone of an empty graph");
  return attach(single_vertex(), std::span(&g, 1));
}

Graph attach(const Graph& g, std::span<const Graph> hs) {
  if (hs.size() != g.size()) {
    throw InputError("attach: expected " + std::to_string(g.size()) + " attached graphs, got " +
                     std::to_string(hs.size()));
  }
  std::size_t attached_total = 0;
  for (const auto& h : hs) attached_total += h.size();
  if (attached_total + g.size() > kMaxVertices) {
    throw InputError("attach: result exceeds " + std::to_string(kMaxVertices) + " vertices");
  }

  const bool single_host = g.size() == 1;
  auto make_label = [&](std::string_view prefix, std::size_t host, std::size_t j) {
    std::string s(prefix);
    if (!single_host) s += std::to_string(host + 1) + "_";
    s += std::to_string(j + 1);
    return s;
  };
  std::unordered_set<std::string> base_labels;
  for (const auto& v : g.vertices()) base_labels.insert(v.label);
  std::string prefix;
  for (std::string_view candidate : {"z", "w", "u", "v", "s", "r"}) {
    bool clash = false;
    for (std::size_t i = 0; i < hs.size() && !clash; ++i) {
      for (std::size_t j = 0; j < hs[i].size() && !clash; ++j) {
        clash = base_labels.count(make_label(candidate, i, j)) != 0;
      }
    }
    if (!clash) {
      prefix = candidate;
      break;
    }
  }
  if (prefix.empty()) throw InputError("attach: cannot find unused labels for attached vertices");

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::size_t> block_start(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    block_start[i] = vertices.size();
    for (std::size_t j = 0; j < hs[i].size(); ++j) {
      vertices.push_back(Vertex::attached(i, j, make_label(prefix, i, j)));
    }
    for (const auto& e : hs[i].edges()) {
      edges.push_back({block_start[i] + e.a, block_start[i] + e.b});
    }
  }
  const std::size_t base_start = vertices.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Vertex v = g.vertex(i);
    v.kind = Vertex::Kind::base;
    v.host = 0;
    v.index = i;
    vertices.push_back(std::move(v));
  }
  for (const auto& e : g.edges()) edges.push_back({base_start + e.a, base_start + e.b});
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = 0; j < hs[i].size(); ++j) {
      edges.push_back({block_start[i] + j, base_start + i});
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph cm_bipartite_from_poset(const Poset& p) {
  const std::size_t n = p.size();
  require_positive(n, "poset size");
  auto vertices = numbered_base(n, "a");
  Bipartition parts;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back(Vertex::base(n + i, "b" + std::to_string(i + 1)));
    parts.x.push_back(i);
    parts.y.push_back(n + i);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.leq(a, b)) edges.push_back({a, n + b});
    }
  }
  return Graph(std::move(vertices), std::move(edges), std::move(parts));
}

Graph cameron_walker(const Graph& bipartite, std::span<const std::size_t> leaves_per_x,
                     std::span<const std::size_t> triangles_per_y) {
  if (!bipartite.parts()) throw InputError("cameron_walker: core graph has no declared bipartition");
  if (bipartite.empty()) throw InputError("cameron_walker: empty core graph");
  if (!is_connected(bipartite)) throw InputError("cameron_walker: core graph is not connected");
  const auto& parts = *bipartite.parts();
  if (leaves_per_x.size() != parts.x.size() || triangles_per_y.size() != parts.y.size()) {
    throw InputError("cameron_walker: count lists do not match the bipartition sizes");
  }
  std::vector<Graph> hs(bipartite.size());
  for (std::size_t i = 0; i < parts.x.size(); ++i) {
    require_positive(leaves_per_x[i], "leaves per X-vertex");
    hs[parts.x[i]] = standard_family(Family::edgeless, leaves_per_x[i]);
  }
  for (std::size_t i = 0; i < parts.y.size(); ++i) {
    require_positive(triangles_per_y[i], "pendant triangles per Y-vertex");
    std::vector<Graph> copies(triangles_per_y[i], standard_family(Family::path, 2));
    hs[parts.y[i]] = disjoint_union(copies);
  }
  return attach(bipartite, hs);
}

bool is_vertex_cover(const Graph& g, VertexSet candidate) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return ((candidate >> e.a) & 1U) || ((candidate >> e.b) & 1U);
  });
}

namespace {

struct BronKerbosch {
  std::vector<VertexSet> complement;
  std::vector<VertexSet> out;

  void run(VertexSet r, VertexSet p, VertexSet x) {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    VertexSet candidates = p | x;
    VertexId pivot = static_cast<VertexId>(std::countr_zero(candidates));
    int best = -1;
    for (VertexSet c = candidates; c != 0; c &= c - 1) {
      auto u = static_cast<VertexId>(std::countr_zero(c));
      int score = std::popcount(p & complement[u]);
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
    for (VertexSet rest = p & ~complement[pivot]; rest != 0; rest &= rest - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(rest));
      run(r | bit(v), p & complement[v], x & complement[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  }
};

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  BronKerbosch bk;
  const VertexSet all = g.all_vertices();
  bk.complement.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    bk.complement[v] = all & ~g.neighbors(v) & ~bit(v);
  }
  bk.run(0, all, 0);
  return std::move(bk.out);
}

int compare_lex_sets(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  if (diff == 0) return 0;
  const VertexSet lowest = diff & (~diff + 1);
  return (a & lowest) ? 1 : -1;
}

std::vector<VertexCover> minimal_vertex_covers(const Graph& g) {
  const VertexSet all = g.all_vertices();
  std::vector<VertexCover> covers;
  for (VertexSet independent : maximal_independent_sets(g)) {
    covers.push_back(VertexCover{all & ~independent, true});
  }
  std::sort(covers.begin(), covers.end(), [](const VertexCover& a, const VertexCover& b) {
    return compare_lex_sets(a.members, b.members) > 0;
  });
  return covers;
}

bool is_unmixed(const Graph& g) {
  const auto covers = minimal_vertex_covers(g);
  return std::all_of(covers.begin(), covers.end(),
                     [&](const VertexCover& c) { return c.size() == covers.front().size(); });
}

std::vector<VertexId> lex_bfs_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<VertexId> pick;
    for (VertexId v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!pick || label[v] > label[*pick]) pick = v;
    }
    visited[*pick] = true;
    order.push_back(*pick);
    for (VertexSet nb = g.neighbors(*pick); nb != 0; nb &= nb - 1) {
      auto w = static_cast<VertexId>(std::countr_zero(nb));
      if (!visited[w]) label[w].push_back(n - step);
    }
  }
  return order;
}

bool is_chordal(const Graph& g) {
  const auto order = lex_bfs_order(g);
  std::vector<std::size_t> position(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  // The reverse of a LexBFS order is a perfect elimination ordering iff g is chordal.
  for (VertexId v : order) {
    VertexSet earlier = 0;
    for (VertexSet nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
      auto w = static_cast<VertexId>(std::countr_zero(nb));
      if (position[w] < position[v]) earlier |= bit(w);
    }
    if (earlier == 0) continue;
    VertexId parent = 0;
    std::size_t best = 0;
    bool found = false;
    for (VertexSet e = earlier; e != 0; e &= e - 1) {
      auto w = static_cast<VertexId>(std::countr_zero(e));
      if (!found || position[w] > best) {
        best = position[w];
        parent = w;
        found = true;
      }
    }
    const VertexSet rest = earlier & ~bit(parent);
    if ((rest & ~g.neighbors(parent)) != 0) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(static_cast<VertexId>(std::countr_zero(f)));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  std::vector<int> color(g.size(), -1);
  for (VertexId start = 0; start < g.size(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<VertexId> stack{start};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexSet nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
        auto w = static_cast<VertexId>(std::countr_zero(nb));
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (VertexId v = 0; v < g.size(); ++v) (color[v] == 0 ? parts.x : parts.y).push_back(v);
  return parts;
}

}  // namespace reescov
