#include "reescov/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "reescov/errors.hpp"

namespace reescov {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<VertexId> ids_for(const json& labels, const std::vector<std::string>& vertex_labels) {
  if (!labels.is_array()) throw InputError("bipartition sides must be arrays of labels");
  std::vector<VertexId> out;
  for (const auto& l : labels) {
    if (!l.is_string()) throw InputError("bipartition entries must be strings");
    auto it = std::find(vertex_labels.begin(), vertex_labels.end(), l.get<std::string>());
    if (it == vertex_labels.end()) {
      throw InputError("bipartition names unknown vertex '" + l.get<std::string>() + "'");
    }
    out.push_back(static_cast<VertexId>(it - vertex_labels.begin()));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') {
      if (--depth < 0) throw InputError("unbalanced ')' in '" + std::string(s) + "'");
    }
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw InputError("unbalanced '(' in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

bool ends_with_json(std::string_view s) {
  return s.size() > 5 && s.substr(s.size() - 5) == ".json";
}

std::filesystem::path resolve(std::string_view token, const DslContext& ctx) {
  std::filesystem::path p{std::string(token)};
  return p.is_absolute() ? p : ctx.base_dir / p;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  // Raw engine output keeps the stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(Vertex::base(i, "x" + std::to_string(i + 1)));
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({a, b});
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

Construction attach_construction(const Graph& base, std::vector<Graph> hs) {
  Construction c;
  c.graph = attach(base, hs);
  c.kind = Construction::Kind::attach;
  c.attached = std::move(hs);
  return c;
}

Construction parse_family(std::string_view name, std::string_view args, const DslContext& ctx) {
  auto params = split_top_level(args, ':');
  auto one = [&](std::string_view what) {
    if (params.size() != 1) throw InputError("family '" + std::string(name) + "' takes one parameter");
    return parse_count(params[0], what);
  };
  Construction c;
  if (name == "path") {
    c.graph = standard_family(Family::path, one("path length"));
  } else if (name == "cycle") {
    c.graph = standard_family(Family::cycle, one("cycle length"));
  } else if (name == "complete") {
    c.graph = standard_family(Family::complete, one("complete graph size"));
  } else if (name == "complete_bipartite") {
    if (params.size() != 2) throw InputError("complete_bipartite takes two parameters (a:b)");
    c.graph = standard_family(Family::complete_bipartite, parse_count(params[0], "part size"),
                              parse_count(params[1], "part size"));
  } else if (name == "edgeless") {
    c.graph = standard_family(Family::edgeless, one("vertex count"));
  } else if (name == "star") {
    const auto n = one("star size");
    c = attach_construction(standard_family(Family::path, 1),
                            {standard_family(Family::edgeless, n)});
    c.graph = standard_family(Family::star, n);
  } else if (name == "fan") {
    const auto n = one("fan size");
    c = attach_construction(standard_family(Family::path, 1), {standard_family(Family::path, n)});
    c.graph = standard_family(Family::fan, n);
  } else if (name == "friendship") {
    const auto n = one("friendship size");
    if (n < 1) throw InputError("friendship size must be >= 1");
    std::vector<Graph> copies(n, standard_family(Family::path, 2));
    c = attach_construction(standard_family(Family::path, 1), {disjoint_union(copies)});
    c.graph = standard_family(Family::friendship, n);
  } else if (name == "random") {
    if (params.size() != 2) throw InputError("random takes two parameters (n:p)");
    const auto n = parse_count(params[0], "vertex count");
    double p = 0;
    const auto text = params[1];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size() || p < 0 || p > 1) {
      throw InputError("bad edge probability '" + std::string(text) + "'");
    }
    c.graph = random_graph(n, p, ctx.seed);
  } else {
    throw InputError("unknown graph family '" + std::string(name) + "'");
  }
  return c;
}

Poset parse_poset(std::string_view text, const DslContext& ctx) {
  text = trim(text);
  if (ends_with_json(text)) return poset_from_json(read_file(resolve(text, ctx)));
  const auto colon_at = text.find(':');
  if (colon_at == std::string_view::npos) throw InputError("bad poset '" + std::string(text) + "'");
  const auto name = text.substr(0, colon_at);
  const auto n = parse_count(text.substr(colon_at + 1), "poset size");
  if (name == "chain") return Poset::chain(n);
  if (name == "antichain") return Poset::antichain(n);
  throw InputError("unknown poset '" + std::string(name) + "'");
}

std::size_t parse_keyed(std::string_view text, std::string_view key) {
  text = trim(text);
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || trim(text.substr(0, eq)) != key) {
    throw InputError("expected '" + std::string(key) + "=<n>', got '" + std::string(text) + "'");
  }
  return parse_count(text.substr(eq + 1), key);
}

}  // namespace

Graph graph_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("graph JSON must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("graph JSON needs a \"vertices\" array");
  }
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InputError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw InputError("each edge must be a 2-element array of labels");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  Graph g = build_graph(labels, edges);
  if (doc.contains("parts")) {
    const auto& parts = doc["parts"];
    if (!parts.is_object() || !parts.contains("X") || !parts.contains("Y")) {
      throw InputError("\"parts\" must be an object with \"X\" and \"Y\"");
    }
    g = g.with_parts(Bipartition{ids_for(parts["X"], labels), ids_for(parts["Y"], labels)});
  }
  return g;
}

std::string graph_to_json(const Graph& g) {
  json doc;
  doc["vertices"] = g.labels();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.vertex(e.a).label, g.vertex(e.b).label});
  doc["edges"] = std::move(edges);
  if (g.parts()) {
    json x = json::array();
    json y = json::array();
    for (auto v : g.parts()->x) x.push_back(g.vertex(v).label);
    for (auto v : g.parts()->y) y.push_back(g.vertex(v).label);
    doc["parts"] = {{"X", std::move(x)}, {"Y", std::move(y)}};
  }
  return doc.dump(2) + "\n";
}

Graph load_graph_file(const std::filesystem::path& path) { return graph_from_json(read_file(path)); }

Poset poset_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
    throw InputError("poset JSON needs an \"elements\" array");
  }
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw InputError("poset elements must be strings");
    elements.push_back(e.get<std::string>());
  }
  auto index_of = [&](const json& label) {
    if (!label.is_string()) throw InputError("poset relation entries must be strings");
    auto it = std::find(elements.begin(), elements.end(), label.get<std::string>());
    if (it == elements.end()) {
      throw InputError("poset relation names unknown element '" + label.get<std::string>() + "'");
    }
    return static_cast<std::size_t>(it - elements.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> relation;
  if (doc.contains("relations")) {
    for (const auto& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2) throw InputError("each relation must be a pair");
      relation.emplace_back(index_of(r[0]), index_of(r[1]));
    }
  }
  return Poset(std::move(elements), std::move(relation));
}

MonomialIdeal ideal_from_json(std::string_view text, const UniversePtr& universe) {
  const json doc = parse_json(text);
  if (!doc.is_array()) throw InputError("ideal JSON must be an array of monomial strings");
  std::vector<Monomial> gens;
  for (const auto& m : doc) {
    if (!m.is_string()) throw InputError("ideal generators must be strings");
    gens.push_back(universe->parse(m.get<std::string>()));
  }
  return MonomialIdeal(universe, std::move(gens));
}

MonomialIdeal ideal_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array()) throw InputError("ideal JSON must be an array of monomial strings");
  std::set<std::string> names;
  for (const auto& m : doc) {
    if (!m.is_string()) throw InputError("ideal generators must be strings");
    std::string s = m.get<std::string>();
    for (auto factor : split_top_level(s, '*')) {
      auto name = trim(factor.substr(0, factor.find('^')));
      if (name != "1" && !name.empty()) names.emplace(name);
    }
  }
  // Natural order: alternating non-digit / digit runs, digit runs numerically.
  auto key = [](const std::string& s) {
    std::vector<std::pair<std::string, std::size_t>> parts;
    std::size_t i = 0;
    while (i < s.size()) {
      std::string word;
      while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) word += s[i++];
      std::size_t number = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        number = number * 10 + static_cast<std::size_t>(s[i++] - '0');
      }
      parts.emplace_back(std::move(word), number);
    }
    return parts;
  };
  std::vector<std::string> ordered(names.begin(), names.end());
  std::sort(ordered.begin(), ordered.end(),
            [&](const std::string& a, const std::string& b) { return key(a) < key(b); });
  return ideal_from_json(text, make_universe(std::move(ordered)));
}

Construction parse_construction(std::string_view text, const DslContext& ctx) {
  text = trim(text);
  if (text.empty()) throw InputError("empty graph expression");
  Construction c;
  const auto paren = text.find('(');
  if (paren != std::string_view::npos) {
    if (text.back() != ')') throw InputError("expected ')' at end of '" + std::string(text) + "'");
    const auto name = trim(text.substr(0, paren));
    const auto inner = text.substr(paren + 1, text.size() - paren - 2);
    split_top_level(inner, ';');  // balance check
    if (name == "cone") {
      const auto sub = parse_construction(inner, ctx);
      c = attach_construction(standard_family(Family::path, 1), {sub.graph});
      c.graph = cone(sub.graph);
    } else if (name == "attach") {
      const auto sections = split_top_level(inner, ';');
      if (sections.size() != 2) throw InputError("attach expects attach(<G>;<H1>,...,<Hn>)");
      const Graph base = parse_construction(sections[0], ctx).graph;
      std::vector<Graph> hs;
      if (!sections[1].empty()) {
        for (auto item : split_top_level(sections[1], ',')) {
          hs.push_back(parse_construction(item, ctx).graph);
        }
      }
      c = attach_construction(base, std::move(hs));
    } else if (name == "cw") {
      const auto sections = split_top_level(inner, ';');
      if (sections.size() != 3) throw InputError("cw expects cw(<core>;leaves=<n>;triangles=<n>)");
      Graph core = parse_construction(sections[0], ctx).graph;
      const auto leaves = parse_keyed(sections[1], "leaves");
      const auto triangles = parse_keyed(sections[2], "triangles");
      if (!core.parts()) {
        auto coloring = two_coloring(core);
        if (!coloring) throw InputError("cw: core graph is not bipartite");
        core = core.with_parts(std::move(coloring));
      }
      const auto& parts = *core.parts();
      const std::vector<std::size_t> leaf_counts(parts.x.size(), leaves);
      const std::vector<std::size_t> triangle_counts(parts.y.size(), triangles);
      c.graph = cameron_walker(core, leaf_counts, triangle_counts);
      c.kind = Construction::Kind::cameron_walker;
      c.attached.resize(core.size());
      for (auto v : parts.x) c.attached[v] = standard_family(Family::edgeless, leaves);
      for (auto v : parts.y) {
        std::vector<Graph> copies(triangles, standard_family(Family::path, 2));
        c.attached[v] = disjoint_union(copies);
      }
      c.one_leaf_per_x = leaves == 1;
    } else if (name == "cmb") {
      c.graph = cm_bipartite_from_poset(parse_poset(inner, ctx));
    } else {
      throw InputError("unknown construction '" + std::string(name) + "'");
    }
  } else if (ends_with_json(text)) {
    c.graph = load_graph_file(resolve(text, ctx));
  } else if (text == "edge") {
    c.graph = standard_family(Family::path, 2);
  } else if (text == "vertex") {
    c.graph = standard_family(Family::path, 1);
  } else {
    const auto colon_at = text.find(':');
    if (colon_at == std::string_view::npos) {
      throw InputError("cannot parse graph expression '" + std::string(text) + "'");
    }
    c = parse_family(text.substr(0, colon_at), text.substr(colon_at + 1), ctx);
  }
  c.source = std::string(text);
  return c;
}

}  // namespace reescov
