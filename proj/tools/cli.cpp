#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "analysis.hpp"
#include "reescov/errors.hpp"
#include "reescov/graph_io.hpp"
#include "reescov/graphs.hpp"
#include "reescov/monomials.hpp"
#include "reescov/rees.hpp"
#include "reescov/resolutions.hpp"

namespace reescov::cli {

using nlohmann::json;

namespace {

struct GlobalFlags {
  std::string json_path;
  std::size_t max_gens = 0;  // 0 keeps the per-module defaults
  std::uint64_t gb_degree_cap = GbOptions{}.degree_cap;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit_json(const GlobalFlags& flags, const json& doc, std::ostream& out) {
  if (flags.json_path.empty()) return;
  const std::string text = doc.dump(2) + "\n";
  if (flags.json_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(flags.json_path, std::ios::binary);
  if (!file) throw InputError("cannot write " + flags.json_path);
  file << text;
}

GbOptions gb_options(const GlobalFlags& flags) {
  GbOptions o;
  o.degree_cap = flags.gb_degree_cap;
  return o;
}

BettiOptions betti_options(const GlobalFlags& flags) {
  BettiOptions o;
  if (flags.max_gens != 0) o.max_generators = flags.max_gens;
  return o;
}

Construction load(const std::string& source, const GlobalFlags& flags) {
  DslContext ctx;
  ctx.seed = flags.seed;
  return parse_construction(source, ctx);
}

std::string format_cover(const Graph& g, const VertexCover& c) {
  std::string s = "{";
  bool first = true;
  for (auto v : c.ids()) {
    if (!first) s += ",";
    s += g.vertex(v).label;
    first = false;
  }
  return s + "}";
}

int cmd_covers(const std::string& source, const GlobalFlags& flags, std::ostream& out) {
  const auto c = load(source, flags);
  const auto covers = minimal_vertex_covers(c.graph);
  json list = json::array();
  const bool text = flags.json_path != "-";
  for (const auto& cover : covers) {
    if (text) out << format_cover(c.graph, cover) << "\n";
    json members = json::array();
    for (auto v : cover.ids()) members.push_back(c.graph.vertex(v).label);
    list.push_back(std::move(members));
  }
  emit_json(flags, {{"source", c.source}, {"covers", list}, {"q", covers.size()}}, out);
  return kOk;
}

int cmd_rees(const std::string& source, bool dump_basis, const GlobalFlags& flags,
             std::ostream& out) {
  const auto c = load(source, flags);
  const auto p = rees_presentation(cover_ideal(c.graph), gb_options(flags));
  const auto x = x_condition(p);
  const auto& u = *p.universe();
  json basis = json::array();
  for (const auto& b : p.basis().elements()) basis.push_back(u.format(b.lead) + " - " + u.format(b.trail));
  json offenders = json::array();
  for (const auto& m : x.offending_generators) offenders.push_back(u.format(m));
  json gens = json::array();
  for (const auto& m : p.generators()) gens.push_back(p.base().universe()->format(m));

  if (flags.json_path != "-") {
    for (std::size_t j = 0; j < p.q(); ++j) {
      out << "y" << j + 1 << " -> " << gens[j].get<std::string>() << "*t\n";
    }
    if (dump_basis) out << format_basis(p.basis());
    out << "basis size: " << p.basis().size() << "\n";
    out << "x-condition: " << (x.holds ? "true" : "false") << "\n";
    out << "quadratic: " << (x.quadratic ? "true" : "false") << "\n";
    for (const auto& o : offenders) out << "offender: " << o.get<std::string>() << "\n";
    if (p.degenerate()) out << "note: cover ideal is the unit ideal, J = 0\n";
  }
  emit_json(flags,
            {{"source", c.source},
             {"generators", gens},
             {"basis", basis},
             {"x_condition", x.holds},
             {"quadratic", x.quadratic},
             {"offenders", offenders},
             {"degenerate", p.degenerate()}},
            out);
  return kOk;
}

int cmd_construct(const std::string& source, const std::string& out_path,
                  const GlobalFlags& flags, std::ostream& out) {
  const auto c = load(source, flags);
  const std::string text = graph_to_json(c.graph);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + out_path);
    file << text;
  }
  if (!flags.json_path.empty() && flags.json_path != "-") {
    std::ofstream file(flags.json_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + flags.json_path);
    file << text;
  }
  return kOk;
}

int cmd_betti(const std::optional<std::string>& source, const std::string& ideal_path,
              unsigned power_k, const GlobalFlags& flags, std::ostream& out) {
  if (power_k < 1) throw InputError("--power must be >= 1");
  std::optional<MonomialIdeal> base;
  std::string origin;
  if (!ideal_path.empty()) {
    if (source) throw InputError("give either a graph source or --ideal, not both");
    base = ideal_from_json(read_file(ideal_path));
    origin = ideal_path;
  } else if (source) {
    auto c = load(*source, flags);
    base = cover_ideal(c.graph);
    origin = c.source;
  } else {
    throw InputError("betti needs a graph source or --ideal");
  }
  const MonomialIdeal ideal = power(*base, power_k);
  const auto table = betti_table(ideal, betti_options(flags));
  const bool linear = has_linear_resolution(ideal, table);
  const auto& u = *ideal.universe();

  if (flags.json_path != "-") {
    out << format_betti_table(table);
    out << "linear resolution: " << (linear ? "true" : "false") << "\n";
  }
  json totals = json::array();
  for (const auto& [key, rank] : table.totals()) {
    totals.push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
  }
  json multi = json::array();
  for (const auto& m : table.multigraded()) {
    multi.push_back({{"i", m.homological}, {"multidegree", u.format(m.multidegree)}, {"rank", m.rank}});
  }
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(u.format(g));
  emit_json(flags,
            {{"source", origin},
             {"power", power_k},
             {"generators", gens},
             {"betti", totals},
             {"multigraded", multi},
             {"linear_resolution", linear}},
            out);
  return kOk;
}

void print_analysis(const AnalysisReport& report, std::ostream& out) {
  const json& b = report.body;
  out << "source: " << b["source"].get<std::string>() << "\n";
  out << "vertices: " << b["graph"]["vertices"].size() << ", edges: "
      << b["graph"]["edge_count"].get<std::size_t>() << ", covers: " << b["q"].get<std::size_t>()
      << "\n";
  out << "unmixed: " << b["graph"]["unmixed"].dump() << ", chordal: " << b["graph"]["chordal"].dump()
      << "\n";
  if (b["rees"].is_null()) {
    out << "rees: not computed\n";
  } else {
    out << "x-condition: " << b["rees"]["x_condition"].dump() << ", quadratic: "
        << b["rees"]["quadratic"].dump() << ", basis size: " << b["rees"]["basis_size"].dump() << "\n";
  }
  for (const auto& p : b["powers"]) {
    out << "k=" << p["k"].dump() << ": generators " << p["minimal_generators"].dump()
        << ", standard " << p["standard_monomials"].dump() << ", minimal generation "
        << p["minimal_generation"].dump() << ", linear quotients ";
    if (p["linear_quotients"].is_null()) {
      out << "null";
    } else {
      out << p["linear_quotients"]["found"].dump() << " ("
          << p["linear_quotients"]["method"].get<std::string>() << ")";
    }
    if (!p["linear_resolution"].is_null()) {
      out << ", linear resolution " << p["linear_resolution"]["verdict"].dump();
    }
    if (!p["componentwise_linear"].is_null()) {
      out << ", componentwise linear " << p["componentwise_linear"]["verdict"].dump()
          << (p["componentwise_linear"]["range_limited"].get<bool>() ? " (range-limited)" : "");
    }
    out << "\n";
  }
  for (const auto& p : b["predictions"]) {
    out << "prediction " << p["property"].get<std::string>();
    if (p.contains("k")) out << " k=" << p["k"].dump();
    out << ": " << p["outcome"].get<std::string>() << "\n";
  }
  for (const auto& l : report.resource_limits) out << "resource limit: " << l << "\n";
  out << "status: " << b["status"].get<std::string>() << "\n";
}

int cmd_analyze(const std::string& source, unsigned max_power, bool betti,
                const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  AnalyzeOptions options;
  options.max_power = max_power;
  options.betti = betti;
  options.gb = gb_options(flags);
  options.betti_bounds = betti_options(flags);
  if (flags.max_gens != 0) options.order_search.max_generators = flags.max_gens;

  const auto report = analyze(load(source, flags), options);
  if (flags.json_path != "-") print_analysis(report, out);
  emit_json(flags, report.to_json(), out);
  for (const auto& msg : failure_messages(report)) err << msg << "\n";
  switch (report.status) {
    case AnalysisStatus::verified:
      return kOk;
    case AnalysisStatus::prediction_failed:
      return kPredictionFailed;
    case AnalysisStatus::resource_limit:
      return kResourceLimit;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cover ideals, Rees algebras and their powers"};
  app.name(args.empty() ? "reescov" : args.front());
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--json", flags.json_path, "Write a JSON report to this path (- for stdout)");
  app.add_option("--max-gens", flags.max_gens,
                 "Generator bound for order search and Betti computations");
  app.add_option("--gb-degree-cap", flags.gb_degree_cap, "Abort Buchberger beyond this degree");
  app.add_option("--seed", flags.seed, "Seed for random:n:p graphs");

  std::string source;
  auto* covers = app.add_subcommand("covers", "List minimal vertex covers");
  covers->add_option("graph", source, "Graph JSON file or construction expression")->required();

  bool dump_basis = false;
  auto* rees = app.add_subcommand("rees", "Rees presentation and x-condition");
  rees->add_option("graph", source, "Graph JSON file or construction expression")->required();
  rees->add_flag("--dump-basis", dump_basis, "Print the reduced Groebner basis");

  unsigned max_power = 3;
  bool betti = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline and check predictions");
  analyze_cmd->add_option("graph", source, "Graph JSON file or construction expression")->required();
  analyze_cmd->add_option("--max-power,-K", max_power, "Largest power k analysed");
  analyze_cmd->add_flag("--betti", betti, "Compute linear resolution and componentwise verdicts");

  std::string out_path;
  auto* construct = app.add_subcommand("construct", "Build a graph and emit it as JSON");
  construct->add_option("expression", source, "Construction expression")->required();
  construct->add_option("--out", out_path, "Output file (default stdout)");

  std::optional<std::string> betti_source;
  std::string ideal_path;
  unsigned power_k = 1;
  auto* betti_cmd = app.add_subcommand("betti", "Graded Betti table of a power of an ideal");
  betti_cmd->add_option("graph", betti_source, "Graph JSON file or construction expression");
  betti_cmd->add_option("--power", power_k, "Power k of the ideal");
  betti_cmd->add_option("--ideal", ideal_path, "JSON array of monomials instead of a graph");

  for (auto* sub : {covers, rees, analyze_cmd, construct, betti_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (covers->parsed()) return cmd_covers(source, flags, out);
    if (rees->parsed()) return cmd_rees(source, dump_basis, flags, out);
    if (analyze_cmd->parsed()) return cmd_analyze(source, max_power, betti, flags, out, err);
    if (construct->parsed()) return cmd_construct(source, out_path, flags, out);
    if (betti_cmd->parsed()) return cmd_betti(betti_source, ideal_path, power_k, flags, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::overflow_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace reescov::cli
