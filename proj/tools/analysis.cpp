#include "analysis.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "reescov/errors.hpp"
#include "reescov/graphs.hpp"
#include "reescov/monomials.hpp"
#include "reescov/rees.hpp"

namespace reescov::cli {

using nlohmann::json;

namespace {

class StageTimer {
 public:
  explicit StageTimer(json& sink, std::string name)
      : sink_(sink), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    sink_[name_] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  StageTimer(const StageTimer&) = delete;
  StageTimer& operator=(const StageTimer&) = delete;

 private:
  json& sink_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

json format_all(const VariableUniverse& u, const std::vector<Monomial>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(u.format(m));
  return out;
}

json x_condition_json(const ReesPresentation& p, const XConditionReport& x) {
  const auto& u = *p.universe();
  return {{"x_condition", x.holds},
          {"quadratic", x.quadratic},
          {"offenders", format_all(u, x.offending_generators)},
          {"in_J_generators", format_all(u, p.initial().generators())},
          {"basis_size", p.basis().size()}};
}

struct PowerFacts {
  unsigned k = 0;
  std::size_t minimal_generators = 0;
  std::optional<std::size_t> standard_count;
  std::optional<bool> minimal_generation;
  std::optional<bool> linear_quotients;
  OrderSearchMethod method = OrderSearchMethod::none;
  std::vector<Monomial> quotient_order;
  std::optional<bool> equigenerated;
  std::optional<bool> linear_resolution;
  std::optional<ComponentwiseReport> componentwise;
  std::string resolution_certificate = "betti";
  std::string componentwise_certificate = "betti";
  std::vector<std::string> limits;
};

struct AttachedFacts {
  bool all_x_condition = true;
  bool all_quadratic = true;
  json entries = json::array();
  json notes = json::array();
};

std::optional<bool> fact_for(const PowerFacts& f, const std::string& property) {
  if (property == "minimal_generation") return f.minimal_generation;
  if (property == "linear_quotients") return f.linear_quotients;
  if (property == "linear_resolution") return f.linear_resolution;
  if (property == "componentwise_linear") {
    if (!f.componentwise) return std::nullopt;
    return f.componentwise->componentwise_linear;
  }
  return std::nullopt;
}

}  // namespace

json AnalysisReport::to_json() const {
  json out = body;
  out["timings_ms"] = timings;
  return out;
}

AnalysisReport analyze(const Construction& construction, const AnalyzeOptions& options) {
  if (options.max_power < 1) throw InputError("max power must be >= 1");
  AnalysisReport report;
  json& body = report.body;
  const Graph& g = construction.graph;

  body["source"] = construction.source;
  std::vector<VertexCover> covers;
  {
    StageTimer timer(report.timings, "covers");
    covers = minimal_vertex_covers(g);
  }
  body["graph"] = {{"vertices", g.labels()},
                   {"edge_count", g.edge_count()},
                   {"unmixed", is_unmixed(g)},
                   {"chordal", is_chordal(g)}};
  json cover_list = json::array();
  for (const auto& c : covers) {
    json members = json::array();
    for (auto v : c.ids()) members.push_back(g.vertex(v).label);
    cover_list.push_back(std::move(members));
  }
  body["covers"] = std::move(cover_list);
  body["q"] = covers.size();

  const MonomialIdeal ideal = cover_ideal(g);
  body["cover_ideal"] = format_all(*ideal.universe(), ideal.generators());
  body["degenerate"] = ideal.is_unit();

  // Hypotheses carried by attachment constructions G(H_1, ..., H_n).
  std::optional<AttachedFacts> attached;
  if (construction.kind != Construction::Kind::plain) {
    AttachedFacts facts;
    StageTimer timer(report.timings, "attached_presentations");
    for (std::size_t i = 0; i < construction.attached.size(); ++i) {
      const Graph& h = construction.attached[i];
      const auto p = rees_presentation(cover_ideal(h), options.gb);
      const auto x = x_condition(p);
      facts.all_x_condition = facts.all_x_condition && x.holds;
      facts.all_quadratic = facts.all_quadratic && x.quadratic;
      facts.entries.push_back({{"index", i + 1},
                               {"vertices", h.size()},
                               {"edges", h.edge_count()},
                               {"edgeless", h.edge_count() == 0},
                               {"x_condition", x.holds},
                               {"quadratic", x.quadratic}});
      if (h.edge_count() == 0) {
        facts.notes.push_back("H_" + std::to_string(i + 1) +
                              " is edgeless (unit cover ideal, J = 0); allowed by this tool");
      }
    }
    attached = std::move(facts);
    body["construction"] = {
        {"kind", construction.kind == Construction::Kind::attach ? "attach" : "cameron_walker"},
        {"attached", attached->entries},
        {"notes", attached->notes}};
    if (construction.kind == Construction::Kind::cameron_walker) {
      body["construction"]["one_leaf_per_x"] = construction.one_leaf_per_x;
    }
  }

  std::optional<ReesPresentation> presentation;
  std::optional<XConditionReport> xcond;
  try {
    StageTimer timer(report.timings, "rees");
    presentation = rees_presentation(ideal, options.gb);
    xcond = x_condition(*presentation);
    body["rees"] = x_condition_json(*presentation, *xcond);
    body["rees"]["degenerate"] = presentation->degenerate();
  } catch (const ResourceLimitError& e) {
    report.resource_limits.push_back(std::string("rees: ") + e.what());
    body["rees"] = nullptr;
  }

  std::vector<PowerFacts> powers;
  for (unsigned k = 1; k <= options.max_power; ++k) {
    PowerFacts f;
    f.k = k;
    StageTimer timer(report.timings, "k" + std::to_string(k));
    const MonomialIdeal pk = power(ideal, k);
    f.minimal_generators = pk.size();
    f.equigenerated = pk.is_equigenerated();

    std::vector<Monomial> heuristic;
    if (presentation && !presentation->degenerate()) {
      auto standard = standard_monomials(*presentation, k);
      f.standard_count = standard.members.size();
      auto mapped = standard.mapped_generators;
      sort_canonically(mapped);
      f.minimal_generation = mapped == pk.generators();
      if (*f.minimal_generation) heuristic = standard.mapped_generators;
    }
    try {
      auto found = find_linear_quotients_order(pk.generators(), options.order_search, heuristic);
      f.linear_quotients = found.certificate.has_value();
      f.method = found.method;
      if (found.certificate) f.quotient_order = found.certificate->ordering;
    } catch (const ResourceLimitError& e) {
      f.limits.push_back(std::string("linear quotients: ") + e.what());
    }
    if (options.betti) {
      std::string resolution_limit;
      std::string componentwise_limit;
      try {
        f.linear_resolution = has_linear_resolution(pk, options.betti_bounds);
      } catch (const ResourceLimitError& e) {
        resolution_limit = e.what();
      }
      try {
        f.componentwise = is_componentwise_linear(pk, options.betti_bounds);
      } catch (const ResourceLimitError& e) {
        componentwise_limit = e.what();
      }
      // Past the Betti bounds, a linear quotients certificate still decides both.
      const bool certified = f.linear_quotients.value_or(false);
      if (!f.linear_resolution && certified && f.equigenerated.value_or(false)) {
        f.linear_resolution = true;
        f.resolution_certificate = "linear_quotients";
      }
      if (!f.componentwise && certified) {
        ComponentwiseReport r;
        r.range_limited = false;
        f.componentwise = r;
        f.componentwise_certificate = "linear_quotients";
      }
      if (!f.linear_resolution) f.limits.push_back("linear resolution: " + resolution_limit);
      if (!f.componentwise) f.limits.push_back("componentwise linearity: " + componentwise_limit);
    }
    for (const auto& l : f.limits) report.resource_limits.push_back("k=" + std::to_string(k) + " " + l);
    powers.push_back(std::move(f));
  }

  // Predictions.
  auto& preds = report.predictions;
  auto predict = [&preds](std::string property, std::string reason, bool verified, unsigned k) {
    for (auto& p : preds) {
      if (p.property == property && p.k == k) {
        p.reason += "; " + reason;
        p.hypothesis_verified = p.hypothesis_verified || verified;
        return;
      }
    }
    preds.push_back({std::move(property), std::move(reason), verified, k});
  };
  const bool degenerate = ideal.is_unit();
  if (attached && attached->all_x_condition) {
    predict("x_condition", "every attached graph H_i satisfies the x-condition", true, 0);
  }
  for (const auto& f : powers) {
    if (!degenerate && xcond && xcond->quadratic) {
      const std::string why = "in(J) is generated by quadratic monomials";
      predict("minimal_generation", why, true, f.k);
      predict("linear_quotients", why, true, f.k);
      if (options.betti) predict("componentwise_linear", why, true, f.k);
    }
    if (attached && attached->all_quadratic && construction.graph.edge_count() > 0) {
      const std::string why = "every attached graph H_i has a quadratic Groebner basis";
      predict("linear_quotients", why, true, f.k);
      if (options.betti) predict("componentwise_linear", why, true, f.k);
    }
    if (options.betti && f.linear_quotients.value_or(false)) {
      predict("componentwise_linear", "linear quotients on the minimal generators", true, f.k);
      if (f.equigenerated.value_or(false)) {
        predict("linear_resolution", "equigenerated with linear quotients", true, f.k);
      }
    }
    if (construction.kind == Construction::Kind::cameron_walker && construction.one_leaf_per_x &&
        options.betti) {
      predict("linear_resolution",
              "Cohen-Macaulay Cameron-Walker graph (Cohen-Macaulayness assumed from the "
              "construction)",
              false, f.k);
    }
  }
  if (construction.kind == Construction::Kind::cameron_walker && construction.one_leaf_per_x) {
    predict("unmixed",
            "Cohen-Macaulay Cameron-Walker graph (Cohen-Macaulayness assumed from the "
            "construction)",
            false, 0);
  }

  for (auto& p : preds) {
    std::optional<bool> fact;
    if (p.property == "x_condition") {
      if (xcond) fact = xcond->holds;
    } else if (p.property == "unmixed") {
      fact = is_unmixed(g);
    } else {
      fact = fact_for(powers[p.k - 1], p.property);
    }
    if (!fact) {
      p.outcome = Prediction::Outcome::unchecked;
    } else {
      p.outcome = *fact ? Prediction::Outcome::verified : Prediction::Outcome::failed;
    }
  }

  json power_list = json::array();
  const auto& su = *ideal.universe();
  for (const auto& f : powers) {
    json entry;
    entry["k"] = f.k;
    entry["minimal_generators"] = f.minimal_generators;
    entry["standard_monomials"] = f.standard_count ? json(*f.standard_count) : json(nullptr);
    entry["minimal_generation"] = f.minimal_generation ? json(*f.minimal_generation) : json(nullptr);
    if (f.linear_quotients) {
      entry["linear_quotients"] = {{"found", *f.linear_quotients},
                                   {"method", to_string(f.method)},
                                   {"order", format_all(su, f.quotient_order)}};
    } else {
      entry["linear_quotients"] = nullptr;
    }
    entry["equigenerated"] = f.equigenerated ? json(*f.equigenerated) : json(nullptr);
    if (f.linear_resolution) {
      entry["linear_resolution"] = {{"verdict", *f.linear_resolution},
                                    {"certificate", f.resolution_certificate}};
    } else {
      entry["linear_resolution"] = nullptr;
    }
    if (f.componentwise) {
      json per = json::array();
      for (auto [j, ok] : f.componentwise->per_degree) per.push_back({{"degree", j}, {"linear", ok}});
      entry["componentwise_linear"] = {{"verdict", f.componentwise->componentwise_linear},
                                       {"range_limited", f.componentwise->range_limited},
                                       {"certificate", f.componentwise_certificate},
                                       {"per_degree", std::move(per)}};
    } else {
      entry["componentwise_linear"] = nullptr;
    }
    entry["resource_limits"] = f.limits;
    power_list.push_back(std::move(entry));
  }
  body["powers"] = std::move(power_list);

  json pred_list = json::array();
  bool any_failed = false;
  bool any_unchecked = false;
  for (const auto& p : preds) {
    const char* outcome = p.outcome == Prediction::Outcome::verified ? "verified"
                          : p.outcome == Prediction::Outcome::failed ? "failed"
                                                                      : "unchecked";
    any_failed |= p.outcome == Prediction::Outcome::failed;
    any_unchecked |= p.outcome == Prediction::Outcome::unchecked;
    json entry = {{"property", p.property},
                  {"reason", p.reason},
                  {"hypothesis_verified", p.hypothesis_verified},
                  {"outcome", outcome}};
    if (p.k != 0) entry["k"] = p.k;
    pred_list.push_back(std::move(entry));
  }
  body["predictions"] = std::move(pred_list);
  body["resource_limits"] = report.resource_limits;

  if (any_failed) {
    report.status = AnalysisStatus::prediction_failed;
  } else if (any_unchecked || !report.resource_limits.empty()) {
    report.status = AnalysisStatus::resource_limit;
  }
  body["status"] = report.status == AnalysisStatus::verified            ? "verified"
                   : report.status == AnalysisStatus::prediction_failed ? "prediction_failed"
                                                                        : "resource_limit";
  return report;
}

std::vector<std::string> failure_messages(const AnalysisReport& report) {
  std::vector<std::string> out;
  for (const auto& p : report.predictions) {
    if (p.outcome != Prediction::Outcome::failed) continue;
    std::string msg = "prediction failed: " + p.property;
    if (p.k != 0) msg += " at k=" + std::to_string(p.k);
    msg += " (expected because " + p.reason + "); ";
    msg += p.hypothesis_verified
               ? "the hypothesis was verified computationally, so this indicates a bug"
               : "the hypothesis was assumed, not verified, so this indicates a hypothesis violation";
    out.push_back(std::move(msg));
  }
  return out;
}

}  // namespace reescov::cli
