#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "dominium/graph6.hpp"
#include "harness.hpp"

namespace dominium::harness {

namespace {

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (!config.out) {
    out << text;
    return;
  }
  std::ofstream file(*config.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + *config.out + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<int> require_k(const RunConfig& config, int minimum, const char* why) {
  if (!config.k) throw UsageError(std::string("--k is required ") + why);
  if (config.k->first < minimum) {
    throw UsageError("k must be >= " + std::to_string(minimum) + " " + why);
  }
  return config.k->values();
}

Json graph_header(const NamedGraph& ng) {
  const Graph& g = ng.graph;
  return Json{{"graph_id", to_graph6(g)},
              {"source", ng.source},
              {"n", g.order()},
              {"m", g.size()},
              {"delta", g.min_degree()}};
}

VertexSet parse_set(const std::string& text, const Graph& g) {
  VertexSet s = g.empty_set();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      s.insert(v);
    } catch (const std::exception&) {
      throw UsageError("invalid vertex '" + item + "' in --set for a graph of order " +
                       std::to_string(g.order()));
    }
  }
  return s;
}

/// Bound reports for every (graph, k), graph-major. Graphs are spread over
/// `jobs` threads; the result order never depends on scheduling.
std::vector<BoundReport> evaluate_corpus(const std::vector<NamedGraph>& graphs,
                                         const std::vector<int>& ks, int jobs) {
  std::vector<std::vector<BoundReport>> slots(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        for (int k : ks) slots[i].push_back(verify_all(graphs[i].graph, k));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(
      std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size()))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<BoundReport> reports;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& r : slots[i]) reports.push_back(std::move(r));
  }
  return reports;
}

struct BoundTally {
  VerdictSummary counts;
  std::optional<Rational> gap_min;
  std::optional<Rational> gap_max;
  Rational gap_sum{0};
  int gap_count = 0;
  int tight_count = 0;
  std::vector<std::string> tight_ids;
};

std::string describe_source(const RunConfig& c) {
  if (c.family) return "family " + *c.family;
  if (c.input_path) return "input " + *c.input_path;
  if (c.exhaustive) return "exhaustive " + std::to_string(*c.exhaustive);
  const GnpSampling& g = *c.gnp;
  std::ostringstream s;
  s << "gnp " << g.min_order;
  if (g.max_order != g.min_order) s << ".." << g.max_order;
  s << "," << Json(g.probability).dump();
  return s.str();
}

}  // namespace

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(config, order_guard(kDefaultSolveOrder));
  std::vector<Parameter> params = config.params;
  if (params.empty()) params = {Parameter::gamma_k, Parameter::gamma_xk, Parameter::rho};

  bool needs_k = false;
  for (Parameter p : params) needs_k = needs_k || p != Parameter::rho;
  const std::vector<int> ks = needs_k ? require_k(config, 1, "for gamma-k and gamma-xk")
                                      : std::vector<int>{};

  int status = kExitOk;
  Json records = Json::array();
  std::ostringstream csv;
  csv << "graph_id,n,m,delta,parameter,k,value,witness,nodes_explored,method\n";

  for (const auto& ng : graphs) {
    const Graph& g = ng.graph;
    if (config.use_oracle && g.order() > kOracleMaxOrder) {
      throw UsageError(ng.source + ": oracle is limited to order " +
                       std::to_string(kOracleMaxOrder));
    }
    Json record = graph_header(ng);
    Json results = Json::array();
    const std::string id = to_graph6(g);

    for (Parameter p : params) {
      const std::vector<int> kvals = p == Parameter::rho ? std::vector<int>{0} : ks;
      for (int k : kvals) {
        try {
          const SolveResult r = config.use_oracle ? oracle_solve(g, p, k) : solve(g, p, k);
          results.push_back(solve_result_json(r));
          csv << id << ',' << g.order() << ',' << g.size() << ',' << g.min_degree() << ','
              << to_string(p) << ',' << (r.k ? std::to_string(*r.k) : "") << ',' << r.value
              << ',';
          const auto members = r.witness.members();
          for (std::size_t i = 0; i < members.size(); ++i) csv << (i ? " " : "") << members[i];
          csv << ',' << r.nodes_explored << ',' << to_string(r.method) << '\n';
        } catch (const ParameterUndefined& e) {
          err << ng.source << ": " << e.what() << '\n';
          results.push_back(Json{{"parameter", to_string(p)},
                                 {"k", k},
                                 {"error", "undefined"},
                                 {"message", e.what()}});
          csv << id << ',' << g.order() << ',' << g.size() << ',' << g.min_degree() << ','
              << to_string(p) << ',' << k << ",,,," << "undefined\n";
          status = kExitUndefined;
        }
      }
    }
    record["results"] = results;
    records.push_back(record);
  }

  if (config.format == Format::csv) {
    emit(config, out, csv.str());
  } else {
    emit(config, out,
         dump(Json{{"schema_version", kSchemaVersion}, {"command", "solve"}, {"graphs", records}}));
  }
  return status;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(config, order_guard(kDefaultSolveOrder));
  const auto ks = require_k(config, 2, "for bound verification");
  const auto reports = evaluate_corpus(graphs, ks, config.jobs);

  VerdictSummary total;
  Json items = Json::array();
  std::string csv = bound_csv_header();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const BoundReport& r = reports[i];
    Json j = bound_report_json(r);
    j["source"] = graphs[i / ks.size()].source;
    items.push_back(j);
    csv += bound_csv_rows(r);
    total.holds += r.summary.holds;
    total.tight += r.summary.tight;
    total.violated += r.summary.violated;
    total.not_applicable += r.summary.not_applicable;
    if (r.summary.violated > 0) {
      err << graphs[i / ks.size()].source << " k=" << r.k << ": bound violated\n";
    }
  }

  if (config.format == Format::csv) {
    emit(config, out, csv);
  } else {
    emit(config, out,
         dump(Json{{"schema_version", kSchemaVersion},
                   {"command", "verify"},
                   {"reports", items},
                   {"summary", Json{{"reports", reports.size()},
                                    {"holds", total.holds},
                                    {"tight", total.tight},
                                    {"violated", total.violated},
                                    {"not_applicable", total.not_applicable}}}}));
  }
  return total.violated > 0 ? kExitViolation : kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(config, order_guard(kDefaultSolveOrder));
  const auto ks = require_k(config, 2, "for bound sweeps");
  const auto reports = evaluate_corpus(graphs, ks, config.jobs);

  if (config.format == Format::csv) {
    std::string csv = bound_csv_header();
    int violations = 0;
    for (const auto& r : reports) {
      csv += bound_csv_rows(r);
      violations += r.summary.violated;
    }
    emit(config, out, csv);
    if (violations > 0) err << violations << " bound violations\n";
    return violations > 0 ? kExitViolation : kExitOk;
  }

  std::map<int, std::vector<BoundTally>> tallies;
  std::map<int, int> evaluated, undefined;
  for (int k : ks) tallies[k].resize(kAllBounds.size());
  int violations = 0;

  for (const auto& r : reports) {
    ++evaluated[r.k];
    if (!r.exact.gamma_xk) ++undefined[r.k];
    for (std::size_t b = 0; b < r.bounds.size(); ++b) {
      const BoundEntry& e = r.bounds[b];
      BoundTally& t = tallies[r.k][b];
      switch (e.verdict) {
        case Verdict::holds: ++t.counts.holds; break;
        case Verdict::tight: ++t.counts.tight; break;
        case Verdict::violated: ++t.counts.violated; ++violations; break;
        case Verdict::not_applicable: ++t.counts.not_applicable; break;
      }
      if (e.verdict == Verdict::not_applicable) continue;
      const Rational gap = *e.value - Rational(*r.exact.gamma_xk);
      if (!t.gap_min || gap < *t.gap_min) t.gap_min = gap;
      if (!t.gap_max || gap > *t.gap_max) t.gap_max = gap;
      t.gap_sum += gap;
      ++t.gap_count;
      if (e.verdict == Verdict::tight) {
        ++t.tight_count;
        if (static_cast<int>(t.tight_ids.size()) < config.list_limit) {
          t.tight_ids.push_back(r.graph_id);
        }
      }
    }
  }

  Json per_k = Json::array();
  for (int k : ks) {
    Json bounds = Json::array();
    for (std::size_t b = 0; b < kAllBounds.size(); ++b) {
      const BoundTally& t = tallies[k][b];
      Json gap = nullptr;
      if (t.gap_count > 0) {
        gap = Json{{"min", rational_json(*t.gap_min)},
                   {"max", rational_json(*t.gap_max)},
                   {"mean", rational_json(t.gap_sum / Rational(t.gap_count))}};
      }
      bounds.push_back(Json{{"name", to_string(kAllBounds[b])},
                            {"holds", t.counts.holds},
                            {"tight", t.counts.tight},
                            {"violated", t.counts.violated},
                            {"not_applicable", t.counts.not_applicable},
                            {"gap", gap},
                            {"tight_instances", Json{{"count", t.tight_count},
                                                     {"graph_ids", t.tight_ids}}}});
    }
    per_k.push_back(Json{{"k", k},
                         {"evaluated", evaluated[k]},
                         {"gamma_xk_undefined", undefined[k]},
                         {"bounds", bounds}});
  }

  Json cfg{{"source", describe_source(config)}, {"k", ks}};
  if (config.gnp) {
    cfg["samples"] = config.samples;
    cfg["seed"] = config.seed;
  }
  emit(config, out,
       dump(Json{{"schema_version", kSchemaVersion},
                 {"command", "sweep"},
                 {"config", cfg},
                 {"graphs", graphs.size()},
                 {"violations", violations},
                 {"gap_convention", "bound value minus exact gamma_xk"},
                 {"per_k", per_k}}));
  if (violations > 0) err << violations << " bound violations\n";
  return violations > 0 ? kExitViolation : kExitOk;
}

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto graphs = load_graphs(config, order_guard(kDefaultGenerateOrder));
  std::string text;
  for (const auto& ng : graphs) text += to_graph6(ng.graph) + "\n";
  emit(config, out, text);
  return kExitOk;
}

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.method != "thm22" && config.method != "thm23") {
    throw UsageError("--method must be thm22 or thm23");
  }
  const bool thm22 = config.method == "thm22";
  const auto graphs =
      load_graphs(config, order_guard(config.set ? kDefaultGenerateOrder : kDefaultSolveOrder));
  const auto ks = require_k(config, 2, "for constructions");

  int status = kExitOk;
  Json items = Json::array();
  for (const auto& ng : graphs) {
    const Graph& g = ng.graph;
    for (int k : ks) {
      Json item = graph_header(ng);
      item["k"] = k;
      item["method"] = config.method;
      try {
        if (thm22) {
          if (g.min_degree() < k - 1) {
            throw PreconditionError("min degree " + std::to_string(g.min_degree()) +
                                    " is below k-1 = " + std::to_string(k - 1));
          }
          const bool from_solver = !config.set;
          const VertexSet d = from_solver ? gamma_k(g, k).witness : parse_set(*config.set, g);
          item["input_set"] = from_solver ? "gamma_k witness" : "user";
          const AugmentationTrace t = augment_to_ktuple(g, d, k);
          const VertexSet trivial = kgamma_trivial_bound(g, d, k);
          const bool valid = is_ktuple_dominating(g, t.d_double_prime, k);
          const bool within = t.fallback || t.d_double_prime.size() <= t.size_bound;
          item["trace"] = trace_json(t);
          item["result"] = Json{{"size", t.d_double_prime.size()},
                                {"bound", t.size_bound},
                                {"within_bound", within},
                                {"is_ktuple_dominating", valid}};
          item["trivial"] = Json{{"set", trivial.members()},
                                 {"size", trivial.size()},
                                 {"bound", static_cast<long>(k) * d.size()}};
          if (!valid || !within) status = kExitViolation;
        } else {
          const bool from_solver = !config.set;
          if (from_solver && g.min_degree() < k) {
            throw PreconditionError("min degree " + std::to_string(g.min_degree()) +
                                    " is below k = " + std::to_string(k));
          }
          const VertexSet p = from_solver ? rho(g).witness : parse_set(*config.set, g);
          item["input_set"] = from_solver ? "rho witness" : "user";
          const VertexSet comp = packing_complement(g, p, k);
          const bool valid = is_ktuple_dominating(g, comp, k);
          item["packing"] = p.members();
          item["result"] = Json{{"set", comp.members()},
                                {"size", comp.size()},
                                {"bound", g.order() - p.size()},
                                {"is_ktuple_dominating", valid}};
          if (!valid) status = kExitViolation;
        }
      } catch (const PreconditionError& e) {
        err << ng.source << " k=" << k << ": precondition failed: " << e.what() << '\n';
        item["error"] = "precondition";
        item["message"] = e.what();
        if (status == kExitOk) status = kExitUndefined;
      }
      items.push_back(item);
    }
  }
  emit(config, out,
       dump(Json{{"schema_version", kSchemaVersion},
                 {"command", "construct"},
                 {"constructions", items}}));
  return status;
}

}  // namespace dominium::harness
