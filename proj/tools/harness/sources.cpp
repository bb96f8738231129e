#include <cstdlib>
#include <fstream>
#include <string>

#include "dominium/families.hpp"
#include "dominium/graph6.hpp"
#include "harness.hpp"

namespace dominium::harness {

namespace {

int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
  if (used != text.size()) throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  return value;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void check_order(int n, int max_order, const std::string& source) {
  if (n > max_order) {
    throw UsageError(source + ": order " + std::to_string(n) + " exceeds the order guard " +
                     std::to_string(max_order) + " (override with DOMINIUM_MAX_ORDER)");
  }
}

}  // namespace

KRange KRange::parse(const std::string& text) {
  KRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.first = r.last = parse_int(text, "k");
  } else {
    r.first = parse_int(text.substr(0, dots), "k range start");
    r.last = parse_int(text.substr(dots + 2), "k range end");
  }
  if (r.first < 1 || r.last < r.first) throw UsageError("empty or invalid k range '" + text + "'");
  return r;
}

std::vector<int> KRange::values() const {
  std::vector<int> out;
  for (int k = first; k <= last; ++k) out.push_back(k);
  return out;
}

GnpSampling GnpSampling::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--gnp expects N,p or A..B,p");
  GnpSampling g;
  const std::string orders = text.substr(0, comma);
  const auto dots = orders.find("..");
  if (dots == std::string::npos) {
    g.min_order = g.max_order = parse_int(orders, "gnp order");
  } else {
    g.min_order = parse_int(orders.substr(0, dots), "gnp order");
    g.max_order = parse_int(orders.substr(dots + 2), "gnp order");
  }
  const std::string p = text.substr(comma + 1);
  try {
    std::size_t used = 0;
    g.probability = std::stod(p, &used);
    if (used != p.size()) throw UsageError("");
  } catch (const std::exception&) {
    throw UsageError("invalid gnp probability '" + p + "'");
  }
  if (g.min_order < 1 || g.max_order < g.min_order || g.max_order > kMaxOrder) {
    throw UsageError("gnp order range must lie within 1..64");
  }
  if (!(g.probability >= 0.0 && g.probability <= 1.0)) {
    throw UsageError("gnp probability must be in [0, 1]");
  }
  return g;
}

void RunConfig::validate() const {
  const int sources = int(input_path.has_value()) + int(family.has_value()) +
                      int(exhaustive.has_value()) + int(gnp.has_value());
  if (sources != 1) {
    throw UsageError("exactly one graph source is required (--input, --family" +
                     std::string(command == Command::sweep ? ", --exhaustive, --gnp" : "") + ")");
  }
  if (samples < 1) throw UsageError("--samples must be >= 1");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
}

int order_guard(int fallback) {
  const char* env = std::getenv("DOMINIUM_MAX_ORDER");
  if (env == nullptr || *env == '\0') return fallback;
  const int value = parse_int(env, "DOMINIUM_MAX_ORDER");
  if (value < 1) throw UsageError("DOMINIUM_MAX_ORDER must be >= 1");
  return std::min(value, kMaxOrder);
}

std::vector<NamedGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::vector<NamedGraph> graphs;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::string where = path + ":" + std::to_string(lineno);
    try {
      graphs.push_back({where, from_graph6(text)});
    } catch (const Graph6Error& e) {
      throw UsageError(where + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<NamedGraph> load_graphs(const RunConfig& config, int max_order) {
  std::vector<NamedGraph> graphs;
  if (config.family) {
    FamilySpec spec;
    try {
      spec = FamilySpec::parse(*config.family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    check_order(spec.order(), max_order, spec.to_string());
    graphs.push_back({spec.to_string(), spec.build()});
  } else if (config.input_path) {
    graphs = read_graph6_file(*config.input_path);
    for (const auto& g : graphs) check_order(g.graph.order(), max_order, g.source);
  } else if (config.exhaustive) {
    const int n = *config.exhaustive;
    const int limit = config.force ? LabeledGraphEnumerator::kMaxEnumerationOrder : 6;
    if (n < 1 || n > limit) {
      throw UsageError("--exhaustive order must be in 1.." + std::to_string(limit) +
                       (config.force ? "" : " (pass --force to allow 7)"));
    }
    check_order(n, max_order, "exhaustive");
    LabeledGraphEnumerator stream(n);
    std::uint64_t mask = 0;
    while (auto g = stream.next()) {
      graphs.push_back({"mask:" + std::to_string(n) + "," + std::to_string(mask++), *g});
    }
  } else if (config.gnp) {
    const GnpSampling& s = *config.gnp;
    check_order(s.max_order, max_order, "gnp");
    SplitMix64 master(config.seed);
    const auto span = static_cast<std::uint64_t>(s.max_order - s.min_order + 1);
    for (int i = 0; i < config.samples; ++i) {
      const int n = s.min_order + static_cast<int>(master() % span);
      const std::uint64_t seed = master();
      FamilySpec spec;
      spec.kind = FamilyKind::gnp;
      spec.params = {n};
      spec.probability = s.probability;
      spec.seed = seed;
      graphs.push_back({spec.to_string(), gnp(n, s.probability, seed)});
    }
  }
  return graphs;
}

}  // namespace dominium::harness
