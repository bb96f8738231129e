#ifndef DOMINIUM_HARNESS_HPP
#define DOMINIUM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dominium/bounds.hpp"
#include "dominium/constructions.hpp"
#include "dominium/graph.hpp"
#include "dominium/solvers.hpp"

namespace dominium::harness {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,       // parse or configuration error
  kExitUndefined = 3,   // parameter undefined or construction precondition failed
  kExitViolation = 4,   // a proven bound was violated: an implementation bug
};

/// Raised for bad flags, bad family specs, unreadable inputs and order-guard
/// violations; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { solve, verify, sweep, generate, construct };
enum class Format { json, csv };

struct KRange {
  int first = 0;
  int last = 0;
  /// Parses "3" or "2..4".
  static KRange parse(const std::string& text);
  std::vector<int> values() const;
};

struct GnpSampling {
  int min_order = 0;
  int max_order = 0;
  double probability = 0.0;
  /// Parses "N,p" or "A..B,p".
  static GnpSampling parse(const std::string& text);
};

struct RunConfig {
  Command command = Command::solve;

  // Graph source: exactly one of these.
  std::optional<std::string> input_path;
  std::optional<std::string> family;
  std::optional<int> exhaustive;
  std::optional<GnpSampling> gnp;

  std::optional<KRange> k;
  std::vector<Parameter> params;
  bool use_oracle = false;

  int samples = 1;
  std::uint64_t seed = 0;
  bool force = false;
  int jobs = 1;
  int list_limit = 100;

  std::string method;                  // construct: thm22 | thm23
  std::optional<std::string> set;      // construct: explicit D or packing, "0,1,2"

  std::optional<std::string> out;
  Format format = Format::json;

  /// Throws UsageError when the source or k-range invariants fail.
  void validate() const;
};

struct NamedGraph {
  std::string source;  // family spec, "file:line", or "mask:n,m"
  Graph graph;
};

/// Order guard: DOMINIUM_MAX_ORDER when set (capped at 64), else `fallback`.
int order_guard(int fallback);
inline constexpr int kDefaultSolveOrder = 20;
inline constexpr int kDefaultGenerateOrder = 64;

/// One graph6 string per line; `#` comments and blank lines are skipped.
std::vector<NamedGraph> read_graph6_file(const std::string& path);
/// Materializes the configured source, enforcing `max_order`.
std::vector<NamedGraph> load_graphs(const RunConfig& config, int max_order);

// Serialization.
Json rational_json(const Rational& r);
/// Fixed six-decimal rendering computed in integer arithmetic, trailing zeros
/// trimmed.
std::string decimal_string(const Rational& r);
Json solve_result_json(const SolveResult& r);
Json bound_report_json(const BoundReport& r);
Json trace_json(const AugmentationTrace& t);

/// graph_id,n,m,delta,k,gamma_k,gamma_xk,rho,bound_name,bound_num,bound_den,verdict
std::string bound_csv_header();
std::string bound_csv_rows(const BoundReport& r);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full CLI entry point: parses `args` (without the program name), runs the
/// subcommand and maps errors to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dominium::harness

#endif  // DOMINIUM_HARNESS_HPP
