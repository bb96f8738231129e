#include "CLI11.hpp"

#include "dominium/graph6.hpp"
#include "harness.hpp"

namespace dominium::harness {

namespace {

struct RawOptions {
  std::string k;
  std::string gnp;
  std::vector<std::string> params;
  std::string format = "json";
};

void add_source_options(CLI::App* sub, RunConfig& c, RawOptions& raw, bool sampling) {
  sub->add_option("--input", c.input_path, "graph6 file, one graph per line");
  sub->add_option("--family", c.family, "family spec, e.g. h:4,2 or join:complete:3,cycle:3");
  if (sampling) {
    sub->add_option("--exhaustive", c.exhaustive, "every labeled graph of this order (<= 6)");
    sub->add_option("--gnp", raw.gnp, "random graphs: N,p or A..B,p");
    sub->add_option("--samples", c.samples, "number of gnp samples");
    sub->add_option("--seed", c.seed, "seed for gnp sampling");
    sub->add_flag("--force", c.force, "allow exhaustive order 7");
  }
}

void add_output_options(CLI::App* sub, RunConfig& c, RawOptions& raw, bool csv) {
  sub->add_option("--out", c.out, "write the report here instead of stdout");
  if (csv) {
    sub->add_option("--format", raw.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
  }
}

Parameter parse_param(const std::string& s) {
  if (s == "gamma-k") return Parameter::gamma_k;
  if (s == "gamma-xk") return Parameter::gamma_xk;
  return Parameter::rho;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  RawOptions raw;

  CLI::App app{"Exact k-domination, k-tuple domination and 2-packing toolkit", "dominium"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "compute gamma_k, gamma_xk and rho exactly");
  add_source_options(solve, config, raw, false);
  solve->add_option("--param", raw.params, "gamma-k, gamma-xk, rho or all (repeatable)")
      ->check(CLI::IsMember({"gamma-k", "gamma-xk", "rho", "all"}));
  solve->add_option("--k", raw.k, "k or a range a..b");
  solve->add_flag("--oracle", config.use_oracle, "use plain subset enumeration");
  add_output_options(solve, config, raw, true);

  auto* verify = app.add_subcommand("verify", "evaluate every bound against exact values");
  add_source_options(verify, config, raw, false);
  verify->add_option("--k", raw.k, "k or a range a..b")->required();
  verify->add_option("--jobs", config.jobs, "worker threads");
  add_output_options(verify, config, raw, true);

  auto* sweep = app.add_subcommand("sweep", "aggregate bound verdicts over a corpus");
  add_source_options(sweep, config, raw, true);
  sweep->add_option("--k", raw.k, "k or a range a..b")->required();
  sweep->add_option("--jobs", config.jobs, "worker threads");
  sweep->add_option("--list-limit", config.list_limit, "tight instances listed per bound");
  add_output_options(sweep, config, raw, true);

  auto* generate = app.add_subcommand("generate", "write graph6 lines for a family or corpus");
  add_source_options(generate, config, raw, true);
  add_output_options(generate, config, raw, false);

  auto* construct = app.add_subcommand("construct", "run a constructive proof procedure");
  add_source_options(construct, config, raw, false);
  construct->add_option("--method", config.method, "thm22 or thm23")->required();
  construct->add_option("--k", raw.k, "k or a range a..b")->required();
  construct->add_option("--set", config.set, "input D (thm22) or packing (thm23), e.g. 0,1");
  add_output_options(construct, config, raw, false);

  std::vector<const char*> argv{"dominium"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(solve)) config.command = Command::solve;
    else if (app.got_subcommand(verify)) config.command = Command::verify;
    else if (app.got_subcommand(sweep)) config.command = Command::sweep;
    else if (app.got_subcommand(generate)) config.command = Command::generate;
    else config.command = Command::construct;

    if (!raw.k.empty()) config.k = KRange::parse(raw.k);
    if (!raw.gnp.empty()) config.gnp = GnpSampling::parse(raw.gnp);
    config.format = raw.format == "csv" ? Format::csv : Format::json;
    for (const auto& p : raw.params) {
      if (p == "all") {
        config.params = {Parameter::gamma_k, Parameter::gamma_xk, Parameter::rho};
        break;
      }
      config.params.push_back(parse_param(p));
    }
    config.validate();

    switch (config.command) {
      case Command::solve: return cmd_solve(config, out, err);
      case Command::verify: return cmd_verify(config, out, err);
      case Command::sweep: return cmd_sweep(config, out, err);
      case Command::generate: return cmd_generate(config, out, err);
      case Command::construct: return cmd_construct(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterUndefined& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndefined;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndefined;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace dominium::harness
