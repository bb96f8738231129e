#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "harness.hpp"

using namespace dominium;
using namespace dominium::harness;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("dominium_test_" + name);
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("solve gamma_xk on the H family instance") {
    const Outcome o = invoke({"solve", "--family", "h:4,2", "--param", "gamma-xk", "--k", "4"});
    REQUIRE(o.code == kExitOk);
    const Json j = o.json();
    CHECK(j["schema_version"] == 1);
    const Json& r = j["graphs"][0]["results"][0];
    CHECK(r["parameter"] == "gamma_xk");
    CHECK(r["value"] == 8);
    CHECK(r["witness"].size() == 8);
  }

  TEST_CASE("solve all parameters with the oracle") {
    const Outcome o =
        invoke({"solve", "--family", "cycle:6", "--param", "all", "--k", "2", "--oracle"});
    REQUIRE(o.code == kExitOk);
    const Json results = o.json()["graphs"][0]["results"];
    REQUIRE(results.size() == 3);
    CHECK(results[0]["value"] == 3);
    CHECK(results[0]["witness"] == Json({0, 2, 4}));
    CHECK(results[1]["value"] == 4);
    CHECK(results[2]["parameter"] == "rho");
    CHECK(results[2]["value"] == 2);
    CHECK(results[2]["method"] == "oracle");
  }

  TEST_CASE("solve csv output") {
    const Outcome o =
        invoke({"solve", "--family", "complete:4", "--param", "rho", "--format", "csv"});
    REQUIRE(o.code == kExitOk);
    CHECK(o.out.rfind("graph_id,n,m,delta,parameter,k,value,witness,nodes_explored,method\n", 0) ==
          0);
    CHECK(o.out.find("C~,4,6,3,rho,,1,0,") != std::string::npos);
  }

  TEST_CASE("undefined gamma_xk exits 3") {
    const Outcome o = invoke({"solve", "--family", "cycle:4", "--param", "gamma-xk", "--k", "4"});
    CHECK(o.code == kExitUndefined);
    CHECK(o.json()["graphs"][0]["results"][0]["error"] == "undefined");
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"solve", "--family", "star:5", "--param", "rho"}).code == kExitUsage);
    CHECK(invoke({"solve", "--param", "rho"}).code == kExitUsage);
    CHECK(invoke({"solve", "--family", "complete:3", "--input", "x.g6", "--param", "rho"}).code ==
          kExitUsage);
    CHECK(invoke({"solve", "--family", "complete:3", "--param", "gamma-k"}).code == kExitUsage);
    CHECK(invoke({"verify", "--family", "complete:3", "--k", "1"}).code == kExitUsage);
    CHECK(invoke({"verify", "--family", "complete:30", "--k", "2"}).code == kExitUsage);
    CHECK(invoke({"sweep", "--exhaustive", "7", "--k", "2"}).code == kExitUsage);
    CHECK(invoke({"solve", "--input", "/nonexistent/file.g6", "--param", "rho"}).code ==
          kExitUsage);
    CHECK(invoke({"construct", "--family", "complete:4", "--method", "thm99", "--k", "2"}).code ==
          kExitUsage);
  }

  TEST_CASE("order guard honours the environment") {
    ::setenv("DOMINIUM_MAX_ORDER", "5", 1);
    CHECK(order_guard(20) == 5);
    CHECK(invoke({"solve", "--family", "complete:6", "--param", "rho"}).code == kExitUsage);
    ::setenv("DOMINIUM_MAX_ORDER", "200", 1);
    CHECK(order_guard(20) == 64);
    ::unsetenv("DOMINIUM_MAX_ORDER");
    CHECK(order_guard(20) == 20);
    CHECK(order_guard(64) == 64);
  }

  TEST_CASE("verify reports tight bounds") {
    const Outcome o = invoke({"verify", "--family", "bipartite:3,5", "--k", "3"});
    REQUIRE(o.code == kExitOk);
    const Json j = o.json();
    CHECK(j["summary"]["violated"] == 0);
    const Json& report = j["reports"][0];
    CHECK(report["exact"]["gamma_xk"] == 5);
    bool found = false;
    for (const auto& b : report["bounds"]) {
      if (b["verdict"] == "tight") found = true;
    }
    CHECK(found);
  }

  TEST_CASE("verify on a graph with undefined gamma_xk is not a failure") {
    const Outcome o = invoke({"verify", "--family", "cycle:4", "--k", "4"});
    CHECK(o.code == kExitOk);
    CHECK(o.json()["summary"]["violated"] == 0);
  }

  TEST_CASE("verify csv rows") {
    const Outcome o = invoke({"verify", "--family", "h:4,2", "--k", "4", "--format", "csv"});
    REQUIRE(o.code == kExitOk);
    CHECK(o.out.rfind(bound_csv_header(), 0) == 0);
    std::istringstream lines(o.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 1 + static_cast<int>(kAllBounds.size()));
  }

  TEST_CASE("sweep over every graph of order 5") {
    const Outcome o = invoke({"sweep", "--exhaustive", "5", "--k", "2", "--jobs", "4"});
    REQUIRE(o.code == kExitOk);
    const Json j = o.json();
    CHECK(j["graphs"] == 1024);
    CHECK(j["violations"] == 0);
    CHECK(j["per_k"][0]["evaluated"] == 1024);
  }

  TEST_CASE("sweep output is independent of thread count") {
    const std::vector<std::string> base{"sweep", "--gnp", "8..10,0.5", "--samples", "30",
                                        "--seed", "9", "--k", "2..3"};
    auto one = base;
    one.insert(one.end(), {"--jobs", "1"});
    auto many = base;
    many.insert(many.end(), {"--jobs", "6"});
    const Outcome a = invoke(one);
    const Outcome b = invoke(many);
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
  }

  TEST_CASE("generate writes graph6 lines") {
    const Outcome o = invoke({"generate", "--family", "join:complete:3,cycle:3"});
    REQUIRE(o.code == kExitOk);
    CHECK(o.out == "E~~w\n");
    const Outcome e = invoke({"generate", "--exhaustive", "3"});
    CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 8);
    CHECK(e.out.rfind("B?\n", 0) == 0);
    const Outcome big = invoke({"generate", "--family", "h:3,16"});
    CHECK(big.code == kExitOk);
    CHECK(static_cast<unsigned char>(big.out[0]) == 126);
  }

  TEST_CASE("construct thm22 from the solver witness") {
    const Outcome o = invoke({"construct", "--family", "bipartite:2,3", "--method", "thm22",
                              "--k", "2"});
    REQUIRE(o.code == kExitOk);
    const Json c = o.json()["constructions"][0];
    CHECK(c["trace"]["d_double_prime"] == Json({0, 1, 2}));
    CHECK(c["result"]["is_ktuple_dominating"] == true);
    CHECK(c["result"]["within_bound"] == true);
  }

  TEST_CASE("construct thm23 on the H family instance") {
    const Outcome o = invoke({"construct", "--family", "h:4,2", "--method", "thm23", "--k", "4"});
    REQUIRE(o.code == kExitOk);
    const Json c = o.json()["constructions"][0];
    CHECK(c["result"]["size"] == 8);
    CHECK(c["packing"] == Json({8, 9}));
  }

  TEST_CASE("construct precondition failures exit 3") {
    CHECK(invoke({"construct", "--family", "path:5", "--method", "thm22", "--k", "3"}).code ==
          kExitUndefined);
    CHECK(invoke({"construct", "--family", "cycle:6", "--method", "thm22", "--k", "2", "--set",
                  "0,3"})
              .code == kExitUndefined);
    CHECK(invoke({"construct", "--family", "cycle:6", "--method", "thm23", "--k", "2", "--set",
                  "0,1"})
              .code == kExitUndefined);
  }

  TEST_CASE("input files skip comments and blank lines") {
    const auto path = scratch_file("input.g6", "# corpus\n\nD?{\n  A_  \n# end\n");
    const auto graphs = read_graph6_file(path.string());
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].graph.order() == 5);
    CHECK(graphs[1].graph.size() == 1);
    CHECK(graphs[0].source.find(":3") != std::string::npos);

    const Outcome o = invoke({"solve", "--input", path.string(), "--param", "rho"});
    CHECK(o.code == kExitOk);
    CHECK(o.json()["graphs"].size() == 2);

    const auto bad = scratch_file("bad.g6", "D?{\nD?\n");
    const Outcome e = invoke({"solve", "--input", bad.string(), "--param", "rho"});
    CHECK(e.code == kExitUsage);
    CHECK(e.err.find(":2") != std::string::npos);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
  }

  TEST_CASE("--out writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "dominium_test_out.json";
    const Outcome o =
        invoke({"solve", "--family", "complete:3", "--param", "rho", "--out", path.string()});
    CHECK(o.code == kExitOk);
    CHECK(o.out.empty());
    std::ifstream in(path);
    const Json j = Json::parse(in);
    CHECK(j["graphs"][0]["results"][0]["value"] == 1);
    std::filesystem::remove(path);
  }

  TEST_CASE("argument value parsers") {
    CHECK(KRange::parse("3").values() == std::vector<int>{3});
    CHECK(KRange::parse("2..4").values() == std::vector<int>{2, 3, 4});
    CHECK_THROWS_AS(KRange::parse("4..2"), UsageError);
    CHECK_THROWS_AS(KRange::parse("x"), UsageError);
    const GnpSampling s = GnpSampling::parse("7..14,0.25");
    CHECK(s.min_order == 7);
    CHECK(s.max_order == 14);
    CHECK(s.probability == 0.25);
    CHECK(GnpSampling::parse("10,0.5").min_order == 10);
    CHECK_THROWS_AS(GnpSampling::parse("10"), UsageError);
    CHECK_THROWS_AS(GnpSampling::parse("10,1.5"), UsageError);
  }

  TEST_CASE("rational rendering") {
    CHECK(decimal_string(Rational(3, 2)) == "1.5");
    CHECK(decimal_string(Rational(1, 3)) == "0.333333");
    CHECK(decimal_string(Rational(2, 3)) == "0.666667");
    CHECK(decimal_string(Rational(-7, 4)) == "-1.75");
    CHECK(decimal_string(Rational(5)) == "5");
    const Json j = rational_json(Rational(6, 4));
    CHECK(j["num"] == 3);
    CHECK(j["den"] == 2);
    CHECK(j["decimal"] == "1.5");
  }
}
