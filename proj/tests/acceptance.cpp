// Acceptance suite. Prints one PASS/FAIL line per criterion; exits non-zero if
// any selected criterion fails. Usage: dominium_acceptance [criterion...]

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dominium/bounds.hpp"
#include "dominium/constructions.hpp"
#include "dominium/families.hpp"
#include "dominium/graph6.hpp"
#include "dominium/solvers.hpp"
#include "harness.hpp"

using namespace dominium;

namespace {

/// Counts checks and keeps the first few failure descriptions.
class Ledger {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what());
  }
  long checks() const { return checks_; }
  long failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> notes_;
};

std::string describe(const Graph& g) { return to_graph6(g); }

template <typename Fn>
void for_each_small_graph(int max_order, Fn&& fn) {
  for (int n = 1; n <= max_order; ++n) {
    LabeledGraphEnumerator stream(n);
    while (auto g = stream.next()) fn(*g);
  }
}

/// 500 graphs of order 7..14; densities cycle through 0.3..0.9 so that the
/// minimum-degree hypotheses are met often enough to matter.
const std::vector<Graph>& sampled_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::vector<Graph> out;
    SplitMix64 rng(20240601);
    const double densities[] = {0.3, 0.5, 0.7, 0.9};
    for (int i = 0; i < 500; ++i) {
      const int n = 7 + static_cast<int>(rng() % 8);
      out.push_back(gnp(n, densities[i % 4], rng()));
    }
    return out;
  }();
  return corpus;
}

template <typename Fn>
void for_each_corpus_graph(Fn&& fn) {
  for_each_small_graph(6, fn);
  for (const Graph& g : sampled_corpus()) fn(g);
}

// 1. Fast solvers agree with subset enumeration on every graph of order 6.
void criterion_oracle(Ledger& led) {
  LabeledGraphEnumerator stream(6);
  while (auto g = stream.next()) {
    const int delta = g->min_degree();
    for (int k = 1; k <= 4; ++k) {
      const SolveResult a = gamma_k(*g, k);
      const SolveResult b = oracle_solve(*g, Parameter::gamma_k, k);
      led.expect(a.value == b.value,
                 [&] { return "gamma_" + std::to_string(k) + " differs on " + describe(*g); });
      if (k <= delta + 1) {
        const SolveResult c = gamma_xk(*g, k);
        const SolveResult d = oracle_solve(*g, Parameter::gamma_xk, k);
        led.expect(c.value == d.value, [&] {
          return "gamma_x" + std::to_string(k) + " differs on " + describe(*g);
        });
      }
    }
    led.expect(rho(*g).value == oracle_solve(*g, Parameter::rho, 0).value,
               [&] { return "rho differs on " + describe(*g); });
  }
}

// 2. gamma_xk <= k gamma_k - (k-1)^2, tight on complete bipartite graphs.
void criterion_thm22(Ledger& led) {
  for_each_corpus_graph([&](const Graph& g) {
    for (int k = 2; k <= g.min_degree() + 1; ++k) {
      const int gk = gamma_k(g, k).value;
      const int gx = gamma_xk(g, k).value;
      led.expect(gx <= k * gk - (k - 1) * (k - 1), [&] {
        return "upper bound fails on " + describe(g) + " k=" + std::to_string(k);
      });
      const BoundReport r = verify_all(g, k);
      led.expect(r.entry(BoundName::thm22_upper).verdict != Verdict::violated,
                 [&] { return "verdict violated on " + describe(g); });
    }
  });
  for (int k = 2; k <= 6; ++k) {
    for (int kp = k; kp <= 8; ++kp) {
      const Graph g = complete_bipartite(k, kp);
      const int gk = gamma_k(g, k).value;
      const int gx = gamma_xk(g, k).value;
      const std::string tag = "K_{" + std::to_string(k) + "," + std::to_string(kp) + "}";
      led.expect(gk == k, [&] { return tag + " gamma_k=" + std::to_string(gk); });
      led.expect(gx == 2 * k - 1, [&] { return tag + " gamma_xk=" + std::to_string(gx); });
      led.expect(verify_all(g, k).entry(BoundName::thm22_upper).verdict == Verdict::tight,
                 [&] { return tag + " not tight"; });
    }
  }
}

// 3. k rho <= gamma_xk <= n - rho, doubly tight on the H family.
void criterion_thm23(Ledger& led) {
  for_each_corpus_graph([&](const Graph& g) {
    const int p = rho(g).value;
    for (int k = 2; k <= g.min_degree(); ++k) {
      const int gx = gamma_xk(g, k).value;
      led.expect(k * p <= gx && gx <= g.order() - p, [&] {
        return "packing bounds fail on " + describe(g) + " k=" + std::to_string(k);
      });
    }
  });
  for (int k = 2; k <= 6; ++k) {
    for (int r = 1; r <= 3 && r * (k + 1) <= 20; ++r) {
      const Graph h = h_family(k, r);
      const std::string tag = "H(" + std::to_string(k) + "," + std::to_string(r) + ")";
      const int gx = gamma_xk(h, k).value;
      const int p = rho(h).value;
      led.expect(gx == k * r, [&] { return tag + " gamma_xk=" + std::to_string(gx); });
      led.expect(p == r, [&] { return tag + " rho=" + std::to_string(p); });
      const BoundReport rep = verify_all(h, k);
      led.expect(rep.entry(BoundName::thm23_lower).verdict == Verdict::tight &&
                     rep.entry(BoundName::thm23_upper).verdict == Verdict::tight,
                 [&] { return tag + " not doubly tight"; });
    }
  }
  const Graph h = h_family(4, 2);
  led.expect(h.order() == 10 && gamma_xk(h, 4).value == 8 && rho(h).value == 2,
             [] { return std::string("H(4,2) values"); });
}

// 4. Minimum-degree lower bound, tight on K_k + C_k and on K_n.
void criterion_prop24(Ledger& led) {
  for_each_corpus_graph([&](const Graph& g) {
    const int delta = g.min_degree();
    for (int k = 2; k <= delta; ++k) {
      const Rational lb = *eval_prop24(g.order(), g.size(), delta, k);
      const int gx = gamma_xk(g, k).value;
      led.expect(lb <= Rational(gx), [&] {
        return "lower bound fails on " + describe(g) + " k=" + std::to_string(k);
      });
    }
  });
  for (int k = 3; k <= 5; ++k) {
    const Graph g = join(complete(k), cycle(k));
    const int gx = gamma_xk(g, k).value;
    const Rational lb = *eval_prop24(g.order(), g.size(), g.min_degree(), k);
    led.expect(gx == k && lb == Rational(k),
               [&] { return "join K_k + C_k not tight for k=" + std::to_string(k); });
  }
  for (int n = 3; n <= 12; ++n) {
    const Graph g = complete(n);
    for (int k = 2; k <= n - 1; ++k) {
      const int gx = gamma_xk(g, k).value;
      const Rational lb = *eval_prop24(n, g.size(), n - 1, k);
      led.expect(gx == k && lb == Rational(k), [&] {
        return "K_" + std::to_string(n) + " not tight for k=" + std::to_string(k);
      });
    }
  }
}

// 5. The minimum-degree bound dominates the edge-count bound, equal iff delta = k.
void criterion_refinement(Ledger& led) {
  for_each_corpus_graph([&](const Graph& g) {
    const int delta = g.min_degree();
    for (int k = 2; k <= delta; ++k) {
      const Rational a = *eval_prop24(g.order(), g.size(), delta, k);
      const Rational b = eval_harary_haynes(g.order(), g.size(), k);
      led.expect(a >= b && ((a == b) == (delta == k)), [&] {
        return "refinement fails on " + describe(g) + " k=" + std::to_string(k);
      });
    }
  });
}

// 6 and 7 share the augmentation runs.
void run_constructions(Ledger& led, bool counting_only) {
  auto one_graph = [&](const Graph& g) {
    const int delta = g.min_degree();
    for (int k = 2; k <= delta + 1; ++k) {
      const SolveResult w = gamma_k(g, k);
      const AugmentationTrace t = augment_to_ktuple(g, w.witness, k);
      const std::string tag = describe(g) + " k=" + std::to_string(k);
      if (counting_only) {
        if (!t.fallback) {
          long lhs = 0;
          for (Vertex v : t.d_zero.members()) lhs += g.degree_in(v, t.d_prime);
          lhs += static_cast<long>((t.d - t.d_zero).size()) * (k - 1);
          led.expect(lhs == t.counting_lhs && lhs >= static_cast<long>(k) * (k - 1),
                     [&] { return "counting inequality fails on " + tag; });
        }
        continue;
      }
      const bool ok = is_ktuple_dominating(g, t.d_double_prime, k);
      const bool sized = t.fallback ? t.d_double_prime == g.all_vertices()
                                    : t.d_double_prime.size() <=
                                          k * w.value - (k - 1) * (k - 1);
      led.expect(ok && sized, [&] { return "augmentation fails on " + tag; });
    }
    if (counting_only) return;
    const int n = g.order();
    for (int k = 2; k <= delta; ++k) {
      led.expect(is_ktuple_dominating(g, packing_complement(g, rho(g).witness, k), k),
                 [&] { return "packing complement fails on " + describe(g); });
      if (n > 6) continue;
      for (Mask m = 0; m <= low_bits(n); ++m) {
        const VertexSet p(n, m);
        if (!is_2_packing(g, p)) continue;
        led.expect(is_ktuple_dominating(g, packing_complement(g, p, k), k),
                   [&] { return "packing complement fails on " + describe(g); });
      }
    }
  };
  for_each_corpus_graph(one_graph);
}

void criterion_constructions(Ledger& led) { run_constructions(led, false); }
void criterion_counting(Ledger& led) { run_constructions(led, true); }

// 8. graph6 round trips.
void criterion_codec(Ledger& led) {
  auto round_trip = [&](const Graph& g) {
    const std::string text = to_graph6(g);
    led.expect(from_graph6(text) == g, [&] { return "round trip fails on " + text; });
  };
  for_each_small_graph(6, round_trip);
  for (int n = 1; n <= kMaxOrder; ++n) {
    round_trip(complete(n));
    round_trip(empty(n));
    round_trip(path(n));
    if (n >= 3) round_trip(cycle(n));
    for (std::uint64_t seed = 0; seed < 4; ++seed) round_trip(gnp(n, 0.5, seed));
  }
  for (int a = 1; a < kMaxOrder; ++a)
    for (int b = 1; a + b <= kMaxOrder; ++b) round_trip(complete_bipartite(a, b));
  for (int k = 2; k + 1 <= kMaxOrder; ++k)
    for (int r = 1; r * (k + 1) <= kMaxOrder; ++r) round_trip(h_family(k, r));
  for (int a = 1; a <= 32; ++a) round_trip(join(complete(a), cycle(std::max(3, kMaxOrder - 32))));
}

// 9. Sweep reports are byte-identical across runs.
void criterion_determinism(Ledger& led) {
  const std::vector<std::string> args{"sweep", "--gnp",  "10,0.5", "--samples", "100",
                                      "--seed", "1",     "--k",    "2..3"};
  std::ostringstream a, b, ea, eb;
  const int ca = harness::run(args, a, ea);
  const int cb = harness::run(args, b, eb);
  led.expect(ca == harness::kExitOk && cb == harness::kExitOk,
             [&] { return "sweep exited " + std::to_string(ca) + "/" + std::to_string(cb); });
  led.expect(!a.str().empty() && a.str() == b.str(),
             [] { return std::string("sweep reports differ"); });
}

struct Criterion {
  int id;
  const char* title;
  void (*body)(Ledger&);
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence on all graphs of order 6", criterion_oracle},
    {2, "k-domination upper bound and bipartite tightness", criterion_thm22},
    {3, "2-packing bounds and H family tightness", criterion_thm23},
    {4, "minimum-degree lower bound and its tight families", criterion_prop24},
    {5, "minimum-degree bound refines the edge-count bound", criterion_refinement},
    {6, "construction validity", criterion_constructions},
    {7, "counting inequality in every augmentation", criterion_counting},
    {8, "graph6 round trip", criterion_codec},
    {9, "sweep determinism", criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    Ledger led;
    std::string error;
    try {
      c.body(led);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool pass = error.empty() && led.failures() == 0 && led.checks() > 0;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
              << led.checks() << " checks, " << led.failures() << " failures)\n";
    for (const auto& note : led.notes()) std::cout << "  " << note << '\n';
    if (!error.empty()) std::cout << "  exception: " << error << '\n';
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
