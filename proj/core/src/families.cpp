#include "dominium/families.hpp"

#include <stdexcept>
#include <string>

namespace dominium {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) b.add_edge(i, j);
  return b.build();
}

Graph empty(int n) {
  require(n >= 1, "empty: n must be >= 1");
  return GraphBuilder(n).build();
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite: both sides must be >= 1");
  require(a + b <= kMaxOrder, "complete_bipartite: order exceeds supported maximum");
  GraphBuilder g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g.build();
}

Graph h_family(int k, int r) {
  require(k >= 2, "h_family: k must be >= 2");
  require(r >= 1, "h_family: r must be >= 1");
  require(r * (k + 1) <= kMaxOrder, "h_family: order r(k+1) exceeds supported maximum");
  const int clique = k * r;
  GraphBuilder b(clique + r);
  for (int j = 1; j < clique; ++j)
    for (int i = 0; i < j; ++i) b.add_edge(i, j);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) b.add_edge(clique + i, k * i + t);
  return b.build();
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1 && n <= kMaxOrder, "gnp: n must be in 1..64");
  require(p >= 0.0 && p <= 1.0, "gnp: p must be in [0, 1]");
  SplitMix64 rng(seed);
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng.next_unit() < p) b.add_edge(i, j);
  return b.build();
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  require(n >= 1 && n <= 11, "graph_from_mask: n must be in 1..11");
  GraphBuilder b(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1) b.add_edge(i, j);
  return b.build();
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n) : n_(n) {
  require(n >= 1 && n <= kMaxEnumerationOrder, "enumerate_all: n must be in 1..7");
  count_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> LabeledGraphEnumerator::next() {
  if (next_mask_ >= count_) return std::nullopt;
  return graph_from_mask(n_, next_mask_++);
}

}  // namespace dominium
