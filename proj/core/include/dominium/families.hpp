#ifndef DOMINIUM_FAMILIES_HPP
#define DOMINIUM_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dominium/graph.hpp"

namespace dominium {

Graph complete(int n);
Graph empty(int n);
/// Requires n >= 3; vertex i is adjacent to i-1 and i+1 modulo n.
Graph cycle(int n);
Graph path(int n);
/// The a-side occupies indices 0..a-1, the b-side a..a+b-1.
Graph complete_bipartite(int a, int b);

/// Clique K_{kr} on indices 0..kr-1 plus r apex vertices on kr..kr+r-1.
/// Apex kr+i is adjacent exactly to clique vertices ki..ki+k-1.
Graph h_family(int k, int r);

/// SplitMix64 (Steele, Lea, Flood 2014). Its output sequence is fixed for a
/// given seed on every platform, which is what makes gnp reproducible.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) built from the top 53 bits.
  double next_unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi G(n, p). Pairs are visited in graph6 order (j ascending, then
/// i < j) and each consumes one SplitMix64 draw u; the edge is present iff
/// u < p.
Graph gnp(int n, double p, std::uint64_t seed);

/// Graph on n vertices whose upper-triangle bits, in graph6 order, are the
/// low bits of `mask`.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Every labeled graph on n vertices (1 <= n <= 7), in increasing mask order.
class LabeledGraphEnumerator {
 public:
  static constexpr int kMaxEnumerationOrder = 7;

  explicit LabeledGraphEnumerator(int n);

  /// Number of graphs the stream yields: 2^(n(n-1)/2).
  std::uint64_t count() const noexcept { return count_; }
  std::optional<Graph> next();

 private:
  int n_;
  std::uint64_t count_;
  std::uint64_t next_mask_ = 0;
};

enum class FamilyKind { complete, empty, cycle, path, complete_bipartite, h_family, join, gnp };

/// Parsed form of the textual family syntax used by the CLI, e.g.
/// `complete:6`, `bipartite:2,3`, `h:4,2`, `join:complete:3,cycle:3`,
/// `gnp:12,0.5,42`.
struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  std::vector<int> params;
  double probability = 0.0;
  std::uint64_t seed = 0;
  std::vector<FamilySpec> parts;  // the two operands of a join

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  Graph build() const;
  /// Order of the graph build() would return, without building it.
  int order() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

}  // namespace dominium

#endif  // DOMINIUM_FAMILIES_HPP
