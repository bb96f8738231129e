#ifndef DOMINIUM_GRAPH_HPP
#define DOMINIUM_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dominium {

using Vertex = int;
using Mask = std::uint64_t;

/// Largest supported order; one adjacency row fits one machine word.
inline constexpr int kMaxOrder = 64;

/// Mask with the low `n` bits set.
constexpr Mask low_bits(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

/// A subset of the vertices of a graph of order `width()`.
///
/// Membership queries outside 0..width-1 throw std::out_of_range; set
/// algebra between sets of different widths throws std::invalid_argument.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int width);
  VertexSet(int width, Mask bits);
  VertexSet(int width, std::initializer_list<Vertex> members);

  static VertexSet full(int width) { return {width, low_bits(width)}; }

  int width() const noexcept { return width_; }
  Mask bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const { return {width_, ~bits_ & low_bits(width_)}; }
  bool is_subset_of(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  /// Set difference.
  VertexSet operator-(const VertexSet& o) const;

  /// Members in ascending order.
  std::vector<Vertex> members() const;
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_vertex(Vertex v) const;
  void check_width(const VertexSet& o) const;

  int width_ = 0;
  Mask bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construct through GraphBuilder; once built the adjacency never changes,
/// so a Graph may be shared freely between threads.
class Graph {
 public:
  int order() const noexcept { return static_cast<int>(rows_.size()); }
  /// Number of edges.
  int size() const noexcept { return edges_; }

  Mask row(Vertex v) const;
  Mask closed_row(Vertex v) const { return row(v) | bit(v); }
  Mask vertex_mask() const noexcept { return low_bits(order()); }

  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return std::popcount(row(v)); }

  VertexSet neighborhood(Vertex v) const { return {order(), row(v)}; }
  /// N[v] = N(v) with v itself.
  VertexSet closed_neighborhood(Vertex v) const { return {order(), closed_row(v)}; }
  /// |N(v) & s|; membership of v in s is never counted.
  int degree_in(Vertex v, const VertexSet& s) const;

  int min_degree() const noexcept { return min_degree_; }
  int max_degree() const noexcept { return max_degree_; }

  VertexSet all_vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;
  explicit Graph(std::vector<Mask> rows);

  std::vector<Mask> rows_;
  int edges_ = 0;
  int min_degree_ = 0;
  int max_degree_ = 0;
};

/// Mutable edge accumulator producing immutable Graph values.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const noexcept { return static_cast<int>(rows_.size()); }

  /// Adds the edge uv; repeated edges are ignored, loops are rejected.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  Graph build() const { return Graph(rows_); }

 private:
  std::vector<Mask> rows_;
};

/// Disjoint union of g and h (h relabeled to n_g..n_g+n_h-1) plus every edge
/// between the two parts.
Graph join(const Graph& g, const Graph& h);

}  // namespace dominium

#endif  // DOMINIUM_GRAPH_HPP
