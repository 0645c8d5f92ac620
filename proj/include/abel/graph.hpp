#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace abel {

/// Hard caps: bitmask subsets need at most 64 vertices; exhaustive subset
/// enumeration and matrix input are limited further.
inline constexpr int kMaxGraphVertices = 64;
inline constexpr int kMaxEnumerationVertices = 24;

/// A set of vertices as a bitmask, bit i = vertex i (0-based).
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
  static VertexSet full(int p) {
    return {p >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1};
  }
  /// From 1-based vertex labels; throws BadIndex when a label is outside 1..p.
  static VertexSet from_labels(std::span<const int> labels, int p);

  bool contains(int v) const { return (bits >> v) & 1U; }
  bool empty() const { return bits == 0; }
  int size() const { return std::popcount(bits); }
  VertexSet complement(int p) const { return {full(p).bits & ~bits}; }
  VertexSet with(int v) const { return {bits | (std::uint64_t{1} << v)}; }

  /// 1-based labels in increasing order.
  std::vector<int> labels() const;
  /// "{1,4}"
  std::string to_string() const;

  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits <=> b.bits; }
};

/// Unordered edge, stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  int other(int end) const { return end == a ? b : a; }
  bool has_end(int v) const { return v == a || v == b; }
  /// Number of ends inside `set` (0, 1 or 2).
  int ends_in(VertexSet set) const { return int(set.contains(a)) + int(set.contains(b)); }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Connected loopless multigraph. Edge ids are positions in the canonical
/// sorted edge list, so parallel edges are distinct elements with
/// consecutive ids.
class DualGraph {
 public:
  /// Builds from an intersection matrix: off-diagonal entries are edge
  /// multiplicities, the diagonal must equal minus the row sum of the others.
  static DualGraph from_intersection_matrix(const std::vector<std::vector<std::int64_t>>& matrix);

  /// Builds from an edge list. Ends may be given in either order.
  static DualGraph from_edges(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  int multiplicity(int a, int b) const { return adjacency_[index(a, b)]; }
  int degree(int v) const;
  VertexSet neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }

  std::vector<std::vector<std::int64_t>> intersection_matrix() const;

  /// Number of edges with exactly one end in `subset`. Throws
  /// EmptyOrFullSubset unless the subset is proper and nonempty.
  int boundary_count(VertexSet subset) const;

  /// Same count without the proper-subset check (0 for empty or full).
  int cut_size(VertexSet subset) const;

  /// The function c_v: multiplicity to each other vertex, minus the degree at v.
  std::vector<std::int64_t> vertex_flow(int v) const;

  bool induces_connected(VertexSet subset) const;

  /// "1-2", or "2-3#1", "2-3#2" for parallel edges (1-based).
  std::string edge_label(int id) const;

  void check_vertex(int v) const;

 private:
  DualGraph() = default;
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(vertex_count_) + static_cast<std::size_t>(b);
  }

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adjacency_;
  std::vector<VertexSet> neighbors_;
};

/// One exceptional vertex of a subdivided graph.
struct ChainVertex {
  int edge = 0;         ///< base edge id
  int position = 0;     ///< 0 is adjacent to edge.a, depth-1 to edge.b
  int nearer_end = 0;   ///< base vertex closest along the chain (ties go to edge.a)
  int farther_end = 0;
};

/// The base graph with every edge replaced by a path through `depth`
/// exceptional vertices. Originals keep ids 0..p-1; the chain of edge t
/// occupies ids p + t*depth ... p + t*depth + depth - 1, ordered from edge.a.
class SubdividedGraph {
 public:
  SubdividedGraph(const DualGraph& base, int depth);

  const DualGraph& base() const { return base_; }
  int depth() const { return depth_; }
  int vertex_count() const { return base_.vertex_count() + depth_ * base_.edge_count(); }
  int exceptional_count() const { return depth_ * base_.edge_count(); }
  bool is_exceptional(int w) const { return w >= base_.vertex_count(); }

  int chain_vertex_id(int edge, int position) const {
    return base_.vertex_count() + edge * depth_ + position;
  }
  ChainVertex chain_index(int w) const;

  /// The subdivided graph as an ordinary multigraph (needs <= 64 vertices).
  DualGraph as_graph() const;

 private:
  DualGraph base_;
  int depth_;
};

SubdividedGraph subdivide(const DualGraph& g, int depth);

/// Connected proper nonempty vertex subsets, sorted by bitmask.
std::vector<VertexSet> connected_subsets(const DualGraph& g);

/// A connected proper subset with its boundary count.
struct Cut {
  VertexSet set;
  int boundary = 0;
};

/// connected_subsets paired with boundary counts.
std::vector<Cut> connected_cuts(const DualGraph& g);

}  // namespace abel
