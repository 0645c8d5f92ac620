#include "abel/graph.hpp"

#include <algorithm>
#include <functional>

#include "abel/errors.hpp"

namespace abel {

VertexSet VertexSet::from_labels(std::span<const int> labels, int p) {
  VertexSet out;
  for (int label : labels) {
    if (label < 1 || label > p) {
      throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(label) + " outside 1.." + std::to_string(p));
    }
    out = out.with(label - 1);
  }
  return out;
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int label : labels()) {
    if (!first) out += ",";
    out += std::to_string(label);
    first = false;
  }
  return out + "}";
}

DualGraph DualGraph::from_intersection_matrix(const std::vector<std::vector<std::int64_t>>& matrix) {
  const auto p = static_cast<int>(matrix.size());
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != p) throw Error(ErrorKind::NotSquare, "intersection matrix is not square");
  }
  if (p < 2) throw Error(ErrorKind::TooFewVertices, "need at least 2 vertices, got " + std::to_string(p));
  if (p > kMaxEnumerationVertices) {
    throw Error(ErrorKind::TooManyVertices, std::to_string(p) + " vertices exceeds the cap of " +
                                                std::to_string(kMaxEnumerationVertices));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    std::int64_t off_diagonal = 0;
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      const auto entry = matrix[i][j];
      if (entry != matrix[j][i]) {
        throw Error(ErrorKind::AsymmetricMatrix, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                     ")=" + std::to_string(entry) + " but (" + std::to_string(j + 1) +
                                                     "," + std::to_string(i + 1) + ")=" + std::to_string(matrix[j][i]));
      }
      if (entry < 0) {
        throw Error(ErrorKind::NegativeMultiplicity,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")=" + std::to_string(entry));
      }
      off_diagonal += entry;
      if (j > i) {
        for (std::int64_t copy = 0; copy < entry; ++copy) edges.push_back({i, j});
      }
    }
    if (matrix[i][i] != -off_diagonal) {
      throw Error(ErrorKind::BadDiagonal, "diagonal entry " + std::to_string(i + 1) + " is " +
                                              std::to_string(matrix[i][i]) + ", expected " +
                                              std::to_string(-off_diagonal));
    }
  }
  return from_edges(p, std::move(edges));
}

DualGraph DualGraph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 2) {
    throw Error(ErrorKind::TooFewVertices, "need at least 2 vertices, got " + std::to_string(vertex_count));
  }
  if (vertex_count > kMaxGraphVertices) {
    throw Error(ErrorKind::TooManyVertices, std::to_string(vertex_count) + " vertices exceeds the cap of " +
                                                std::to_string(kMaxGraphVertices));
  }
  for (auto& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= vertex_count || e.b >= vertex_count) {
      throw Error(ErrorKind::BadIndex, "edge end outside the vertex range");
    }
    if (e.a == e.b) throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(e.a + 1));
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges.begin(), edges.end());

  DualGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.adjacency_.assign(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(vertex_count), 0);
  g.neighbors_.assign(static_cast<std::size_t>(vertex_count), VertexSet{});
  for (const auto& e : g.edges_) {
    ++g.adjacency_[g.index(e.a, e.b)];
    ++g.adjacency_[g.index(e.b, e.a)];
    g.neighbors_[static_cast<std::size_t>(e.a)] = g.neighbors_[static_cast<std::size_t>(e.a)].with(e.b);
    g.neighbors_[static_cast<std::size_t>(e.b)] = g.neighbors_[static_cast<std::size_t>(e.b)].with(e.a);
  }
  if (!g.induces_connected(VertexSet::full(vertex_count))) {
    throw Error(ErrorKind::Disconnected, "graph is not connected");
  }
  return g;
}

int DualGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < vertex_count_; ++w) d += multiplicity(v, w);
  return d;
}

std::vector<std::vector<std::int64_t>> DualGraph::intersection_matrix() const {
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(vertex_count_));
  for (int i = 0; i < vertex_count_; ++i) m[i] = vertex_flow(i);
  return m;
}

int DualGraph::cut_size(VertexSet subset) const {
  int k = 0;
  for (const auto& e : edges_) k += e.ends_in(subset) == 1 ? 1 : 0;
  return k;
}

int DualGraph::boundary_count(VertexSet subset) const {
  if (subset.empty() || subset == VertexSet::full(vertex_count_) || (subset.bits & ~VertexSet::full(vertex_count_).bits)) {
    throw Error(ErrorKind::EmptyOrFullSubset, "subset " + subset.to_string() + " is not proper and nonempty");
  }
  return cut_size(subset);
}

std::vector<std::int64_t> DualGraph::vertex_flow(int v) const {
  check_vertex(v);
  std::vector<std::int64_t> c(static_cast<std::size_t>(vertex_count_), 0);
  for (int w = 0; w < vertex_count_; ++w) {
    if (w == v) continue;
    c[w] = multiplicity(v, w);
    c[v] -= c[w];
  }
  return c;
}

bool DualGraph::induces_connected(VertexSet subset) const {
  if (subset.empty()) return false;
  VertexSet reached = VertexSet::single(std::countr_zero(subset.bits));
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (std::uint64_t rest = frontier.bits; rest != 0; rest &= rest - 1) {
      next.bits |= neighbors(std::countr_zero(rest)).bits;
    }
    next.bits &= subset.bits & ~reached.bits;
    reached.bits |= next.bits;
    frontier = next;
  }
  return reached == subset;
}

std::string DualGraph::edge_label(int id) const {
  const auto& e = edge(id);
  std::string label = std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1);
  if (multiplicity(e.a, e.b) > 1) {
    // edges are sorted, so the parallel class is a contiguous run
    int first = id;
    while (first > 0 && edges_[static_cast<std::size_t>(first - 1)] == e) --first;
    label += "#" + std::to_string(id - first + 1);
  }
  return label;
}

void DualGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count_) {
    throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(vertex_count_));
  }
}

SubdividedGraph::SubdividedGraph(const DualGraph& base, int depth) : base_(base), depth_(depth) {
  if (depth < 0) throw Error(ErrorKind::BadIndex, "negative subdivision depth");
}

ChainVertex SubdividedGraph::chain_index(int w) const {
  if (!is_exceptional(w) || w >= vertex_count()) {
    throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(w + 1) + " is not exceptional");
  }
  const int offset = w - base_.vertex_count();
  ChainVertex cv;
  cv.edge = offset / depth_;
  cv.position = offset % depth_;
  const auto& e = base_.edge(cv.edge);
  const bool near_b = 2 * cv.position > depth_ - 1;
  cv.nearer_end = near_b ? e.b : e.a;
  cv.farther_end = near_b ? e.a : e.b;
  return cv;
}

DualGraph SubdividedGraph::as_graph() const {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>((depth_ + 1) * base_.edge_count()));
  for (int t = 0; t < base_.edge_count(); ++t) {
    const auto& e = base_.edge(t);
    int previous = e.a;
    for (int j = 0; j < depth_; ++j) {
      const int w = chain_vertex_id(t, j);
      edges.push_back({previous, w});
      previous = w;
    }
    edges.push_back({previous, e.b});
  }
  return DualGraph::from_edges(vertex_count(), std::move(edges));
}

SubdividedGraph subdivide(const DualGraph& g, int depth) { return SubdividedGraph(g, depth); }

std::vector<VertexSet> connected_subsets(const DualGraph& g) {
  const int p = g.vertex_count();
  if (p > kMaxEnumerationVertices) {
    throw Error(ErrorKind::TooManyVertices, "subset enumeration is capped at " +
                                                std::to_string(kMaxEnumerationVertices) + " vertices");
  }
  const VertexSet all = VertexSet::full(p);
  std::vector<VertexSet> out;

  // Each connected set is generated once, from its smallest vertex: a branch
  // either takes a candidate or forbids it for all later siblings.
  std::function<void(VertexSet, VertexSet, VertexSet)> grow = [&](VertexSet set, VertexSet candidates,
                                                                   VertexSet forbidden) {
    if (set != all) out.push_back(set);
    while (!candidates.empty()) {
      const int u = std::countr_zero(candidates.bits);
      candidates.bits &= candidates.bits - 1;
      forbidden = forbidden.with(u);
      VertexSet extended{candidates.bits | (g.neighbors(u).bits & ~forbidden.bits)};
      grow(set.with(u), extended, forbidden);
    }
  };
  for (int root = 0; root < p; ++root) {
    const VertexSet forbidden{VertexSet::full(root + 1).bits};
    grow(VertexSet::single(root), VertexSet{g.neighbors(root).bits & ~forbidden.bits}, forbidden);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cut> connected_cuts(const DualGraph& g) {
  std::vector<Cut> cuts;
  for (auto set : connected_subsets(g)) cuts.push_back({set, g.cut_size(set)});
  return cuts;
}

}  // namespace abel
