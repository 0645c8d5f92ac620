#include "abel/resolution.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "abel/errors.hpp"

namespace abel {

PairChoice make_choice(const DualGraph& g, EdgePair pair, int end1, int end2) {
  if (pair.first < 0 || pair.second < 0 || pair.first >= g.edge_count() || pair.second >= g.edge_count()) {
    throw Error(ErrorKind::InvalidChoice, "edge id out of range");
  }
  if (!g.edge(pair.first).has_end(end1) || !g.edge(pair.second).has_end(end2)) {
    throw Error(ErrorKind::InvalidChoice, "chosen vertex is not an end of its edge");
  }
  if (pair.diagonal() && end1 != end2) {
    throw Error(ErrorKind::InvalidChoice, "diagonal pair needs equal ends");
  }
  return {pair, end1, end2};
}

PairChoice mirror(const DualGraph& g, const PairChoice& c) {
  return {c.pair, g.edge(c.pair.first).other(c.end1), g.edge(c.pair.second).other(c.end2)};
}

bool equivalent(const DualGraph& g, const PairChoice& a, const PairChoice& b) {
  return a == b || mirror(g, a) == b;
}

std::vector<PairChoice> candidate_choices(const DualGraph& g, EdgePair pair) {
  const auto& e1 = g.edge(pair.first);
  const auto& e2 = g.edge(pair.second);
  if (pair.diagonal()) return {{pair, e1.a, e1.a}, {pair, e1.b, e1.b}};
  return {{pair, e1.a, e2.a}, {pair, e1.a, e2.b}, {pair, e1.b, e2.a}, {pair, e1.b, e2.b}};
}

bool admissible_at(const AbelData& data, const CorrectionTable& t, const PairChoice& c) {
  const auto& g = data.graph();
  const int v1 = c.end1;
  const int v2 = c.end2;
  const auto mirrored = mirror(g, c);
  const int w1 = mirrored.end1;
  const int w2 = mirrored.end2;
  auto within = [](std::int64_t x) { return std::llabs(x) <= 1; };

  for (int id = 0; id < g.edge_count(); ++id) {
    if (id == c.pair.first || id == c.pair.second) continue;
    const int m = g.edge(id).a;
    const int n = g.edge(id).b;
    const auto vv = t.delta(v1, v2, m, n);
    const auto wv = t.delta(w1, v2, m, n);
    const auto vw = t.delta(v1, w2, m, n);
    const auto ww = t.delta(w1, w2, m, n);
    if (!(within(vv - wv) && within(vv - vw) && within(wv - vw) && within(ww - wv) && within(ww - vw))) return false;
  }

  if (!c.pair.diagonal()) {
    auto a = [&](int i, int k) { return t.delta(i, k, v1, w1); };
    auto b = [&](int i, int k) { return t.delta(i, k, v2, w2); };
    return within(a(v1, v2) - a(w1, v2) - 1) &&
           within(a(v1, v2) - a(v1, w2)) &&
           within(a(w1, v2) - a(v1, w2) + 1) &&
           within(a(w1, w2) - a(w1, v2)) &&
           within(a(w1, w2) - a(v1, w2) + 1) &&
           within(b(v1, w2) - b(v1, v2) + 1) &&
           within(b(v1, v2) - b(w1, v2)) &&
           within(b(w1, v2) - b(v1, w2) - 1) &&
           within(b(w1, w2) - b(w1, v2) + 1) &&
           within(b(v1, w2) - b(w1, w2));
  }
  auto a = [&](int i, int k) { return t.delta(i, k, v1, w1); };
  return within(a(v1, w1) - a(v1, v1) + 1) && within(a(v1, w1) - a(w1, w1) - 1);
}

SFunctions build_s_functions(const AbelData& data, const CorrectionTable& t, const SubdividedGraph& gs,
                             const PairChoice& c, EpsilonRule rule) {
  if (gs.depth() != 2) throw Error(ErrorKind::BadIndex, "s-functions live on the twice-subdivided graph");
  const auto& g = data.graph();
  const auto mirrored = mirror(g, c);
  const int v1 = c.end1, v2 = c.end2;
  const int w1 = mirrored.end1, w2 = mirrored.end2;
  const int e1 = c.pair.first, e2 = c.pair.second;

  SFunctions out;
  out.s1.assign(static_cast<std::size_t>(gs.vertex_count()), 0);
  std::copy(data.q().begin(), data.q().end(), out.s1.begin());
  out.s2 = out.s1;

  for (int w = g.vertex_count(); w < gs.vertex_count(); ++w) {
    const auto cv = gs.chain_index(w);
    const int m = cv.nearer_end;
    const int n = cv.farther_end;
    int eps1 = int(v1 == m && e1 == cv.edge) + int(v2 == m && e2 == cv.edge);
    int eps2 = int(w1 == m && e1 == cv.edge) + int(w2 == m && e2 == cv.edge);
    if (rule == EpsilonRule::Indicator) {
      eps1 = std::min(eps1, 1);
      eps2 = std::min(eps2, 1);
    }
    out.s1[w] = t.delta(v1, v2, m, n) + t.delta(v1, w2, m, n) + t.delta(w1, v2, m, n) - eps1;
    out.s2[w] = t.delta(w1, w2, m, n) + t.delta(w1, v2, m, n) + t.delta(v1, w2, m, n) - eps2;
  }
  return out;
}

Multidegree reduce(const SubdividedGraph& gs, Multidegree d) {
  if (d.size() != static_cast<std::size_t>(gs.vertex_count())) {
    throw Error(ErrorKind::BadIndex, "multidegree size does not match the subdivided graph");
  }
  const int depth = gs.depth();
  if (depth == 0) return d;
  const std::int64_t modulus = depth + 1;
  const auto& base = gs.base();
  std::vector<std::int64_t> target(static_cast<std::size_t>(depth));
  std::vector<std::int64_t> gap(static_cast<std::size_t>(depth));

  for (int t = 0; t < base.edge_count(); ++t) {
    // The twists at chain vertices span a lattice of index depth+1 in the
    // interior values; sum_j j * x_j mod (depth+1) picks the coset, and the
    // canonical vector with a single -1 at position depth+1-r represents it.
    std::int64_t weighted = 0;
    for (int j = 1; j <= depth; ++j) weighted += j * d[gs.chain_vertex_id(t, j - 1)];
    const std::int64_t r = ((weighted % modulus) + modulus) % modulus;
    std::fill(target.begin(), target.end(), 0);
    if (r != 0) target[static_cast<std::size_t>(modulus - r - 1)] = -1;
    for (int j = 0; j < depth; ++j) gap[j] = target[j] - d[gs.chain_vertex_id(t, j)];

    // Solve the path Laplacian system L a = gap with the explicit inverse
    // (L^-1)_{jk} = min(j,k) * (depth+1 - max(j,k)) / (depth+1).
    std::int64_t first_twist = 0;
    std::int64_t last_twist = 0;
    for (int j = 1; j <= depth; ++j) {
      std::int64_t numerator = 0;
      for (int k = 1; k <= depth; ++k) numerator += std::min(j, k) * (modulus - std::max(j, k)) * gap[k - 1];
      if (numerator % modulus != 0) throw std::logic_error("chain reduction left the twist lattice");
      const auto twist = numerator / modulus;
      if (j == 1) first_twist = twist;
      if (j == depth) last_twist = twist;
    }
    for (int j = 0; j < depth; ++j) d[gs.chain_vertex_id(t, j)] = target[j];
    const auto& e = base.edge(t);
    d[e.a] -= first_twist;
    d[e.b] -= last_twist;
  }
  return d;
}

bool quasistable_at(const AbelData& data, const CorrectionTable& t, const SubdividedGraph& gs, const PairChoice& c,
                    EpsilonRule rule) {
  if (!admissible_at(data, t, c)) return false;
  const auto s = build_s_functions(data, t, gs, c, rule);
  return is_quasistable_subdivided(gs, data.e(), data.v(), reduce(gs, s.s1)) &&
         is_quasistable_subdivided(gs, data.e(), data.v(), reduce(gs, s.s2));
}

bool SingularLocusReport::in_sigma(EdgePair pair) const {
  return std::binary_search(sigma.begin(), sigma.end(), pair);
}

std::vector<EdgePair> SingularLocusReport::off_diagonal_sigma() const {
  std::vector<EdgePair> out;
  std::copy_if(sigma.begin(), sigma.end(), std::back_inserter(out), [](EdgePair p) { return !p.diagonal(); });
  return out;
}

SingularLocusReport singular_locus(const AbelData& data, const CorrectionTable& table,
                                   const ResolutionOptions& options) {
  const auto& g = data.graph();
  const auto gs = subdivide(g, 2);
  SingularLocusReport report;
  report.solvable = true;
  report.qtable = QTable(g.edge_count());
  for (int r = 0; r < g.edge_count(); ++r) {
    for (int s = 0; s < g.edge_count(); ++s) {
      const EdgePair pair{r, s};
      auto& qset = report.qtable.at(pair);
      for (const auto& c : candidate_choices(g, pair)) {
        if (quasistable_at(data, table, gs, c, options.epsilon)) qset.push_back(c);
      }
      if (qset.empty()) {
        report.solvable = false;
        continue;
      }
      const bool one_class = std::all_of(qset.begin(), qset.end(),
                                         [&](const PairChoice& c) { return equivalent(g, c, qset.front()); });
      if (one_class) report.sigma.push_back(pair);
    }
  }
  return report;
}

SingularLocusReport singular_locus(const AbelData& data, const ResolutionOptions& options) {
  return singular_locus(data, CorrectionTable(data), options);
}

}  // namespace abel
