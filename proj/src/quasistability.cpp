#include "abel/quasistability.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "abel/errors.hpp"

namespace abel {

namespace {

void check_size(const DualGraph& g, std::size_t size, const char* what) {
  if (size != static_cast<std::size_t>(g.vertex_count())) {
    throw Error(ErrorKind::BadIndex, std::string(what) + " has " + std::to_string(size) + " entries for " +
                                         std::to_string(g.vertex_count()) + " vertices");
  }
}

std::vector<std::int64_t> scale_polarization(const Polarization& e, std::int64_t scale) {
  std::vector<std::int64_t> out;
  out.reserve(e.size());
  for (const auto& x : e) out.push_back(x.numerator() * (scale / x.denominator()));
  return out;
}

}  // namespace

std::int64_t total_degree(const Multidegree& d) { return std::accumulate(d.begin(), d.end(), std::int64_t{0}); }

Multidegree unit_multidegree(const DualGraph& g, int u) {
  g.check_vertex(u);
  Multidegree d(static_cast<std::size_t>(g.vertex_count()), 0);
  d[u] = 1;
  return d;
}

QuasistabilityTest::QuasistabilityTest(const DualGraph& g, const Polarization& e, int v)
    : graph_(g), cuts_(connected_cuts(g)), scale_(common_denominator(e)), v_(v) {
  g.check_vertex(v);
  check_size(g, e.size(), "polarization");
  scaled_e_ = scale_polarization(e, scale_);
  scaled_total_ = std::accumulate(scaled_e_.begin(), scaled_e_.end(), std::int64_t{0});
}

std::optional<VertexSet> QuasistabilityTest::first_violation(const Multidegree& d) const {
  check_size(graph_, d.size(), "multidegree");
  if (scale_ * total_degree(d) != scaled_total_) {
    throw Error(ErrorKind::DegreeMismatch, "multidegree total " + std::to_string(total_degree(d)) +
                                               " differs from the polarization total");
  }
  for (const auto& cut : cuts_) {
    // 2L * (sum_I (d - e) + k_I / 2)
    std::int64_t value = scale_ * cut.boundary;
    for (std::uint64_t rest = cut.set.bits; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      value += 2 * (scale_ * d[i] - scaled_e_[i]);
    }
    if (value < 0 || (value == 0 && cut.set.contains(v_))) return cut.set;
  }
  return std::nullopt;
}

bool is_quasistable(const DualGraph& g, const Polarization& e, int v, const Multidegree& d) {
  return QuasistabilityTest(g, e, v).holds(d);
}

namespace {

// Minimum chain contribution for the four end memberships, overall and with
// the interior neither empty nor full.
struct ChainMinima {
  std::int64_t all[4];
  std::int64_t nonempty[4];
  std::int64_t nonfull[4];
};

ChainMinima chain_minima(const SubdividedGraph& gs, int edge, const Multidegree& d, std::int64_t scale) {
  const int depth = gs.depth();
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max() / 4;
  ChainMinima out{};
  std::fill(std::begin(out.all), std::end(out.all), kInf);
  std::fill(std::begin(out.nonempty), std::end(out.nonempty), kInf);
  std::fill(std::begin(out.nonfull), std::end(out.nonfull), kInf);
  const std::uint32_t full = (1U << depth) - 1;
  for (int ends = 0; ends < 4; ++ends) {
    const bool in_a = ends & 1;
    const bool in_b = ends & 2;
    for (std::uint32_t interior = 0; interior <= full; ++interior) {
      std::int64_t value = 0;
      int cut = 0;
      bool previous = in_a;
      for (int j = 0; j < depth; ++j) {
        const bool in = (interior >> j) & 1U;
        if (in) value += 2 * scale * d[gs.chain_vertex_id(edge, j)];
        cut += in != previous ? 1 : 0;
        previous = in;
      }
      cut += previous != in_b ? 1 : 0;
      value += scale * cut;
      out.all[ends] = std::min(out.all[ends], value);
      if (interior != 0) out.nonempty[ends] = std::min(out.nonempty[ends], value);
      if (interior != full) out.nonfull[ends] = std::min(out.nonfull[ends], value);
    }
  }
  return out;
}

}  // namespace

bool is_quasistable_subdivided(const SubdividedGraph& gs, const Polarization& base_e, int v, const Multidegree& d) {
  const auto& base = gs.base();
  const int p = base.vertex_count();
  base.check_vertex(v);
  check_size(base, base_e.size(), "polarization");
  if (d.size() != static_cast<std::size_t>(gs.vertex_count())) {
    throw Error(ErrorKind::BadIndex, "multidegree size does not match the subdivided graph");
  }
  if (p > kMaxEnumerationVertices) throw Error(ErrorKind::TooManyVertices, "base graph too large");
  const auto scale = common_denominator(base_e);
  const auto scaled_e = scale_polarization(base_e, scale);
  if (scale * total_degree(d) != std::accumulate(scaled_e.begin(), scaled_e.end(), std::int64_t{0})) {
    throw Error(ErrorKind::DegreeMismatch, "multidegree total differs from the polarization total");
  }
  if (gs.depth() == 0) return is_quasistable(base, base_e, v, Multidegree(d.begin(), d.begin() + p));

  std::vector<ChainMinima> minima;
  minima.reserve(static_cast<std::size_t>(base.edge_count()));
  for (int t = 0; t < base.edge_count(); ++t) minima.push_back(chain_minima(gs, t, d, scale));

  const std::uint64_t all_originals = VertexSet::full(p).bits;
  for (std::uint64_t bits = 0; bits <= all_originals; ++bits) {
    const VertexSet originals{bits};
    std::int64_t value = 0;
    for (int i = 0; i < p; ++i) {
      if (originals.contains(i)) value += 2 * (scale * d[i] - scaled_e[i]);
    }
    std::int64_t best = 0;
    if (bits == 0 || bits == all_originals) {
      // I must stay nonempty (resp. not everything): at least one chain
      // deviates from the all-out (resp. all-in) interior.
      const int ends = bits == 0 ? 0 : 3;
      std::int64_t base_sum = 0;
      for (const auto& m : minima) base_sum += m.all[ends];
      best = std::numeric_limits<std::int64_t>::max();
      for (const auto& m : minima) {
        const auto restricted = bits == 0 ? m.nonempty[ends] : m.nonfull[ends];
        best = std::min(best, base_sum - m.all[ends] + restricted);
      }
    } else {
      for (int t = 0; t < base.edge_count(); ++t) {
        const auto& e = base.edge(t);
        best += minima[static_cast<std::size_t>(t)].all[int(originals.contains(e.a)) | (int(originals.contains(e.b)) << 1)];
      }
    }
    value += best;
    if (value < 0 || (value == 0 && originals.contains(v))) return false;
  }
  return true;
}

Representative quasistable_representative(const QuasistabilityTest& test, const Multidegree& d) {
  const auto& g = test.graph();
  const int p = g.vertex_count();
  Representative rep{d, std::vector<std::int64_t>(static_cast<std::size_t>(p), 0), 0};
  while (auto violation = test.first_violation(rep.degree)) {
    if (++rep.steps > kMaxTwistSteps) {
      throw Error(ErrorKind::NonTermination, "quasistable representative not reached after " +
                                                 std::to_string(kMaxTwistSteps) + " twists");
    }
    const VertexSet set = *violation;
    for (int j = 0; j < p; ++j) {
      // (sum_{m in I} c_m)(j)
      std::int64_t flow = 0;
      for (int m = 0; m < p; ++m) {
        if (m != j && set.contains(m) != set.contains(j)) flow += g.multiplicity(m, j);
      }
      rep.degree[j] -= set.contains(j) ? -flow : flow;
      if (set.contains(j)) ++rep.twist[j];
    }
  }
  const auto pinned = rep.twist[test.marked_vertex()];
  for (auto& a : rep.twist) a -= pinned;
  return rep;
}

Representative quasistable_representative(const DualGraph& g, const Polarization& e, int v, const Multidegree& d) {
  return quasistable_representative(QuasistabilityTest(g, e, v), d);
}

AbelData::AbelData(DualGraph graph, Polarization e, Multidegree q, int v)
    : graph_(std::move(graph)), e_(std::move(e)), q_(std::move(q)), v_(v) {
  graph_.check_vertex(v_);
  check_size(graph_, e_.size(), "polarization");
  check_size(graph_, q_.size(), "multidegree q");
  if (sum(e_) != Rational(total_degree(q_) - 2)) {
    throw Error(ErrorKind::DegreeMismatch, "sum of e is " + to_string(sum(e_)) + " but sum of q minus 2 is " +
                                               std::to_string(total_degree(q_) - 2));
  }
}

Multidegree fixed_q(int vertex_count, int v) {
  Multidegree q(static_cast<std::size_t>(vertex_count), 0);
  q.at(static_cast<std::size_t>(v)) = 2;
  return q;
}

CorrectionTable::CorrectionTable(const AbelData& data)
    : p_(data.graph().vertex_count()),
      w_(static_cast<std::size_t>(p_) * static_cast<std::size_t>(p_) * static_cast<std::size_t>(p_), 0) {
  const QuasistabilityTest test(data.graph(), data.e(), data.v());
  for (int i = 0; i < p_; ++i) {
    for (int k = i; k < p_; ++k) {
      Multidegree d = data.q();
      --d[i];
      --d[k];
      const auto rep = quasistable_representative(test, d);
      std::copy(rep.twist.begin(), rep.twist.end(), w_.begin() + static_cast<std::ptrdiff_t>(offset(i, k)));
      std::copy(rep.twist.begin(), rep.twist.end(), w_.begin() + static_cast<std::ptrdiff_t>(offset(k, i)));
    }
  }
}

}  // namespace abel
