#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "abel/graph.hpp"
#include "abel/rational.hpp"

namespace abel {

/// Rational value per vertex.
using Polarization = std::vector<Rational>;
/// Integer value per vertex.
using Multidegree = std::vector<std::int64_t>;

std::int64_t total_degree(const Multidegree& d);

/// Indicator function of u.
Multidegree unit_multidegree(const DualGraph& g, int u);

/// Precomputed v-quasistability test for one (graph, polarization, v).
///
/// d is v-quasistable when sum_I (d - e) >= -k_I/2 for every proper nonempty
/// I, strictly when v is in I. Only connected I are checked: a disconnected I
/// splits into components whose sums and boundary counts add up. Everything
/// is scaled by 2L (L the common denominator of e) so comparisons are on
/// integers.
class QuasistabilityTest {
 public:
  QuasistabilityTest(const DualGraph& g, const Polarization& e, int v);

  const DualGraph& graph() const { return graph_; }
  int marked_vertex() const { return v_; }

  bool holds(const Multidegree& d) const { return !first_violation(d).has_value(); }

  /// Smallest-bitmask connected subset whose inequality fails. Throws
  /// DegreeMismatch when the total degrees of d and e differ.
  std::optional<VertexSet> first_violation(const Multidegree& d) const;

 private:
  DualGraph graph_;
  std::vector<Cut> cuts_;
  std::vector<std::int64_t> scaled_e_;  // L * e
  std::int64_t scale_;                  // L
  std::int64_t scaled_total_;           // L * sum(e)
  int v_;
};

bool is_quasistable(const DualGraph& g, const Polarization& e, int v, const Multidegree& d);

/// Quasistability on a subdivided graph, with the base polarization extended
/// by zero on exceptional vertices. Chains are independent once the original
/// vertices in I are fixed, so this minimizes chain by chain over the 2^p
/// original subsets instead of enumerating subsets of the subdivided graph.
bool is_quasistable_subdivided(const SubdividedGraph& gs, const Polarization& base_e, int v, const Multidegree& d);

/// Result of pushing d to its quasistable twister-equivalent.
struct Representative {
  Multidegree degree;                ///< d - sum_m twist[m] * c_m
  std::vector<std::int64_t> twist;   ///< normalized so twist[v] == 0
  std::int64_t steps = 0;
};

inline constexpr std::int64_t kMaxTwistSteps = 1'000'000;

/// Repeatedly twists the smallest violating connected subset I (d -= sum_{m in I} c_m,
/// which raises the degree on I by k_I) until d is v-quasistable.
/// Throws NonTermination after kMaxTwistSteps.
Representative quasistable_representative(const QuasistabilityTest& test, const Multidegree& d);
Representative quasistable_representative(const DualGraph& g, const Polarization& e, int v, const Multidegree& d);

/// Degree-2 Abel data (graph, e, q, v) with sum e = sum q - 2.
class AbelData {
 public:
  AbelData(DualGraph graph, Polarization e, Multidegree q, int v);

  const DualGraph& graph() const { return graph_; }
  const Polarization& e() const { return e_; }
  const Multidegree& q() const { return q_; }
  int v() const { return v_; }
  Rational f() const { return sum(e_); }

 private:
  DualGraph graph_;
  Polarization e_;
  Multidegree q_;
  int v_;
};

/// The q with value 2 at v and 0 elsewhere.
Multidegree fixed_q(int vertex_count, int v);

/// Normalized twister coefficients w_(i,k) for every ordered vertex pair,
/// with w_(i,k)(v) = 0. delta(i,k,m,n) = w_(i,k)(m) - w_(i,k)(n).
class CorrectionTable {
 public:
  explicit CorrectionTable(const AbelData& data);

  int vertex_count() const { return p_; }
  std::span<const std::int64_t> w(int i, int k) const {
    return {w_.data() + offset(i, k), static_cast<std::size_t>(p_)};
  }
  std::int64_t delta(int i, int k, int m, int n) const {
    const auto* row = w_.data() + offset(i, k);
    return row[m] - row[n];
  }

  friend bool operator==(const CorrectionTable&, const CorrectionTable&) = default;

 private:
  std::size_t offset(int i, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(k)) *
           static_cast<std::size_t>(p_);
  }

  int p_;
  std::vector<std::int64_t> w_;
};

inline CorrectionTable correction_table(const AbelData& data) { return CorrectionTable(data); }

}  // namespace abel
