#pragma once

#include <vector>

#include "abel/graph.hpp"
#include "abel/quasistability.hpp"

namespace abel {

/// Ordered pair of edge ids.
struct EdgePair {
  int first = 0;
  int second = 0;

  bool diagonal() const { return first == second; }

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// A choice of ends (end1 of edge pair.first, end2 of edge pair.second).
/// On the diagonal both ends coincide.
struct PairChoice {
  EdgePair pair;
  int end1 = 0;
  int end2 = 0;

  friend bool operator==(const PairChoice&, const PairChoice&) = default;
  friend auto operator<=>(const PairChoice&, const PairChoice&) = default;
};

/// Validated constructor; throws InvalidChoice.
PairChoice make_choice(const DualGraph& g, EdgePair pair, int end1, int end2);

/// Replaces each chosen end by the other end of its edge.
PairChoice mirror(const DualGraph& g, const PairChoice& c);

/// Equal or mirror of each other.
bool equivalent(const DualGraph& g, const PairChoice& a, const PairChoice& b);

/// The candidate choices at a pair: four off the diagonal, two on it, sorted.
std::vector<PairChoice> candidate_choices(const DualGraph& g, EdgePair pair);

/// The inequality blocks for admissibility at c: five per edge outside the
/// pair, ten more for distinct edges, two for the diagonal.
bool admissible_at(const AbelData& data, const CorrectionTable& table, const PairChoice& c);

/// How the epsilon corrections count matching slots. Literal counts both
/// slots of a diagonal pair; Indicator caps the count at one. Literal is the
/// production rule; Indicator exists only for comparison.
enum class EpsilonRule { Literal, Indicator };

/// The two functions on the vertices of the twice-subdivided graph.
struct SFunctions {
  Multidegree s1;
  Multidegree s2;
};

/// On original vertices both equal q; on a chain vertex w of edge e with
/// nearer end m and far end n,
///   s1 = delta(v1,v2,m,n) + delta(v1,w2,m,n) + delta(w1,v2,m,n) - eps1
///   s2 = delta(w1,w2,m,n) + delta(w1,v2,m,n) + delta(v1,w2,m,n) - eps2
/// where (w1,w2) is the mirror choice, eps1 counts slots i with v_i = m and
/// e_i = e, and eps2 the same with w_i. Requires gs.depth() == 2.
SFunctions build_s_functions(const AbelData& data, const CorrectionTable& table, const SubdividedGraph& gs,
                             const PairChoice& c, EpsilonRule rule = EpsilonRule::Literal);

/// Canonical representative modulo twists at exceptional vertices: every
/// chain ends up all zero except possibly one -1; the twists spill onto the
/// chain's end vertices.
Multidegree reduce(const SubdividedGraph& gs, Multidegree d);

/// Admissible at c, and both s-functions have v-quasistable reductions with
/// respect to e extended by zero.
bool quasistable_at(const AbelData& data, const CorrectionTable& table, const SubdividedGraph& gs,
                    const PairChoice& c, EpsilonRule rule = EpsilonRule::Literal);

/// Per ordered edge pair, the quasistable choices.
class QTable {
 public:
  explicit QTable(int edge_count)
      : edge_count_(edge_count), sets_(static_cast<std::size_t>(edge_count) * static_cast<std::size_t>(edge_count)) {}

  int edge_count() const { return edge_count_; }
  const std::vector<PairChoice>& at(EdgePair pair) const { return sets_[index(pair)]; }
  std::vector<PairChoice>& at(EdgePair pair) { return sets_[index(pair)]; }

 private:
  std::size_t index(EdgePair pair) const {
    return static_cast<std::size_t>(pair.first) * static_cast<std::size_t>(edge_count_) +
           static_cast<std::size_t>(pair.second);
  }

  int edge_count_;
  std::vector<std::vector<PairChoice>> sets_;
};

struct SingularLocusReport {
  bool solvable = false;
  /// Pairs whose Q-set is nonempty and inside one mirror class, sorted.
  std::vector<EdgePair> sigma;
  QTable qtable{0};

  bool in_sigma(EdgePair pair) const;
  /// sigma without the diagonal
  std::vector<EdgePair> off_diagonal_sigma() const;
};

struct ResolutionOptions {
  EpsilonRule epsilon = EpsilonRule::Literal;
};

SingularLocusReport singular_locus(const AbelData& data, const CorrectionTable& table,
                                   const ResolutionOptions& options = {});
SingularLocusReport singular_locus(const AbelData& data, const ResolutionOptions& options = {});

}  // namespace abel
