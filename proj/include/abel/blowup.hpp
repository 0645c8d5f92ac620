#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abel/graph.hpp"
#include "abel/quasistability.hpp"
#include "abel/resolution.hpp"

namespace abel {

struct BlowupStep {
  VertexSet first;
  VertexSet second;

  friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
  friend auto operator<=>(const BlowupStep&, const BlowupStep&) = default;
};

/// Pair of equal-length sequences of proper nonempty vertex subsets, stored
/// step by step.
class BlowupSequence {
 public:
  BlowupSequence() = default;
  /// Throws InvalidSequence when a subset is empty, full or out of range.
  BlowupSequence(int vertex_count, std::vector<BlowupStep> steps);

  int vertex_count() const { return vertex_count_; }
  const std::vector<BlowupStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  /// "({1},{1}), ({4},{4})", or "()" when empty.
  std::string to_string() const;

  friend bool operator==(const BlowupSequence&, const BlowupSequence&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<BlowupStep> steps_;
};

/// Every step with different subsets has a neighbouring step equal to its
/// swap. Neighbours past either end never match.
bool is_symmetric(const BlowupSequence& s);

/// Exactly one end of the first edge in step.first and exactly one end of
/// the second edge in step.second.
bool affects(const DualGraph& g, const BlowupStep& step, EdgePair pair);

/// Smallest 0-based step index affecting the pair.
std::optional<std::size_t> order_of(const DualGraph& g, const BlowupSequence& s, EdgePair pair);

/// The diagonal together with every affected pair, sorted.
std::vector<EdgePair> center_of(const BlowupSequence& s, const DualGraph& g);

struct Verdict {
  bool resolves = false;
  bool minimal = false;
  bool symmetric = false;
  /// Why the sequence fails, or a short confirmation.
  std::string witness;
};

/// Checks that the center contains sigma, that sigma is solvable, and that
/// every quasistable choice at each off-diagonal pair of sigma is oriented
/// across the step of that pair's order. minimal additionally needs center == sigma.
Verdict verify(const AbelData& data, const SingularLocusReport& report, const BlowupSequence& s);

struct SearchOptions {
  /// Defaults to default_max_len(report).
  std::optional<int> max_len;
  /// Also try adjacent swapped pairs (A,B),(B,A) after equal-pair steps.
  bool allow_swapped = true;
};

/// 2 * |sigma minus diagonal| + 2
int default_max_len(const SingularLocusReport& report);

/// Iterative deepening over sequence length. Candidates at each depth are
/// equal-pair steps by increasing cardinality then bitmask (one of each
/// complementary pair), then swapped adjacent pairs. Steps that affect a pair
/// outside sigma, or first reach a pair of sigma with the wrong orientation,
/// are pruned. Returns the first hit in that order, or nullopt when nothing
/// fits in max_len. Throws Unsolvable when the report is not solvable.
std::optional<BlowupSequence> search_minimal_symmetric(const AbelData& data, const SingularLocusReport& report,
                                                       const SearchOptions& options = {});

}  // namespace abel
