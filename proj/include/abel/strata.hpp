#pragma once

#include <cstdint>
#include <vector>

#include "abel/graph.hpp"
#include "abel/quasistability.hpp"

namespace abel {

/// Position of s_I = sum_{i in I} e(i) + k_I/2 relative to the integer walls.
struct WallPosition {
  std::int64_t floor = 0;
  bool on_wall = false;

  friend bool operator==(const WallPosition&, const WallPosition&) = default;
  friend auto operator<=>(const WallPosition&, const WallPosition&) = default;
};

/// One WallPosition per proper subset containing v, in increasing bitmask
/// order of the subsets.
struct StratumSignature {
  std::vector<VertexSet> subsets;
  std::vector<WallPosition> positions;
  /// -k_I/2 <= sum_I e < k_I/2 for every listed I, i.e. 0 <= s_I < k_I.
  bool in_xi0 = false;

  friend bool operator==(const StratumSignature& a, const StratumSignature& b) {
    return a.positions == b.positions;
  }
  friend auto operator<=>(const StratumSignature& a, const StratumSignature& b) {
    return a.positions <=> b.positions;
  }
};

/// Throws NonzeroDegree unless sum e = 0.
StratumSignature signature(const DualGraph& g, int v, const Polarization& e);

bool same_stratum_signature(const DualGraph& g, int v, const Polarization& e1, const Polarization& e2);

struct StratumRepresentative {
  Polarization e;
  StratumSignature signature;
};

/// Scans degree-0 points whose coordinates are n/denominator with
/// |n| <= bound * denominator, keeps those in Xi_0 and returns the first point
/// seen for each signature (sorted by signature). Strata without a grid point
/// are missed.
std::vector<StratumRepresentative> enumerate_stratum_representatives(const DualGraph& g, int v,
                                                                     std::int64_t denominator, std::int64_t bound);

}  // namespace abel
