#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "abel/document.hpp"
#include "oracles.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return ABEL_DATA_DIR; }
inline std::filesystem::path document_path(const std::string& name) { return data_dir() / (name + ".json"); }
inline std::filesystem::path sequence_path(const std::string& name) {
  return data_dir() / "sequences" / (name + ".json");
}
inline abel::AbelData load(const std::string& name) { return abel::to_abel_data(abel::load_document(document_path(name))); }

/// Every shipped document, paired with the sequence file that the examples
/// give for it (empty when there is none).
struct Fixture {
  std::string document;
  std::string sequence;
  std::size_t sigma_off_diagonal;
};

inline const std::vector<Fixture>& worked_examples() {
  static const std::vector<Fixture> all = {
      {"four-vertex", "four-vertex", 8},
      {"four-vertex-shifted", "four-vertex", 8},
      {"four-vertex-opposite", "four-vertex-opposite", 2},
      {"circular-2", "circular-2", 2},
      {"circular-3", "circular-3", 6},
      {"circular-4", "circular-4", 12},
      {"circular-5", "circular-5", 20},
      {"eleven-edge", "eleven-edge", 0},
      {"eleven-edge-half", "eleven-edge-half", 12},
      {"eleven-edge-unit", "eleven-edge-unit", 24},
  };
  return all;
}

inline const std::vector<std::string>& all_documents() {
  static const std::vector<std::string> all = {
      "four-vertex", "four-vertex-shifted", "four-vertex-opposite", "eleven-edge", "eleven-edge-half",
      "eleven-edge-unit", "circular-2", "circular-3", "circular-4", "circular-5", "banana", "single-edge"};
  return all;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Connected loopless multigraph: random tree plus random extra edges.
inline abel::DualGraph random_graph(std::mt19937_64& rng, int p, int max_edges) {
  std::vector<abel::Edge> edges;
  for (int i = 1; i < p; ++i) {
    const int j = uniform(rng, 0, i - 1);
    edges.push_back({j, i});
  }
  const int total = uniform(rng, p - 1, std::max(p - 1, max_edges));
  while (static_cast<int>(edges.size()) < total) {
    int a = uniform(rng, 0, p - 1), b = uniform(rng, 0, p - 2);
    if (b >= a) ++b;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return abel::DualGraph::from_edges(p, edges);
}

inline bool in_xi0(const oracle::Matrix& m, int v, const std::vector<oracle::Q>& e) {
  const int p = static_cast<int>(m.size());
  for (std::uint64_t set = 1; set + 1 < (std::uint64_t{1} << p); ++set) {
    if (!((set >> v) & 1)) continue;
    oracle::Q s(0);
    for (int i = 0; i < p; ++i) {
      if ((set >> i) & 1) s += e[i];
    }
    const oracle::Q half(oracle::boundary(m, set), 2);
    if (s < -half || s >= half) return false;
  }
  return true;
}

/// Degree-0 polarization with entries in (1/den) Z, |e_i| <= bound, inside
/// Xi_0 for v; zero when rejection sampling gives up.
inline abel::Polarization random_xi0(std::mt19937_64& rng, const abel::DualGraph& g, int v, int den, int bound) {
  const int p = g.vertex_count();
  const auto m = g.intersection_matrix();
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<oracle::Q> e(p);
    std::int64_t total = 0;
    for (int i = 0; i + 1 < p; ++i) {
      const int n = uniform(rng, -bound * den, bound * den);
      total += n;
      e[i] = oracle::Q(n, den);
    }
    e[p - 1] = oracle::Q(-total, den);
    if (-total < -bound * den || -total > bound * den) continue;
    if (in_xi0(m, v, e)) return e;
  }
  return abel::Polarization(p, abel::Rational(0));
}

inline abel::Multidegree random_degree(std::mt19937_64& rng, int p, int bound, std::int64_t total) {
  while (true) {
    abel::Multidegree d(p);
    std::int64_t s = 0;
    for (int i = 0; i + 1 < p; ++i) s += d[i] = uniform(rng, -bound, bound);
    d[p - 1] = total - s;
    if (d[p - 1] >= -bound && d[p - 1] <= bound) return d;
  }
}

inline std::vector<std::pair<int, int>> edge_pairs(const abel::DualGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.a, e.b);
  return out;
}

}  // namespace fixtures
