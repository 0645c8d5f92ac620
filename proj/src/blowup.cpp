#include "abel/blowup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "abel/errors.hpp"

namespace abel {

BlowupSequence::BlowupSequence(int vertex_count, std::vector<BlowupStep> steps)
    : vertex_count_(vertex_count), steps_(std::move(steps)) {
  const auto all = VertexSet::full(vertex_count);
  for (std::size_t j = 0; j < steps_.size(); ++j) {
    for (auto subset : {steps_[j].first, steps_[j].second}) {
      if (subset.empty() || subset == all || (subset.bits & ~all.bits) != 0) {
        throw Error(ErrorKind::InvalidSequence, "step " + std::to_string(j + 1) + " has subset " + subset.to_string() +
                                                    " that is not proper and nonempty");
      }
    }
  }
}

std::string BlowupSequence::to_string() const {
  if (steps_.empty()) return "()";
  std::string out;
  for (std::size_t j = 0; j < steps_.size(); ++j) {
    if (j > 0) out += ", ";
    out += "(" + steps_[j].first.to_string() + "," + steps_[j].second.to_string() + ")";
  }
  return out;
}

bool is_symmetric(const BlowupSequence& s) {
  const auto& steps = s.steps();
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const auto& step = steps[j];
    if (step.first == step.second) continue;
    const BlowupStep swapped{step.second, step.first};
    const bool before = j > 0 && steps[j - 1] == swapped;
    const bool after = j + 1 < steps.size() && steps[j + 1] == swapped;
    if (!before && !after) return false;
  }
  return true;
}

bool affects(const DualGraph& g, const BlowupStep& step, EdgePair pair) {
  return g.edge(pair.first).ends_in(step.first) == 1 && g.edge(pair.second).ends_in(step.second) == 1;
}

std::optional<std::size_t> order_of(const DualGraph& g, const BlowupSequence& s, EdgePair pair) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (affects(g, s.steps()[j], pair)) return j;
  }
  return std::nullopt;
}

std::vector<EdgePair> center_of(const BlowupSequence& s, const DualGraph& g) {
  std::vector<EdgePair> center;
  for (int r = 0; r < g.edge_count(); ++r) {
    for (int t = 0; t < g.edge_count(); ++t) {
      const EdgePair pair{r, t};
      if (pair.diagonal() || order_of(g, s, pair)) center.push_back(pair);
    }
  }
  return center;
}

namespace {

std::string pair_label(const DualGraph& g, EdgePair pair) {
  return "(" + g.edge_label(pair.first) + ", " + g.edge_label(pair.second) + ")";
}

bool oriented(const BlowupStep& step, const PairChoice& c) {
  const bool in1 = step.first.contains(c.end1);
  const bool in2 = step.second.contains(c.end2);
  return in1 != in2;
}

}  // namespace

Verdict verify(const AbelData& data, const SingularLocusReport& report, const BlowupSequence& s) {
  const auto& g = data.graph();
  Verdict verdict;
  verdict.symmetric = is_symmetric(s);
  if (s.vertex_count() != g.vertex_count() && !s.empty()) {
    throw Error(ErrorKind::InvalidSequence, "sequence built for a different vertex count");
  }
  if (!report.solvable) {
    verdict.witness = "singular locus is not solvable";
    return verdict;
  }
  const auto center = center_of(s, g);
  for (const auto& pair : report.sigma) {
    if (!std::binary_search(center.begin(), center.end(), pair)) {
      verdict.witness = "pair " + pair_label(g, pair) + " of the singular locus is outside the center";
      return verdict;
    }
  }
  for (const auto& pair : report.off_diagonal_sigma()) {
    const auto j = *order_of(g, s, pair);
    for (const auto& c : report.qtable.at(pair)) {
      if (!oriented(s.steps()[j], c)) {
        verdict.witness = "quasistable choice (" + std::to_string(c.end1 + 1) + "," + std::to_string(c.end2 + 1) +
                          ") at " + pair_label(g, pair) + " is not oriented across step " + std::to_string(j + 1);
        return verdict;
      }
    }
  }
  verdict.resolves = true;
  for (const auto& pair : center) {
    if (!report.in_sigma(pair)) {
      verdict.witness = "resolves, but pair " + pair_label(g, pair) + " in the center is outside the singular locus";
      return verdict;
    }
  }
  verdict.minimal = true;
  verdict.witness = "resolves minimally";
  return verdict;
}

int default_max_len(const SingularLocusReport& report) {
  return 2 * static_cast<int>(report.off_diagonal_sigma().size()) + 2;
}

namespace {

inline constexpr int kMaxSwappedVertices = 8;

// Bitset over the off-diagonal pairs of sigma.
struct PairSet {
  std::vector<std::uint64_t> words;

  explicit PairSet(std::size_t n = 0) : words((n + 63) / 64, 0) {}
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool any_outside(const PairSet& covered) const {
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w] & ~covered.words[w]) return true;
    }
    return false;
  }
  PairSet& operator|=(const PairSet& o) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
    return *this;
  }
  PairSet minus(const PairSet& o) const {
    PairSet out = *this;
    for (std::size_t w = 0; w < words.size(); ++w) out.words[w] &= ~o.words[w];
    return out;
  }
  friend bool operator==(const PairSet&, const PairSet&) = default;
};

struct PairSetHash {
  std::size_t operator()(const PairSet& s) const { return boost::hash_range(s.words.begin(), s.words.end()); }
};

struct Candidate {
  std::vector<BlowupStep> steps;
  PairSet affected;
  PairSet misoriented;  // pairs this candidate would reach first with the wrong orientation
};

class Searcher {
 public:
  Searcher(const DualGraph& g, const SingularLocusReport& report, bool allow_swapped)
      : g_(g), report_(report), targets_(report.off_diagonal_sigma()) {
    for (std::size_t i = 0; i < targets_.size(); ++i) index_[targets_[i]] = i;
    full_ = PairSet(targets_.size());
    for (std::size_t i = 0; i < targets_.size(); ++i) full_.set(i);
    build_candidates(allow_swapped && g.vertex_count() <= kMaxSwappedVertices);
  }

  std::optional<BlowupSequence> run(int max_len) {
    if (targets_.empty()) return BlowupSequence(g_.vertex_count(), {});
    for (int depth = 1; depth <= max_len; ++depth) {
      path_.clear();
      if (descend(PairSet(targets_.size()), depth)) return BlowupSequence(g_.vertex_count(), path_);
    }
    return std::nullopt;
  }

 private:
  // Affected and misoriented sets of one step; nullopt when it touches a
  // pair outside sigma.
  std::optional<std::pair<PairSet, PairSet>> evaluate(const BlowupStep& step) const {
    PairSet affected(targets_.size());
    PairSet misoriented(targets_.size());
    for (int r = 0; r < g_.edge_count(); ++r) {
      for (int t = 0; t < g_.edge_count(); ++t) {
        const EdgePair pair{r, t};
        if (pair.diagonal() || !affects(g_, step, pair)) continue;
        auto it = index_.find(pair);
        if (it == index_.end()) return std::nullopt;
        affected.set(it->second);
        const auto& qset = report_.qtable.at(pair);
        if (!std::all_of(qset.begin(), qset.end(), [&](const PairChoice& c) { return oriented(step, c); })) {
          misoriented.set(it->second);
        }
      }
    }
    return std::make_pair(affected, misoriented);
  }

  void build_candidates(bool with_swapped) {
    const int p = g_.vertex_count();
    std::vector<VertexSet> subsets;
    for (std::uint64_t bits = 1; bits < VertexSet::full(p).bits; ++bits) subsets.push_back({bits});
    std::stable_sort(subsets.begin(), subsets.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });

    std::vector<VertexSet> seen;
    for (auto subset : subsets) {
      if (std::find(seen.begin(), seen.end(), subset.complement(p)) != seen.end()) continue;
      seen.push_back(subset);
      const BlowupStep step{subset, subset};
      auto sets = evaluate(step);
      if (!sets || !sets->first.any_outside(PairSet(targets_.size()))) continue;
      candidates_.push_back({{step}, sets->first, sets->second});
    }

    if (!with_swapped) return;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen_pairs;
    for (auto a : subsets) {
      for (auto b : subsets) {
        if (a == b) continue;
        if (seen_pairs.contains({a.complement(p).bits, b.complement(p).bits})) continue;
        seen_pairs.emplace(a.bits, b.bits);
        const BlowupStep forward{a, b};
        const BlowupStep backward{b, a};
        auto first = evaluate(forward);
        if (!first) continue;
        auto second = evaluate(backward);
        if (!second) continue;
        PairSet affected = first->first;
        affected |= second->first;
        if (!affected.any_outside(PairSet(targets_.size()))) continue;
        PairSet misoriented = first->second;
        misoriented |= second->second.minus(first->first);
        candidates_.push_back({{forward, backward}, affected, misoriented});
      }
    }
  }

  bool descend(const PairSet& covered, int budget) {
    if (covered == full_) return true;
    if (budget <= 0) return false;
    if (auto it = failed_.find(covered); it != failed_.end() && it->second >= budget) return false;
    for (const auto& candidate : candidates_) {
      if (static_cast<int>(candidate.steps.size()) > budget) continue;
      if (!candidate.affected.any_outside(covered)) continue;
      if (candidate.misoriented.any_outside(covered)) continue;
      PairSet next = covered;
      next |= candidate.affected;
      path_.insert(path_.end(), candidate.steps.begin(), candidate.steps.end());
      if (descend(next, budget - static_cast<int>(candidate.steps.size()))) return true;
      path_.resize(path_.size() - candidate.steps.size());
    }
    auto& known = failed_[covered];
    known = std::max(known, budget);
    return false;
  }

  const DualGraph& g_;
  const SingularLocusReport& report_;
  std::vector<EdgePair> targets_;
  std::map<EdgePair, std::size_t> index_;
  PairSet full_;
  std::vector<Candidate> candidates_;
  std::unordered_map<PairSet, int, PairSetHash> failed_;
  std::vector<BlowupStep> path_;
};

}  // namespace

std::optional<BlowupSequence> search_minimal_symmetric(const AbelData& data, const SingularLocusReport& report,
                                                       const SearchOptions& options) {
  if (!report.solvable) throw Error(ErrorKind::Unsolvable, "singular locus is not solvable");
  Searcher searcher(data.graph(), report, options.allow_swapped);
  return searcher.run(options.max_len.value_or(default_max_len(report)));
}

}  // namespace abel
