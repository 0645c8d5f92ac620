#include "abel/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <thread>

#include "abel/errors.hpp"
#include "abel/strata.hpp"

namespace abel {

PipelineResult run_pipeline(const AbelData& data, const SearchOptions& search) {
  PipelineResult out;
  out.report = singular_locus(data);
  out.sigma_off_diagonal = out.report.off_diagonal_sigma().size();
  if (!out.report.solvable) {
    out.verdict.witness = "singular locus is not solvable";
    return out;
  }
  out.sequence = search_minimal_symmetric(data, out.report, search);
  if (out.sequence) out.verdict = verify(data, out.report, *out.sequence);
  return out;
}

void validate(const ScanOptions& options) {
  if (options.vertices < 2 || options.vertices > kMaxEnumerationVertices) {
    throw Error(ErrorKind::BadIndex, "--vertices must be in 2.." + std::to_string(kMaxEnumerationVertices));
  }
  if (options.max_edges < options.vertices - 1) throw Error(ErrorKind::BadIndex, "--max-edges must be at least p-1");
  if (options.denominator < 1) throw Error(ErrorKind::BadIndex, "--denominator must be positive");
  if (options.bound < 0) throw Error(ErrorKind::BadIndex, "--bound must be nonnegative");
}

std::uint64_t instance_seed(std::uint64_t master, std::size_t index) {
  // splitmix64 of master + index
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Uniform draw from [lo, hi] by rejection, so the stream does not depend on
// the standard library's distribution implementation.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::vector<Edge> random_tree(std::mt19937_64& rng, int p) {
  if (p == 2) return {{0, 1}};
  std::vector<int> code(static_cast<std::size_t>(p - 2));
  for (auto& x : code) x = static_cast<int>(draw(rng, 0, p - 1));
  std::vector<int> degree(static_cast<std::size_t>(p), 1);
  for (int x : code) ++degree[x];
  std::vector<Edge> edges;
  for (int x : code) {
    const int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    --degree[leaf];
    --degree[x];
  }
  std::vector<int> last;
  for (int i = 0; i < p; ++i) {
    if (degree[i] == 1) last.push_back(i);
  }
  edges.push_back({last[0], last[1]});
  return edges;
}

}  // namespace

AbelDataDocument generate_instance(const ScanOptions& options, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int p = options.vertices;
  auto edges = random_tree(rng, p);
  const auto total = draw(rng, p - 1, options.max_edges);
  while (static_cast<std::int64_t>(edges.size()) < total) {
    const int a = static_cast<int>(draw(rng, 0, p - 1));
    int b = static_cast<int>(draw(rng, 0, p - 2));
    if (b >= a) ++b;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  const auto graph = DualGraph::from_edges(p, edges);

  const std::int64_t D = options.denominator;
  const std::int64_t limit = options.bound * D;
  Polarization e(static_cast<std::size_t>(p), Rational(0));
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::int64_t last = 0;
    Polarization trial(static_cast<std::size_t>(p));
    for (int i = 0; i + 1 < p; ++i) {
      const auto n = draw(rng, -limit, limit);
      last -= n;
      trial[i] = Rational(n, D);
    }
    if (last < -limit || last > limit) continue;
    trial[p - 1] = Rational(last, D);
    if (signature(graph, 0, trial).in_xi0) {
      e = std::move(trial);
      break;
    }
  }
  return make_document("scan-" + std::to_string(seed), AbelData(graph, e, fixed_q(p, 0), 0));
}

nlohmann::json scan_record(const AbelDataDocument& doc, const PipelineResult& result, std::int64_t micros,
                           std::uint64_t seed) {
  nlohmann::json j;
  j["document"] = to_json(doc);
  j["solvable"] = result.report.solvable;
  j["sigma_off_diagonal"] = result.sigma_off_diagonal;
  j["sequence"] = result.sequence ? to_json(*result.sequence) : nlohmann::json(nullptr);
  j["minimal"] = result.verdict.minimal && result.verdict.symmetric;
  j["micros"] = micros;
  j["seed"] = seed;
  return j;
}

ScanSummary run_scan(const ScanOptions& options, std::ostream& out) {
  validate(options);
  const std::size_t n = options.count;
  std::vector<std::optional<std::string>> lines(n);
  std::vector<char> failed(n, 0), unsolvable(n, 0);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto seed = instance_seed(options.seed, i);
      const auto doc = generate_instance(options, seed);
      const auto start = std::chrono::steady_clock::now();
      std::string line;
      bool bad_locus = false, bad_search = false;
      try {
        const auto result = run_pipeline(to_abel_data(doc));
        const auto micros =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
        line = scan_record(doc, result, micros, seed).dump();
        bad_locus = !result.report.solvable;
        bad_search = result.report.solvable && !(result.verdict.minimal && result.verdict.symmetric);
      } catch (const std::exception& ex) {
        // keep the stream going; the record carries the failure
        nlohmann::json j{{"document", to_json(doc)}, {"error", ex.what()}, {"seed", seed}};
        line = j.dump();
        bad_search = true;
      }
      std::lock_guard lock(mutex);
      unsolvable[i] = bad_locus;
      failed[i] = bad_search;
      lines[i] = std::move(line);
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  // single writer, in instance order
  ScanSummary summary;
  for (std::size_t i = 0; i < n; ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return lines[i].has_value(); });
    out << *lines[i] << '\n';
    out.flush();
    lines[i].reset();
    ++summary.instances;
    summary.unsolvable += unsolvable[i];
    summary.search_failures += failed[i];
  }
  return summary;
}

}  // namespace abel
