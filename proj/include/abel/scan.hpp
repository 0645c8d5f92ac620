#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>

#include "json.hpp"

#include "abel/blowup.hpp"
#include "abel/document.hpp"
#include "abel/resolution.hpp"

namespace abel {

/// Singular locus, search and verification in one call.
struct PipelineResult {
  SingularLocusReport report;
  std::size_t sigma_off_diagonal = 0;
  /// Present when a sequence was found; empty optional on unsolvable data too.
  std::optional<BlowupSequence> sequence;
  Verdict verdict;
};

PipelineResult run_pipeline(const AbelData& data, const SearchOptions& search = {});

struct ScanOptions {
  int vertices = 3;
  int max_edges = 4;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::int64_t denominator = 2;
  std::int64_t bound = 1;
  unsigned jobs = 1;
};

/// Throws BadIndex when the options cannot produce a connected graph.
void validate(const ScanOptions& options);

/// Seed of instance `index`, derived from the master seed.
std::uint64_t instance_seed(std::uint64_t master, std::size_t index);

/// Deterministic instance: a uniform spanning tree (Pruefer code), then extra
/// uniformly random edges up to an edge count drawn from [p-1, max_edges],
/// then a polarization on the (D, B) grid inside Xi_0 (zero if rejection
/// sampling gives up). v = 1 and q = 2 at v.
AbelDataDocument generate_instance(const ScanOptions& options, std::uint64_t seed);

/// One line of the scan output.
nlohmann::json scan_record(const AbelDataDocument& doc, const PipelineResult& result, std::int64_t micros,
                           std::uint64_t seed);

struct ScanSummary {
  std::size_t instances = 0;
  std::size_t unsolvable = 0;
  std::size_t search_failures = 0;
};

/// Runs every instance on `jobs` workers and writes records to `out` in
/// instance order, one line each.
ScanSummary run_scan(const ScanOptions& options, std::ostream& out);

}  // namespace abel
