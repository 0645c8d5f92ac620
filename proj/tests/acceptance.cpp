// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run everything
//   acceptance --only N   run criterion N
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "abel/blowup.hpp"
#include "abel/scan.hpp"
#include "abel/strata.hpp"
#include "fixtures.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Solvable, and the given sequence verifies as resolving minimally and symmetrically.
void expect_minimal(Outcome& o, const std::string& document, const std::string& sequence, double limit) {
  const auto start = Clock::now();
  const auto data = fixtures::load(document);
  const auto report = abel::singular_locus(data);
  const auto s = abel::load_sequence(fixtures::sequence_path(sequence), data.graph().vertex_count());
  const auto verdict = abel::verify(data, report, s);
  const double took = seconds_since(start);
  if (!report.solvable) o.fail(document + " not solvable");
  if (!verdict.minimal || !verdict.symmetric) o.fail(document + " " + s.to_string() + ": " + verdict.witness);
  if (took > limit) o.fail(document + " took " + std::to_string(took) + " s");
}

Outcome first_example() {
  Outcome o;
  expect_minimal(o, "four-vertex", "four-vertex", 10);
  expect_minimal(o, "four-vertex-shifted", "four-vertex", 10);
  expect_minimal(o, "four-vertex-opposite", "four-vertex-opposite", 10);
  if (o.pass) o.detail = "three polarizations solvable, reference sequences minimal";
  return o;
}

Outcome circular() {
  Outcome o;
  for (int p = 2; p <= 5; ++p) {
    const auto name = "circular-" + std::to_string(p);
    expect_minimal(o, name, name, 60);
  }
  if (o.pass) o.detail = "p = 2..5 sequences of 1, 3, 6 and 10 steps minimal";
  return o;
}

Outcome second_example() {
  Outcome o;
  const auto start = Clock::now();
  expect_minimal(o, "eleven-edge", "eleven-edge", 30);
  expect_minimal(o, "eleven-edge-half", "eleven-edge-half", 30);
  expect_minimal(o, "eleven-edge-unit", "eleven-edge-unit", 30);
  if (seconds_since(start) > 30) o.fail("total time over 30 s");
  if (o.pass) o.detail = "empty, ({1},{1}) and ({1},{1}),({4},{4}) minimal";
  return o;
}

Outcome oracle_representatives() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int instances = 0;
  for (; instances < 250; ++instances) {
    const int p = fixtures::uniform(rng, 2, 5);
    const auto g = fixtures::random_graph(rng, p, 7);
    const int v = fixtures::uniform(rng, 0, p - 1);
    const auto e = fixtures::random_xi0(rng, g, v, 2, 1);
    const auto d = fixtures::random_degree(rng, p, 4, 0);
    const auto rep = abel::quasistable_representative(g, e, v, d);
    const auto survivors = oracle::quasistable_in_class(g.intersection_matrix(), e, v, d);
    if (survivors.size() != 1) {
      o.fail("instance " + std::to_string(instances) + ": " + std::to_string(survivors.size()) + " survivors");
    } else if (survivors[0].degree != rep.degree || survivors[0].twist != rep.twist) {
      o.fail("instance " + std::to_string(instances) + ": fixpoint differs from the oracle");
    }
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances agree";
  return o;
}

Outcome oracle_subsets() {
  Outcome o;
  std::mt19937_64 rng(2025);
  int plain = 0, subdivided = 0;
  for (; plain < 250; ++plain) {
    const int p = fixtures::uniform(rng, 2, 5);
    const auto g = fixtures::random_graph(rng, p, 7);
    const int v = fixtures::uniform(rng, 0, p - 1);
    const auto e = fixtures::random_xi0(rng, g, v, 2, 1);
    auto d = fixtures::random_degree(rng, p, 4, 0);
    for (int round = 0; round < 2; ++round) {
      if (round == 1) d = abel::quasistable_representative(g, e, v, d).degree;
      if (abel::is_quasistable(g, e, v, d) != oracle::quasistable(g.intersection_matrix(), e, v, d)) {
        o.fail("plain instance " + std::to_string(plain) + " disagrees");
      }
    }
  }
  while (subdivided < 30) {
    const int p = fixtures::uniform(rng, 2, 4);
    const auto g = fixtures::random_graph(rng, p, (18 - p) / 2);
    if (p + 2 * g.edge_count() > 18) continue;
    const auto gs = abel::subdivide(g, 2);
    const auto full = gs.as_graph();
    const int v = fixtures::uniform(rng, 0, p - 1);
    const auto e = fixtures::random_xi0(rng, g, v, 2, 1);
    auto extended = e;
    extended.resize(static_cast<std::size_t>(gs.vertex_count()), abel::Rational(0));
    auto d = fixtures::random_degree(rng, gs.vertex_count(), 2, 0);
    for (int round = 0; round < 2; ++round) {
      if (round == 1) d = abel::quasistable_representative(full, extended, v, d).degree;
      const bool brute = oracle::quasistable(full.intersection_matrix(), extended, v, d);
      if (abel::is_quasistable(full, extended, v, d) != brute || abel::is_quasistable_subdivided(gs, e, v, d) != brute) {
        o.fail("subdivided instance " + std::to_string(subdivided) + " disagrees");
      }
    }
    ++subdivided;
  }
  if (o.pass) {
    o.detail = std::to_string(plain) + " graphs and " + std::to_string(subdivided) +
               " twice-subdivided graphs agree with all-subsets enumeration";
  }
  return o;
}

Outcome delta_identities() {
  Outcome o;
  std::vector<abel::AbelData> corpus;
  for (const auto& name : fixtures::all_documents()) corpus.push_back(fixtures::load(name));
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 50; ++i) {
    const int p = fixtures::uniform(rng, 2, 5);
    const auto g = fixtures::random_graph(rng, p, 7);
    const int v = fixtures::uniform(rng, 0, p - 1);
    corpus.emplace_back(g, fixtures::random_xi0(rng, g, v, 2, 1), abel::fixed_q(p, v), v);
  }

  std::size_t identity_checks = 0, shifts = 0, literal_mismatches = 0, coboundary_mismatches = 0, joint_mismatches = 0;
  for (const auto& data : corpus) {
    const auto& g = data.graph();
    const int p = g.vertex_count();
    const abel::CorrectionTable t(data);
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < p; ++k)
        for (int m = 0; m < p; ++m)
          for (int n = 0; n < p; ++n) {
            ++identity_checks;
            if (t.delta(i, k, m, n) != t.delta(k, i, m, n) || t.delta(i, k, m, n) != -t.delta(i, k, n, m) ||
                t.delta(i, k, m, m) != 0) {
              o.fail("delta identity fails");
            }
          }

    for (int trial = 0; trial < 20; ++trial, ++shifts) {
      std::vector<std::int64_t> a(p);
      for (auto& x : a) x = fixtures::uniform(rng, -3, 3);
      auto e = data.e();
      auto q = data.q();
      for (int m = 0; m < p; ++m) {
        const auto c = g.vertex_flow(m);
        for (int j = 0; j < p; ++j) {
          e[j] += a[m] * c[j];
          q[j] += a[m] * c[j];
        }
      }
      const abel::CorrectionTable same_q(abel::AbelData(g, e, data.q(), data.v()));
      const abel::CorrectionTable joint(abel::AbelData(g, e, q, data.v()));
      if (!(same_q == t)) ++literal_mismatches;
      if (!(joint == t)) ++joint_mismatches;
      for (int i = 0; i < p; ++i)
        for (int k = 0; k < p; ++k)
          for (int m = 0; m < p; ++m)
            for (int n = 0; n < p; ++n) {
              if (same_q.delta(i, k, m, n) != t.delta(i, k, m, n) - (a[m] - a[n])) ++coboundary_mismatches;
            }
    }
  }
  if (coboundary_mismatches || joint_mismatches) o.fail("shifted tables do not follow the coboundary rule");
  if (literal_mismatches) {
    o.fail("tables with q fixed differ after e -> e + sum a_i c_i in " + std::to_string(literal_mismatches) + " of " +
           std::to_string(shifts) + " shifts; every entry moves by exactly -(a_m - a_n), and tables match when q " +
           "shifts with e");
  }
  if (o.pass) o.detail = std::to_string(identity_checks) + " identity checks, " + std::to_string(shifts) + " shifts";
  else o.detail += "; " + std::to_string(identity_checks) + " identity checks pass";
  return o;
}

Outcome reduction_properties() {
  Outcome o;
  std::mt19937_64 rng(2027);
  int vectors = 0;
  for (; vectors < 500; ++vectors) {
    const int p = fixtures::uniform(rng, 2, 4);
    const auto g = fixtures::random_graph(rng, p, 5);
    const auto gs = abel::subdivide(g, 2);
    abel::Multidegree d(static_cast<std::size_t>(gs.vertex_count()));
    for (auto& x : d) x = fixtures::uniform(rng, -5, 5);
    const auto r = abel::reduce(gs, d);
    if (abel::reduce(gs, r) != r) o.fail("not idempotent");
    if (abel::total_degree(r) != abel::total_degree(d)) o.fail("degree changed");
    abel::Multidegree ends(static_cast<std::size_t>(p), 0);
    for (int t = 0; t < g.edge_count(); ++t) {
      oracle::Vec diff;
      int minus_ones = 0;
      for (int j = 0; j < 2; ++j) {
        const auto w = gs.chain_vertex_id(t, j);
        diff.push_back(d[w] - r[w]);
        if (r[w] != 0 && r[w] != -1) o.fail("chain value outside {0,-1}");
        minus_ones += r[w] == -1;
      }
      if (minus_ones > 1) o.fail("chain with two -1 entries");
      const auto b = oracle::chain_twist(diff);
      if (!b) {
        o.fail("difference outside the exceptional twist lattice");
        continue;
      }
      ends[g.edge(t).a] += (*b)[0];
      ends[g.edge(t).b] += (*b)[1];
    }
    for (int i = 0; i < p; ++i) {
      if (d[i] - r[i] != ends[i]) o.fail("spill onto original vertices does not match the chain twists");
    }
  }
  if (o.pass) o.detail = std::to_string(vectors) + " random vectors";
  return o;
}

Outcome search_soundness() {
  Outcome o;
  int searched = 0;
  for (const auto& name : fixtures::all_documents()) {
    const auto data = fixtures::load(name);
    const auto report = abel::singular_locus(data);
    const auto found = abel::search_minimal_symmetric(data, report);
    if (!found) {
      o.fail(name + ": nothing within default max_len");
      continue;
    }
    const auto verdict = abel::verify(data, report, *found);
    if (!verdict.resolves || !verdict.minimal || !verdict.symmetric) o.fail(name + ": " + verdict.witness);
    ++searched;
  }
  if (o.pass) o.detail = std::to_string(searched) + " fixtures searched and verified";
  return o;
}

Outcome scan_smoke() {
  Outcome o;
  abel::ScanOptions options;
  options.vertices = 4;
  options.max_edges = 7;
  options.count = 200;
  options.seed = 20240601;
  options.jobs = 4;
  std::ostringstream first, second;
  const auto a = abel::run_scan(options, first);
  options.jobs = 1;
  const auto b = abel::run_scan(options, second);
  if (a.instances != 200) o.fail("only " + std::to_string(a.instances) + " instances");
  if (a.unsolvable) o.fail(std::to_string(a.unsolvable) + " unsolvable instances");
  if (a.search_failures) o.fail(std::to_string(a.search_failures) + " search failures");
  auto strip = [](const std::string& text) {
    std::string out;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      auto j = nlohmann::json::parse(line);
      j.erase("micros");
      out += j.dump() + "\n";
    }
    return out;
  };
  if (strip(first.str()) != strip(second.str())) o.fail("rerun differs");
  if (o.pass) o.detail = "200 instances at p = 4, all solved; rerun identical without timing";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"four-vertex example", first_example},
      {"circular graphs", circular},
      {"second four-vertex example", second_example},
      {"representatives match the class oracle", oracle_representatives},
      {"connected subsets match all subsets", oracle_subsets},
      {"delta identities and twister shifts", delta_identities},
      {"reduction properties", reduction_properties},
      {"search soundness", search_soundness},
      {"scan smoke", scan_smoke},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != static_cast<int>(i + 1)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << " ("
              << static_cast<int>(seconds_since(start) * 1000) << " ms)" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
