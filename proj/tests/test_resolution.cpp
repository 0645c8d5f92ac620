#include "doctest.h"

#include <algorithm>

#include "abel/errors.hpp"
#include "abel/resolution.hpp"
#include "fixtures.hpp"

using abel::EdgePair;
using abel::Multidegree;
using abel::PairChoice;

namespace {

abel::AbelData banana_data() {
  return abel::AbelData(abel::DualGraph::from_intersection_matrix({{-2, 2}, {2, -2}}),
                        abel::Polarization(2, abel::Rational(0)), {2, 0}, 0);
}

// Checks the reduction contract on one vector: canonical chains, same total,
// idempotent, and the difference is a sum of twists at exceptional vertices.
void check_reduction(const abel::SubdividedGraph& gs, const Multidegree& d) {
  const auto r = abel::reduce(gs, d);
  CHECK(abel::total_degree(r) == abel::total_degree(d));
  CHECK(abel::reduce(gs, r) == r);
  const auto& g = gs.base();
  const int depth = gs.depth();
  Multidegree ends(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int t = 0; t < g.edge_count(); ++t) {
    oracle::Vec interior, diff;
    int minus_ones = 0;
    for (int j = 0; j < depth; ++j) {
      const auto w = gs.chain_vertex_id(t, j);
      interior.push_back(r[w]);
      diff.push_back(d[w] - r[w]);
      CHECK((r[w] == 0 || r[w] == -1));
      minus_ones += r[w] == -1;
    }
    CHECK(minus_ones <= 1);
    const auto b = oracle::chain_twist(diff);
    REQUIRE(b.has_value());
    ends[g.edge(t).a] += (*b)[0];
    ends[g.edge(t).b] += (*b)[depth - 1];
  }
  for (int i = 0; i < g.vertex_count(); ++i) CHECK(d[i] - r[i] == ends[i]);
}

}  // namespace

TEST_SUITE("resolution") {
  TEST_CASE("choices and mirrors") {
    const auto g = fixtures::load("four-vertex").graph();
    const EdgePair pair{0, 1};  // (1-2, 1-3)
    const auto c = abel::make_choice(g, pair, 0, 0);
    CHECK(abel::mirror(g, c) == PairChoice{pair, 1, 2});
    CHECK(abel::mirror(g, abel::mirror(g, c)) == c);
    CHECK(abel::equivalent(g, c, abel::mirror(g, c)));
    CHECK_FALSE(abel::equivalent(g, c, abel::make_choice(g, pair, 0, 2)));
    CHECK_THROWS_AS(abel::make_choice(g, pair, 3, 0), abel::Error);
    CHECK_THROWS_AS(abel::make_choice(g, {2, 2}, 1, 2), abel::Error);
    CHECK(abel::mirror(g, abel::make_choice(g, {2, 2}, 1, 1)) == PairChoice{{2, 2}, 2, 2});
    CHECK(abel::candidate_choices(g, pair).size() == 4);
    CHECK(abel::candidate_choices(g, {3, 3}).size() == 2);
  }

  TEST_CASE("admissibility respects mirror classes") {
    for (const auto& name : fixtures::all_documents()) {
      CAPTURE(name);
      const auto data = fixtures::load(name);
      const abel::CorrectionTable t(data);
      const auto& g = data.graph();
      for (int r = 0; r < g.edge_count(); ++r) {
        for (int s = 0; s < g.edge_count(); ++s) {
          for (const auto& c : abel::candidate_choices(g, {r, s})) {
            CHECK(abel::admissible_at(data, t, c) == abel::admissible_at(data, t, abel::mirror(g, c)));
          }
        }
      }
    }
  }

  TEST_CASE("example pair (1-2, 1-3) keeps one class") {
    const auto data = fixtures::load("four-vertex");
    const auto report = abel::singular_locus(data);
    const auto& q = report.qtable.at({0, 1});
    REQUIRE(q.size() == 2);
    CHECK(abel::equivalent(data.graph(), q[0], q[1]));
    CHECK(report.in_sigma({0, 1}));
  }

  TEST_CASE("banana diagonal s-function counts both slots") {
    const auto data = banana_data();
    const abel::CorrectionTable t(data);
    const auto gs = abel::subdivide(data.graph(), 2);
    const PairChoice c{{0, 0}, 0, 0};
    const auto w = gs.chain_vertex_id(0, 0);  // next to vertex 1
    const auto literal = abel::build_s_functions(data, t, gs, c, abel::EpsilonRule::Literal);
    const auto indicator = abel::build_s_functions(data, t, gs, c, abel::EpsilonRule::Indicator);
    CHECK(literal.s1[w] == -2);
    CHECK(indicator.s1[w] == -1);
    CHECK(literal.s1[0] == 2);
    CHECK(literal.s1[1] == 0);
  }

  TEST_CASE("s-functions sum to q minus the epsilon corrections") {
    for (const auto& name : fixtures::all_documents()) {
      CAPTURE(name);
      const auto data = fixtures::load(name);
      const abel::CorrectionTable t(data);
      const auto& g = data.graph();
      const auto gs = abel::subdivide(g, 2);
      for (int r = 0; r < g.edge_count(); ++r) {
        for (int s = 0; s < g.edge_count(); ++s) {
          for (const auto& c : abel::candidate_choices(g, {r, s})) {
            const auto f = abel::build_s_functions(data, t, gs, c);
            const auto m = abel::mirror(g, c);
            // each chain contributes delta(.,.,a,b) + delta(.,.,b,a) = 0 per term,
            // so only the epsilon counts survive
            std::int64_t eps1 = 0, eps2 = 0;
            for (int w = g.vertex_count(); w < gs.vertex_count(); ++w) {
              const auto cv = gs.chain_index(w);
              eps1 += (c.end1 == cv.nearer_end && r == cv.edge) + (c.end2 == cv.nearer_end && s == cv.edge);
              eps2 += (m.end1 == cv.nearer_end && r == cv.edge) + (m.end2 == cv.nearer_end && s == cv.edge);
            }
            CHECK(abel::total_degree(f.s1) == abel::total_degree(data.q()) - eps1);
            CHECK(abel::total_degree(f.s2) == abel::total_degree(data.q()) - eps2);
            CHECK(eps1 == 2);
          }
        }
      }
    }
  }

  TEST_CASE("reduction of a single chain") {
    const auto g = abel::DualGraph::from_edges(2, {{0, 1}});
    const auto gs = abel::subdivide(g, 2);
    CHECK(abel::reduce(gs, {0, 0, 0, 0}) == Multidegree{0, 0, 0, 0});
    CHECK(abel::reduce(gs, {0, 0, -2, 1}) == Multidegree{-1, 0, 0, 0});
    CHECK(abel::reduce(gs, {0, 0, -1, 0}) == Multidegree{0, 0, -1, 0});
    CHECK(abel::reduce(gs, {0, 0, 0, -1}) == Multidegree{0, 0, 0, -1});
    CHECK(abel::reduce(gs, {0, 0, 1, 0}) == Multidegree{1, 1, 0, -1});
  }

  TEST_CASE("reduction contract on random chains") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
      const int p = fixtures::uniform(rng, 2, 4);
      const auto g = fixtures::random_graph(rng, p, 5);
      const auto gs = abel::subdivide(g, fixtures::uniform(rng, 1, 4));
      Multidegree d(static_cast<std::size_t>(gs.vertex_count()));
      for (auto& x : d) x = fixtures::uniform(rng, -5, 5);
      check_reduction(gs, d);
    }
  }

  TEST_CASE("worked examples are solvable with the expected singular loci") {
    for (const auto& f : fixtures::worked_examples()) {
      CAPTURE(f.document);
      const auto report = abel::singular_locus(fixtures::load(f.document));
      CHECK(report.solvable);
      CHECK(report.off_diagonal_sigma().size() == f.sigma_off_diagonal);
    }
  }

  TEST_CASE("singular locus of the 4-vertex example") {
    const auto data = fixtures::load("four-vertex");
    const auto& g = data.graph();
    const auto report = abel::singular_locus(data);
    for (int r = 0; r < g.edge_count(); ++r) {
      CHECK(report.in_sigma({r, r}));
      for (int s = 0; s < g.edge_count(); ++s) {
        if (r == s) continue;
        const auto& a = g.edge(r);
        const auto& b = g.edge(s);
        const bool at_1 = a.has_end(0) && b.has_end(0);
        const bool at_4 = a.has_end(3) && b.has_end(3);
        CHECK(report.in_sigma({r, s}) == (at_1 || at_4));
        const auto size = report.qtable.at({r, s}).size();
        CHECK((size == 2 || size == 4));
        if (size == 4) CHECK_FALSE(report.in_sigma({r, s}));
      }
    }
  }

  TEST_CASE("single edge and empty-sigma example") {
    const auto single = abel::singular_locus(fixtures::load("single-edge"));
    CHECK(single.solvable);
    CHECK(single.sigma == std::vector<EdgePair>{{0, 0}});
    const auto third = abel::singular_locus(fixtures::load("eleven-edge"));
    CHECK(third.solvable);
    CHECK(third.off_diagonal_sigma().empty());
  }

  TEST_CASE("sigma is symmetric under swapping the pair on the corpus") {
    for (const auto& name : fixtures::all_documents()) {
      CAPTURE(name);
      const auto report = abel::singular_locus(fixtures::load(name));
      for (const auto& pair : report.sigma) CHECK(report.in_sigma({pair.second, pair.first}));
    }
  }

  TEST_CASE("capping epsilon at one breaks the degree balance") {
    // On a diagonal pair the literal count is 2, which keeps sum s1 = sum q - 2
    // = sum e. Capping at 1 leaves a function of the wrong total.
    const auto data = fixtures::load("four-vertex");
    const abel::CorrectionTable t(data);
    const auto gs = abel::subdivide(data.graph(), 2);
    const PairChoice c{{0, 0}, 0, 0};
    const auto capped = abel::build_s_functions(data, t, gs, c, abel::EpsilonRule::Indicator);
    CHECK(abel::total_degree(capped.s1) == abel::total_degree(data.q()) - 1);
    CHECK_THROWS_AS(abel::singular_locus(data, {abel::EpsilonRule::Indicator}), abel::Error);
    // off the diagonal both readings agree
    const PairChoice off{{0, 1}, 0, 0};
    CHECK(abel::build_s_functions(data, t, gs, off, abel::EpsilonRule::Indicator).s1 ==
          abel::build_s_functions(data, t, gs, off, abel::EpsilonRule::Literal).s1);
  }
}
