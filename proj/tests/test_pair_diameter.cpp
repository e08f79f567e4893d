#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "diam/baselines.hpp"
#include "diam/generators.hpp"
#include "diam/pair_diameter.hpp"
#include "test_util.hpp"

using diam::FsTree;
using diam::NodeId;
using diam::PairStrategy;
using diam::PointSet;
using diam::RunTrace;

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

}  // namespace

TEST_CASE("pair_upper_bound") {
  PointSet ps = PointSet::from_rows(2, {{0, 0}, {3, 4}});
  FsTree tree(ps);
  auto [l, r] = tree.split(tree.root());
  // Singleton sides have zero radius, so the bound collapses to the distance.
  CHECK(diam::pair_upper_bound(tree, l, r) == diam::distance(ps[0], ps[1]));
  CHECK(diam::pair_upper_bound(tree, l, l) == 0.0);
}

TEST_CASE("pair_upper_bound dominates every pair distance (exhaustive)") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    PointSet ps = testutil::random_points(rng, 24, 3, -2.0, 2.0);
    FsTree tree(ps);
    tree.split_fully();
    for (NodeId u = 0; u < tree.node_count(); ++u) {
      for (NodeId v = u; v < tree.node_count(); ++v) {
        const double m = diam::pair_upper_bound(tree, u, v);
        const auto& nu = tree.node(u);
        const auto& nv = tree.node(v);
        for (std::size_t a = nu.begin; a < nu.end; ++a)
          for (std::size_t b = nv.begin; b < nv.end; ++b)
            CHECK(diam::distance(tree.points()[a], tree.points()[b]) <= m * (1 + 1e-12) + 1e-300);
      }
    }
  }
}

TEST_CASE("should_prune") {
  CHECK(diam::should_prune(10.0, 9.5, 0.1));  // 10.0 <= 10.45
  CHECK_FALSE(diam::should_prune(10.0, 9.5, 0.0));
  CHECK(diam::should_prune((1.0 + 0.25) * 4.0, 4.0, 0.25));  // boundary prunes
  CHECK_THROWS_AS(diam::should_prune(1.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("update_estimate") {
  PointSet ps = PointSet::from_rows(2, {{0, 0}, {3, 4}});
  FsTree tree(ps);
  auto [l, r] = tree.split(tree.root());

  diam::EstimateState state;
  state.delta = 1.0;
  CHECK(diam::update_estimate(state, tree, l, r));
  CHECK(state.delta == 5.0);
  CHECK(state.best_first + state.best_second == 1);  // ids {0, 1}
  CHECK(state.distance_evaluations == 1);

  // Not larger: counters move, estimate does not.
  CHECK_FALSE(diam::update_estimate(state, tree, l, r));
  CHECK(state.delta == 5.0);
  CHECK(state.distance_evaluations == 2);
}

TEST_CASE("unit square diameter is the diagonal under every strategy") {
  PointSet square = PointSet::from_rows(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  for (auto strategy :
       {PairStrategy::Heap4Way, PairStrategy::HeapWspd, PairStrategy::FifoLevels}) {
    auto res = diam::approx_diameter(square, 0.0, strategy);
    CHECK(res.distance == std::sqrt(2.0));
    // One of the two diagonals.
    const bool diagonal =
        (res.first == 0 && res.second == 3) || (res.first == 1 && res.second == 2);
    CHECK(diagonal);
  }
}

TEST_CASE("eps=0 matches the brute-force oracle exactly across strategies") {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + rng() % 150;
    const std::size_t d = 2 + rng() % 3;
    PointSet ps = testutil::random_points(rng, n, d, -1.0, 1.0);
    const auto oracle = diam::brute_force_diameter(ps);
    for (auto strategy :
         {PairStrategy::Heap4Way, PairStrategy::HeapWspd, PairStrategy::FifoLevels}) {
      const auto res = diam::approx_diameter(ps, 0.0, strategy);
      CHECK(res.distance == oracle.distance);
      // Realized distance: recomputing from the reported ids reproduces it.
      CHECK(diam::distance(ps[res.first], ps[res.second]) == res.distance);
      CHECK(res.stats.pairs_created <= (2 * n - 1) * (2 * n - 1));
    }
  }
}

TEST_CASE("eps=0.1 lands within the one-sided band") {
  std::mt19937_64 rng(33);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 2 + rng() % 150;
    PointSet ps = testutil::random_points(rng, n, 3, -1.0, 1.0);
    const double oracle = diam::brute_force_diameter(ps).distance;
    for (auto strategy :
         {PairStrategy::Heap4Way, PairStrategy::HeapWspd, PairStrategy::FifoLevels}) {
      const auto res = diam::approx_diameter(ps, 0.1, strategy);
      CHECK(res.distance <= oracle);
      CHECK(res.distance >= 0.9 * oracle * (1 - 1e-12));
    }
  }
}

TEST_CASE("two points resolve with a couple of evaluations") {
  PointSet ps = PointSet::from_rows(3, {{0, 0, 0}, {1, 2, 2}});
  const auto res = diam::approx_diameter(ps, 0.0, PairStrategy::Heap4Way);
  CHECK(res.distance == 3.0);
  CHECK(res.first == 0);
  CHECK(res.second == 1);
  CHECK(res.stats.distance_evaluations <= 2);  // seed pair, then the root self-pair prunes
  CHECK(res.stats.pairs_created == 1);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(diam::approx_diameter(PointSet(2), 0.0, PairStrategy::Heap4Way),
                  std::invalid_argument);
  PointSet one = PointSet::from_rows(2, {{4, 4}});
  const auto res = diam::approx_diameter(one, 0.0, PairStrategy::Heap4Way);
  CHECK(res.distance == 0.0);
  CHECK(res.first == 0);
  CHECK(res.second == 0);

  PointSet same = PointSet::from_rows(2, {{1, 1}, {1, 1}, {1, 1}});
  const auto dup = diam::approx_diameter(same, 0.0, PairStrategy::HeapWspd);
  CHECK(dup.distance == 0.0);

  PointSet ps = PointSet::from_rows(2, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(diam::approx_diameter(ps, -0.5, PairStrategy::Heap4Way),
                  std::invalid_argument);
}

namespace {

struct TraceSummary {
  std::vector<double> handled_m;
  std::vector<double> estimates;
  std::vector<std::pair<NodeId, NodeId>> created;
  std::vector<double> pruned_m;
};

TraceSummary summarize(const RunTrace& trace) {
  TraceSummary s;
  for (const auto& event : trace.events) {
    std::visit(Overload{
                   [&](const RunTrace::PairHandled& e) { s.handled_m.push_back(e.m); },
                   [&](const RunTrace::EstimateUpdated& e) { s.estimates.push_back(e.value); },
                   [&](const RunTrace::PairCreated& e) { s.created.push_back({e.u, e.v}); },
                   [&](const RunTrace::PairPruned& e) { s.pruned_m.push_back(e.m); },
                   [](const auto&) {},
               },
               event);
  }
  return s;
}

}  // namespace

TEST_CASE("trace invariants: heap monotonicity, unique pairs, rising estimates") {
  std::mt19937_64 rng(34);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = 2 + rng() % 60;
    PointSet ps = testutil::random_points(rng, n, 3, 0.0, 1.0);
    const double eps = (iter % 3 == 0) ? 0.0 : (iter % 3 == 1 ? 0.01 : 0.1);
    for (auto strategy : {PairStrategy::Heap4Way, PairStrategy::HeapWspd}) {
      RunTrace trace;
      const auto res = diam::approx_diameter(ps, eps, strategy, &trace);
      const TraceSummary s = summarize(trace);

      for (std::size_t i = 1; i < s.handled_m.size(); ++i)
        CHECK(s.handled_m[i] <= s.handled_m[i - 1]);

      for (std::size_t i = 1; i < s.estimates.size(); ++i)
        CHECK(s.estimates[i] > s.estimates[i - 1]);

      std::set<std::pair<NodeId, NodeId>> seen;
      for (const auto& pair : s.created) CHECK(seen.insert(pair).second);

      // Every pruned pair was provably within (1+eps) of the final estimate.
      for (double m : s.pruned_m) CHECK(m <= (1 + eps) * res.distance * (1 + 1e-12));
    }
  }
}

TEST_CASE("fifo strategy also never duplicates pairs") {
  std::mt19937_64 rng(35);
  PointSet ps = testutil::random_points(rng, 80, 3, 0.0, 1.0);
  RunTrace trace;
  diam::approx_diameter(ps, 0.0, PairStrategy::FifoLevels, &trace);
  const TraceSummary s = summarize(trace);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& pair : s.created) CHECK(seen.insert(pair).second);
}

TEST_CASE("pair_angle_bound") {
  PointSet ps = PointSet::from_rows(2, {{0, 0}, {9, 0}});
  FsTree tree(ps);
  auto [l, r] = tree.split(tree.root());
  CHECK(diam::pair_angle_bound(tree, l, r) == 0.0);  // singletons
  CHECK(diam::pair_angle_bound(tree, l, l) == doctest::Approx(std::acos(-1.0)));
  CHECK(diam::pair_angle_bound(tree, tree.root(), tree.root()) ==
        doctest::Approx(std::acos(-1.0)));  // coincident centers
}

TEST_CASE("fs_directions: two points, collinear sets, random band") {
  PointSet two = PointSet::from_rows(3, {{0, 1, 0}, {5, 1, 0}});
  const auto res = diam::fs_directions_diameter(two, 0.25);
  CHECK(res.distance == 5.0);

  // Collinear points project losslessly along their own line.
  for (double eps : {0.01, 0.5, 2.0}) {
    PointSet line(3);
    for (int i = 0; i <= 20; ++i) {
      const double t = static_cast<double>(i) / 20.0;
      line.add({t * 2.0, t * 1.0, t * 0.5});
    }
    const auto got = diam::fs_directions_diameter(line, eps);
    CHECK(got.distance == diam::distance(line[0], line[20]));
  }

  std::mt19937_64 rng(36);
  PointSet cloud = testutil::random_points(rng, 500, 3, -1.0, 1.0);
  const double oracle = diam::brute_force_diameter(cloud).distance;
  const auto approx = diam::fs_directions_diameter(cloud, 0.1);
  CHECK(approx.distance <= oracle);
  CHECK(approx.distance >= 0.9 * oracle * (1 - 1e-12));

  CHECK_THROWS_AS(diam::fs_directions_diameter(two, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(diam::fs_directions_diameter(two, -1.0), std::invalid_argument);
}

TEST_CASE("fs_directions stays sound across eps values") {
  std::mt19937_64 rng(37);
  for (double eps : {0.01, 0.1, 0.5, 1.0}) {
    for (int iter = 0; iter < 10; ++iter) {
      const std::size_t n = 2 + rng() % 120;
      PointSet ps = testutil::random_points(rng, n, 3, -1.0, 1.0);
      const double oracle = diam::brute_force_diameter(ps).distance;
      const auto res = diam::fs_directions_diameter(ps, eps);
      CHECK(res.distance <= oracle);
      CHECK(res.distance >= (1 - eps) * oracle * (1 - 1e-12));
      CHECK(diam::distance(ps[res.first], ps[res.second]) == res.distance);
    }
  }
}

TEST_CASE("strategies agree on generator families at eps=0") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointSet sphere = diam::gen_sphere(150, seed);
    PointSet ellipse = diam::gen_ellipse(144, 2.0, 1.0);
    for (const PointSet* ps : {&sphere, &ellipse}) {
      const double oracle = diam::brute_force_diameter(*ps).distance;
      for (auto strategy :
           {PairStrategy::Heap4Way, PairStrategy::HeapWspd, PairStrategy::FifoLevels})
        CHECK(diam::approx_diameter(*ps, 0.0, strategy).distance == oracle);
    }
  }
}
