#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "diam/fair_split_tree.hpp"
#include "test_util.hpp"

using diam::FsTree;
using diam::NodeId;
using diam::PointSet;

TEST_CASE("root construction") {
  PointSet corners = PointSet::from_rows(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  FsTree tree(corners);
  CHECK(tree.node_count() == 1);
  const auto& root = tree.node(tree.root());
  CHECK(root.box.lo() == std::vector<double>{0, 0});
  CHECK(root.box.hi() == std::vector<double>{1, 1});
  CHECK(root.radius == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK(root.count() == 4);

  PointSet single = PointSet::from_rows(3, {{2, 2, 2}});
  FsTree leaf(single);
  CHECK(leaf.node(leaf.root()).radius == 0.0);
  CHECK_FALSE(leaf.node(leaf.root()).splittable());

  CHECK_THROWS_AS(FsTree(PointSet(2)), std::invalid_argument);
}

TEST_CASE("split partitions at the midpoint of the longest edge") {
  PointSet line = PointSet::from_rows(2, {{0, 0}, {0.4, 0}, {1, 0}});
  FsTree tree(line);
  auto [left, right] = tree.split(tree.root());
  const auto& l = tree.node(left);
  const auto& r = tree.node(right);
  CHECK(l.count() == 2);
  CHECK(r.count() == 1);
  CHECK(l.box.lo()[0] == 0.0);
  CHECK(l.box.hi()[0] == 0.4);  // tight, not the midpoint
  CHECK(r.box.lo()[0] == 1.0);

  // Splitting again is a no-op returning the same children.
  auto again = tree.split(tree.root());
  CHECK(again.first == left);
  CHECK(again.second == right);
  CHECK(tree.node_count() == 3);
}

TEST_CASE("midpoint-coincident points go right") {
  PointSet ps = PointSet::from_rows(1, {{0}, {0.5}, {1}});
  FsTree tree(ps);
  auto [left, right] = tree.split(tree.root());
  CHECK(tree.node(left).count() == 1);   // {0}
  CHECK(tree.node(right).count() == 2);  // {0.5, 1}
}

TEST_CASE("degenerate leaves cannot split") {
  PointSet dupes = PointSet::from_rows(2, {{1, 1}, {1, 1}});
  FsTree tree(dupes);
  CHECK_FALSE(tree.node(tree.root()).splittable());
  CHECK_THROWS_AS(tree.split(tree.root()), std::invalid_argument);
}

TEST_CASE("split survives adjacent-double extents") {
  const double lo = 1.0;
  const double hi = std::nextafter(lo, 2.0);
  PointSet ps = PointSet::from_rows(1, {{lo}, {lo}, {hi}});
  FsTree tree(ps);
  auto [left, right] = tree.split(tree.root());
  CHECK(tree.node(left).count() + tree.node(right).count() == 3);
  CHECK(tree.node(left).count() >= 1);
  CHECK(tree.node(right).count() >= 1);
}

namespace {

void check_node_invariants(const FsTree& tree, NodeId id) {
  const auto& n = tree.node(id);
  // Box is tight over the node's rows.
  diam::Aabb tight = diam::bounding_box(tree.points(), n.begin, n.end);
  CHECK(tight.lo() == n.box.lo());
  CHECK(tight.hi() == n.box.hi());
  if (!n.is_split()) return;
  const auto& l = tree.node(n.left);
  const auto& r = tree.node(n.right);
  CHECK(l.begin == n.begin);
  CHECK(l.end == r.begin);
  CHECK(r.end == n.end);
  CHECK(l.count() >= 1);
  CHECK(r.count() >= 1);
  for (std::size_t a = 0; a < tree.points().dim(); ++a) {
    CHECK(l.box.lo()[a] >= n.box.lo()[a]);
    CHECK(l.box.hi()[a] <= n.box.hi()[a]);
    CHECK(r.box.lo()[a] >= n.box.lo()[a]);
    CHECK(r.box.hi()[a] <= n.box.hi()[a]);
  }
  CHECK(l.longest_extent() <= n.longest_extent());
  CHECK(r.longest_extent() <= n.longest_extent());
  check_node_invariants(tree, n.left);
  check_node_invariants(tree, n.right);
}

// Along every root-to-leaf path, d consecutive splits at least halve the
// longest edge (within absolute slack for rounding).
void check_lmax_halving(const FsTree& tree, NodeId id, std::vector<double>& path) {
  const auto& n = tree.node(id);
  path.push_back(n.longest_extent());
  const std::size_t d = tree.points().dim();
  if (path.size() > d) {
    const double ancestor = path[path.size() - 1 - d];
    CHECK(n.longest_extent() <= ancestor / 2.0 + 1e-12);
  }
  if (n.is_split()) {
    check_lmax_halving(tree, n.left, path);
    check_lmax_halving(tree, n.right, path);
  }
  path.pop_back();
}

}  // namespace

TEST_CASE("full splits satisfy the tree invariants on random 3d sets") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 2 + rng() % 120;
    PointSet ps = testutil::random_points(rng, n, 3, -1.0, 1.0);
    FsTree tree(ps);
    tree.split_fully();
    CHECK(tree.node_count() <= 2 * n - 1);
    check_node_invariants(tree, tree.root());
    std::vector<double> path;
    check_lmax_halving(tree, tree.root(), path);

    // Every row is covered by exactly one unsplit leaf, and all leaves are
    // singletons or duplicate clusters.
    std::vector<int> covered(n, 0);
    for (NodeId id = 0; id < tree.node_count(); ++id) {
      const auto& node = tree.node(id);
      if (node.is_split()) continue;
      CHECK_FALSE(node.splittable());
      for (std::size_t r = node.begin; r < node.end; ++r) ++covered[r];
    }
    CHECK(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));

    // Stable ids survive the in-place reordering.
    std::set<std::size_t> ids;
    for (std::size_t r = 0; r < n; ++r) ids.insert(tree.points().id(r));
    CHECK(ids.size() == n);
  }
}

TEST_CASE("duplicate clusters end as multi-point leaves") {
  PointSet ps = PointSet::from_rows(2, {{0, 0}, {1, 1}, {0, 0}, {0, 0}, {1, 1}});
  FsTree tree(ps);
  tree.split_fully();
  std::size_t leaf_points = 0;
  for (NodeId id = 0; id < tree.node_count(); ++id) {
    const auto& node = tree.node(id);
    if (node.is_split()) continue;
    CHECK_FALSE(node.splittable());
    leaf_points += node.count();
    CHECK(node.radius == 0.0);
  }
  CHECK(leaf_points == 5);
  CHECK(tree.node_count() == 3);  // root plus one leaf per cluster
}
