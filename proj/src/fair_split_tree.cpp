#include "diam/fair_split_tree.hpp"

#include <cmath>
#include <stdexcept>

namespace diam {

double FsNode::longest_extent() const { return longest_edge(box).length; }

FsTree::FsTree(PointSet points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("FsTree: empty point set");
  make_node(0, points_.size(), 0);
}

FsTree build_root(PointSet points) { return FsTree(std::move(points)); }

NodeId FsTree::make_node(std::size_t begin, std::size_t end, std::uint32_t depth) {
  Aabb box = bounding_box(points_, begin, end);
  CenterRadius cr = center_and_radius(box);
  FsNode node{std::move(box), std::move(cr.center), cr.radius, begin, end,
              kNoNode,        kNoNode,              depth};
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

std::pair<NodeId, NodeId> FsTree::split(NodeId id) {
  FsNode& n = nodes_[id];
  if (n.is_split()) return {n.left, n.right};
  if (!n.splittable())
    throw std::invalid_argument("FsTree::split: degenerate leaf (all points coincide)");

  const LongestEdge edge = longest_edge(n.box);
  const std::size_t axis = edge.axis;
  double mid = (n.box.lo()[axis] + n.box.hi()[axis]) / 2.0;
  // With adjacent-double bounds the midpoint can round onto lo, which would
  // leave the left half empty; nudge the threshold just above lo so points
  // attaining lo still go left.
  if (mid <= n.box.lo()[axis]) mid = std::nextafter(n.box.lo()[axis], n.box.hi()[axis]);

  std::size_t lo = n.begin, hi = n.end;
  while (lo < hi) {
    if (points_[lo][axis] < mid) {
      ++lo;
    } else {
      --hi;
      points_.swap_rows(lo, hi);
    }
  }

  const std::size_t split_at = lo;
  const std::size_t begin = n.begin, end = n.end;
  const std::uint32_t depth = n.depth;
  // make_node may reallocate nodes_, so do not touch `n` afterwards.
  NodeId left = make_node(begin, split_at, depth + 1);
  NodeId right = make_node(split_at, end, depth + 1);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return {left, right};
}

void FsTree::split_fully() {
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (!node(id).splittable()) continue;
    auto [l, r] = split(id);
    stack.push_back(l);
    stack.push_back(r);
  }
}

}  // namespace diam
