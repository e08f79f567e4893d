#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "diam/geometry.hpp"

namespace diam {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

/// One node of a fair-split tree. The box is the tight bounding box of the
/// node's points; (center, radius) is the smallest ball around the box
/// center that encloses the box.
struct FsNode {
  Aabb box;
  std::vector<double> center;
  double radius = 0.0;
  std::size_t begin = 0, end = 0;  // contiguous row range in the tree's points
  NodeId left = kNoNode, right = kNoNode;
  std::uint32_t depth = 0;

  std::size_t count() const { return end - begin; }
  bool is_split() const { return left != kNoNode; }
  double longest_extent() const;
  /// False for singletons and for clusters of coordinate-identical points.
  bool splittable() const { return longest_extent() > 0.0; }
};

/// Lazily split fair-split tree. Construction builds only the root; split()
/// partitions a node at the midpoint of its longest box edge, reordering the
/// owned point array in place so every node covers one contiguous row range.
class FsTree {
 public:
  explicit FsTree(PointSet points);  // throws on an empty set

  const PointSet& points() const { return points_; }
  NodeId root() const { return 0; }
  const FsNode& node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }

  /// Splits an unsplit node, returning its children. Splitting an already
  /// split node returns the existing children. Points with coordinate
  /// < midpoint go left, >= midpoint go right; both children are nonempty
  /// and get freshly tightened boxes. Throws std::invalid_argument for a
  /// node whose points are all coordinate-identical (degenerate leaf).
  std::pair<NodeId, NodeId> split(NodeId id);

  /// Recursively splits until every leaf is a singleton or degenerate.
  void split_fully();

 private:
  NodeId make_node(std::size_t begin, std::size_t end, std::uint32_t depth);

  PointSet points_;
  std::vector<FsNode> nodes_;
};

/// Convenience spelling for the root-only construction.
FsTree build_root(PointSet points);

}  // namespace diam
