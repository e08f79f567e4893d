#pragma once

#include <cstdint>
#include <vector>

#include "diam/geometry.hpp"
#include "diam/pair_diameter.hpp"

namespace diam {

/// Exact O(n^2) diameter; ties broken toward the lexicographically smallest
/// index pair. This is the reference oracle for every approximate method.
DiameterResult brute_force_diameter(const PointSet& points);

/// Farthest pair among the per-axis extreme-point pairs of the bounding box.
/// Guarantees result >= diam / sqrt(d) in a single pass.
DiameterResult bbox_diameter(const PointSet& points);

/// Extreme pair under projection onto each principal axis of the covariance
/// matrix; returns the longest such pair. Guarantees result >= diam / sqrt(d).
DiameterResult pca_diameter(const PointSet& points);

struct GridSnapConfig {
  double eps = 0.0;
  std::size_t cells_per_axis = 0;  // k = ceil(1/eps)

  static GridSnapConfig from_eps(double eps);  // throws on eps <= 0
};

struct GridSnapResult {
  PointSet points;  // deduplicated, cleaned cell centers (row ids are fresh)
  std::vector<std::size_t> representative;      // row -> original point id
  std::vector<std::vector<std::int64_t>> cell;  // row -> cell index per axis
  GridSnapConfig config;
  Aabb box;  // bounding box the grid was laid over
};

/// Snaps points to the centers of a k^d grid over their bounding box,
/// deduplicates, then keeps only the two extreme cells on every occupied
/// axis-parallel grid line (grid cleaning). Preserves the diameter to within
/// a relative (1 +- eps)-ish snap error.
GridSnapResult grid_snap(const PointSet& points, double eps);

struct DirectionCover {
  std::vector<std::vector<double>> directions;  // unit d-vectors
  double angular_radius = 0.0;                  // sqrt(2 * eps)
};

/// Unit directions whose caps of angular radius sqrt(2*eps) cover the sphere
/// of directions (antipodal directions identified). O(1/eps^((d-1)/2)) many.
DirectionCover direction_cover(double eps, std::size_t dim);

/// Projects onto every cover direction and returns the farthest extreme pair,
/// measured between original points. With pre_snap, grid-cleans at eps/2 and
/// covers at eps/2, composing to the same (1 - eps) guarantee.
DiameterResult direction_search_diameter(const PointSet& points, double eps, bool pre_snap);

enum class Chan2dBase {
  ConvexHullExact,  // hull + antipodal scan, exact
  FsVariant,        // 2d pair-refinement at the remaining eps
};

/// Recursive hyperplane projection: grid-clean, project onto O(1/sqrt(eps))
/// hyperplanes, recurse at eps/2 down to the 2d base case, and lift every
/// recursive answer back to the original points.
DiameterResult chan_diameter(const PointSet& points, double eps, Chan2dBase base2d);

/// Exact planar diameter via monotone-chain hull and rotating calipers.
/// Exposed for the 2d base case and its tests. Returns row indices.
DiameterResult diameter_2d_exact(const PointSet& points);

}  // namespace diam
