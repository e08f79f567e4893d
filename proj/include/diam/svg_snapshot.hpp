#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diam/geometry.hpp"
#include "diam/pair_diameter.hpp"

namespace diam {

struct SnapshotOptions {
  std::size_t every = 100;           // trace events per frame
  std::size_t axis_x = 0, axis_y = 1;  // projection plane for d >= 3
  double width = 640.0, height = 640.0;
};

struct SnapshotFrame {
  std::string svg;
  std::size_t event_index = 0;  // 1-based index of the last replayed event
  std::size_t live_pairs = 0;
  std::size_t live_nodes = 0;
};

/// Replays a trace and renders one frame per `every` events (plus the tail):
/// input points, outlined boxes of nodes in live pairs, dark boxes for nodes
/// whose pairs were all thrown away, and the current best pair as a segment.
std::vector<SnapshotFrame> render_snapshots(const PointSet& points, const RunTrace& trace,
                                            const SnapshotOptions& options);

}  // namespace diam
