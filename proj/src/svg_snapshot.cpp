#include "diam/svg_snapshot.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace diam {

namespace {

struct PairKey {
  NodeId u, v;
  bool operator<(const PairKey& o) const { return u < o.u || (u == o.u && v < o.v); }
};

struct NodeBox {
  double lo_x, lo_y, hi_x, hi_y;
};

struct Replay {
  std::map<NodeId, NodeBox> boxes;
  std::map<NodeId, int> live_refs;      // node -> live pair count
  std::map<NodeId, bool> ever_paired;   // retired = paired once, now zero
  std::map<PairKey, bool> live_pairs;
  std::size_t best_i = 0, best_j = 0;
  bool have_best = false;

  void add_pair(NodeId u, NodeId v) {
    live_pairs[{u, v}] = true;
    ++live_refs[u];
    ever_paired[u] = true;
    if (v != u) {
      ++live_refs[v];
      ever_paired[v] = true;
    }
  }
  void drop_pair(NodeId u, NodeId v) {
    auto it = live_pairs.find({u, v});
    if (it == live_pairs.end()) return;
    live_pairs.erase(it);
    --live_refs[u];
    if (v != u) --live_refs[v];
  }
};

class FrameWriter {
 public:
  FrameWriter(const PointSet& points, const SnapshotOptions& opt) : points_(points), opt_(opt) {
    Aabb box = bounding_box(points);
    lo_x_ = box.lo()[opt.axis_x];
    hi_x_ = box.hi()[opt.axis_x];
    lo_y_ = box.lo()[opt.axis_y];
    hi_y_ = box.hi()[opt.axis_y];
    const double span_x = std::max(hi_x_ - lo_x_, 1e-12);
    const double span_y = std::max(hi_y_ - lo_y_, 1e-12);
    const double margin = 0.05;
    scale_ = std::min((opt.width * (1 - 2 * margin)) / span_x,
                      (opt.height * (1 - 2 * margin)) / span_y);
    off_x_ = (opt.width - scale_ * span_x) / 2.0;
    off_y_ = (opt.height - scale_ * span_y) / 2.0;
  }

  std::string render(const Replay& replay) const {
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt_.width << "\" height=\""
        << opt_.height << "\" viewBox=\"0 0 " << opt_.width << ' ' << opt_.height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Retired nodes first so live outlines stay visible on top.
    for (const auto& [node, paired] : replay.ever_paired) {
      if (!paired) continue;
      auto refs = replay.live_refs.find(node);
      if (refs != replay.live_refs.end() && refs->second > 0) continue;
      draw_box(svg, replay.boxes.at(node), "fill=\"#555555\" fill-opacity=\"0.55\" stroke=\"none\"");
    }
    for (const auto& [node, refs] : replay.live_refs) {
      if (refs <= 0) continue;
      draw_box(svg, replay.boxes.at(node),
               "fill=\"#4477aa\" fill-opacity=\"0.08\" stroke=\"#4477aa\" stroke-width=\"1\"");
    }
    for (std::size_t r = 0; r < points_.size(); ++r) {
      svg << "<circle cx=\"" << sx(points_[r][opt_.axis_x]) << "\" cy=\""
          << sy(points_[r][opt_.axis_y]) << "\" r=\"1.5\" fill=\"black\"/>\n";
    }
    if (replay.have_best) {
      auto p = row_of(replay.best_i);
      auto q = row_of(replay.best_j);
      svg << "<line x1=\"" << sx(points_[p][opt_.axis_x]) << "\" y1=\""
          << sy(points_[p][opt_.axis_y]) << "\" x2=\"" << sx(points_[q][opt_.axis_x])
          << "\" y2=\"" << sy(points_[q][opt_.axis_y])
          << "\" stroke=\"#cc3311\" stroke-width=\"2\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
  }

 private:
  std::size_t row_of(std::size_t id) const {
    for (std::size_t r = 0; r < points_.size(); ++r)
      if (points_.id(r) == id) return r;
    return 0;
  }
  double sx(double x) const { return off_x_ + (x - lo_x_) * scale_; }
  double sy(double y) const { return opt_.height - (off_y_ + (y - lo_y_) * scale_); }

  void draw_box(std::ostringstream& svg, const NodeBox& b, const char* style) const {
    const double x = sx(b.lo_x);
    const double y = sy(b.hi_y);
    const double w = std::max(1.0, (b.hi_x - b.lo_x) * scale_);
    const double h = std::max(1.0, (b.hi_y - b.lo_y) * scale_);
    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
        << "\" " << style << "/>\n";
  }

  const PointSet& points_;
  const SnapshotOptions& opt_;
  double lo_x_, hi_x_, lo_y_, hi_y_, scale_, off_x_, off_y_;
};

}  // namespace

std::vector<SnapshotFrame> render_snapshots(const PointSet& points, const RunTrace& trace,
                                            const SnapshotOptions& options) {
  if (options.every == 0) throw std::invalid_argument("render_snapshots: every must be >= 1");
  if (options.axis_x >= points.dim() || options.axis_y >= points.dim() ||
      options.axis_x == options.axis_y)
    throw std::invalid_argument("render_snapshots: bad projection axes");

  FrameWriter writer(points, options);
  Replay replay;
  std::vector<SnapshotFrame> frames;

  std::size_t index = 0;
  for (const auto& event : trace.events) {
    ++index;
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, RunTrace::NodeCreated>) {
            replay.boxes[e.node] = {e.lo[options.axis_x], e.lo[options.axis_y],
                                    e.hi[options.axis_x], e.hi[options.axis_y]};
          } else if constexpr (std::is_same_v<T, RunTrace::PairCreated>) {
            replay.add_pair(e.u, e.v);
          } else if constexpr (std::is_same_v<T, RunTrace::PairPruned> ||
                               std::is_same_v<T, RunTrace::PairExpanded> ||
                               std::is_same_v<T, RunTrace::PairResolved>) {
            replay.drop_pair(e.u, e.v);
          } else if constexpr (std::is_same_v<T, RunTrace::EstimateUpdated>) {
            replay.best_i = e.first;
            replay.best_j = e.second;
            replay.have_best = true;
          }
        },
        event);
    if (index % options.every == 0 || index == trace.events.size()) {
      SnapshotFrame frame;
      frame.svg = writer.render(replay);
      frame.event_index = index;
      frame.live_pairs = replay.live_pairs.size();
      std::size_t live_nodes = 0;
      for (const auto& [node, refs] : replay.live_refs)
        if (refs > 0) ++live_nodes;
      frame.live_nodes = live_nodes;
      frames.push_back(std::move(frame));
    }
  }
  return frames;
}

}  // namespace diam
