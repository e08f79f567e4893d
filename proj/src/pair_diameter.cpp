#include "diam/pair_diameter.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>

namespace diam {

double pair_upper_bound(const FsTree& tree, NodeId u, NodeId v) {
  const FsNode& a = tree.node(u);
  const FsNode& b = tree.node(v);
  return distance(a.center, b.center) + a.radius + b.radius;
}

bool should_prune(double m_value, double delta_curr, double eps) {
  if (eps < 0.0) throw std::invalid_argument("should_prune: eps must be >= 0");
  return m_value <= (1.0 + eps) * delta_curr;
}

double pair_angle_bound(const FsTree& tree, NodeId u, NodeId v) {
  const FsNode& a = tree.node(u);
  const FsNode& b = tree.node(v);
  const double cc = distance(a.center, b.center);
  if (cc == 0.0) return std::acos(-1.0);  // pi
  return std::asin(std::min(1.0, (a.radius + b.radius) / cc));
}

bool update_estimate(EstimateState& state, const FsTree& tree, NodeId u, NodeId v) {
  const FsNode& a = tree.node(u);
  const FsNode& b = tree.node(v);
  std::size_t row_p = a.begin;
  std::size_t row_q = (u == v) ? b.end - 1 : b.begin;
  ++state.distance_evaluations;
  const double d = distance(tree.points()[row_p], tree.points()[row_q]);
  if (d > state.delta) {
    state.delta = d;
    state.best_first = tree.points().id(row_p);
    state.best_second = tree.points().id(row_q);
    return true;
  }
  return false;
}

namespace {

struct PairEntry {
  NodeId u, v;  // u <= v
  double m;     // min(M(u,v), parent bound): keeps the handled sequence monotone
  std::uint64_t seq;
};

struct PairOrder {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.m != b.m) return a.m < b.m;
    return a.seq > b.seq;  // equal bounds: older pair first
  }
};

class RefinementEngine {
 public:
  RefinementEngine(const PointSet& points, double eps, PairStrategy strategy, bool directions,
                   RunTrace* trace)
      : tree_(points), eps_(eps), strategy_(strategy), directions_(directions), trace_(trace) {
    if (directions_) {
      if (eps <= 0.0)
        throw std::invalid_argument("fs_directions_diameter: eps must be > 0");
      angle_cutoff_ = std::sqrt(eps);
    } else if (eps < 0.0) {
      throw std::invalid_argument("approx_diameter: eps must be >= 0");
    }
  }

  DiameterResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    if (trace_) {
      const FsNode& r = tree_.node(tree_.root());
      trace_->events.push_back(RunTrace::NodeCreated{tree_.root(), r.box.lo(), r.box.hi()});
    }

    seed_estimate();
    if (tree_.points().size() >= 2) {
      create_pair(tree_.root(), tree_.root(), std::numeric_limits<double>::infinity());
      loop();
    }

    DiameterResult result;
    result.first = std::min(state_.best_first, state_.best_second);
    result.second = std::max(state_.best_first, state_.best_second);
    result.distance = state_.delta;
    result.stats = stats_;
    result.stats.distance_evaluations = state_.distance_evaluations;
    result.stats.nodes_built = tree_.node_count();
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

 private:
  /// Seeds the estimate with a realized pair spanning the longest edge of the
  /// root box, so the initial value is at least l_max(root) >= diam/sqrt(d)
  /// and the result is always a concrete pair of input points.
  void seed_estimate() {
    const FsNode& root = tree_.node(tree_.root());
    const PointSet& pts = tree_.points();
    std::size_t row_lo = root.begin, row_hi = root.begin;
    const LongestEdge edge = longest_edge(root.box);
    if (edge.length > 0.0) {
      for (std::size_t r = root.begin; r < root.end; ++r) {
        if (pts[r][edge.axis] == root.box.lo()[edge.axis]) {
          row_lo = r;
          break;
        }
      }
      for (std::size_t r = root.begin; r < root.end; ++r) {
        if (pts[r][edge.axis] == root.box.hi()[edge.axis]) {
          row_hi = r;
          break;
        }
      }
    } else if (root.count() >= 2) {
      row_hi = root.end - 1;  // all points coincide
    }
    ++state_.distance_evaluations;
    state_.delta = distance(pts[row_lo], pts[row_hi]);
    state_.best_first = pts.id(row_lo);
    state_.best_second = pts.id(row_hi);
    if (trace_)
      trace_->events.push_back(
          RunTrace::EstimateUpdated{state_.delta, state_.best_first, state_.best_second});
  }

  void create_pair(NodeId u, NodeId v, double parent_m) {
    if (v < u) std::swap(u, v);
    ++stats_.pairs_created;
    const double m = std::min(pair_upper_bound(tree_, u, v), parent_m);
    if (trace_) trace_->events.push_back(RunTrace::PairCreated{u, v, m});

    if (update_estimate(state_, tree_, u, v) && trace_)
      trace_->events.push_back(
          RunTrace::EstimateUpdated{state_.delta, state_.best_first, state_.best_second});

    if (should_prune(m, state_.delta, eps_)) {
      if (trace_) trace_->events.push_back(RunTrace::PairPruned{u, v, m});
      return;
    }
    if (directions_ && u != v && pair_angle_bound(tree_, u, v) <= angle_cutoff_) {
      resolve_by_projection(u, v, m);
      return;
    }
    push({u, v, m, seq_++});
  }

  void loop() {
    while (!empty()) {
      const PairEntry pair = pop();
      if (trace_) trace_->events.push_back(RunTrace::PairHandled{pair.u, pair.v, pair.m});
      if (should_prune(pair.m, state_.delta, eps_)) {
        if (trace_) trace_->events.push_back(RunTrace::PairPruned{pair.u, pair.v, pair.m});
        continue;
      }
      if (trace_) trace_->events.push_back(RunTrace::PairExpanded{pair.u, pair.v, pair.m});
      expand(pair);
    }
  }

  void expand(const PairEntry& pair) {
    const NodeId u = pair.u, v = pair.v;
    if (u == v) {
      auto [l, r] = split_node(u);
      create_pair(l, l, pair.m);
      create_pair(l, r, pair.m);
      create_pair(r, r, pair.m);
      return;
    }
    const bool su = tree_.node(u).splittable();
    const bool sv = tree_.node(v).splittable();
    if (strategy_ == PairStrategy::Heap4Way) {
      if (su && sv) {
        auto [ul, ur] = split_node(u);
        auto [vl, vr] = split_node(v);
        create_pair(ul, vl, pair.m);
        create_pair(ul, vr, pair.m);
        create_pair(ur, vl, pair.m);
        create_pair(ur, vr, pair.m);
      } else if (su) {
        auto [ul, ur] = split_node(u);
        create_pair(ul, v, pair.m);
        create_pair(ur, v, pair.m);
      } else {
        auto [vl, vr] = split_node(v);
        create_pair(u, vl, pair.m);
        create_pair(u, vr, pair.m);
      }
      return;
    }
    // WSPD rule: split only the side with the larger longest edge.
    NodeId side;
    if (!su) {
      side = v;
    } else if (!sv) {
      side = u;
    } else {
      side = tree_.node(u).longest_extent() > tree_.node(v).longest_extent() ? u : v;
    }
    auto [a, b] = split_node(side);
    const NodeId other = (side == u) ? v : u;
    create_pair(a, other, pair.m);
    create_pair(b, other, pair.m);
  }

  std::pair<NodeId, NodeId> split_node(NodeId id) {
    const bool fresh = !tree_.node(id).is_split();
    auto [l, r] = tree_.split(id);
    if (fresh && trace_) {
      const FsNode& ln = tree_.node(l);
      const FsNode& rn = tree_.node(r);
      trace_->events.push_back(RunTrace::NodeCreated{l, ln.box.lo(), ln.box.hi()});
      trace_->events.push_back(RunTrace::NodeCreated{r, rn.box.lo(), rn.box.hi()});
      trace_->events.push_back(RunTrace::NodeSplit{id, l, r});
    }
    return {l, r};
  }

  /// FS Directions: the pair's points deviate from the center axis by less
  /// than the angle cutoff, so the extreme pair under projection onto that
  /// axis settles the whole pair.
  void resolve_by_projection(NodeId u, NodeId v, double m) {
    const FsNode& a = tree_.node(u);
    const FsNode& b = tree_.node(v);
    const PointSet& pts = tree_.points();
    const std::size_t d = pts.dim();
    std::vector<double> axis(d);
    for (std::size_t i = 0; i < d; ++i) axis[i] = b.center[i] - a.center[i];

    auto project = [&](std::size_t row) {
      double t = 0.0;
      auto p = pts[row];
      for (std::size_t i = 0; i < d; ++i) t += p[i] * axis[i];
      return t;
    };
    std::size_t row_min = a.begin, row_max = a.begin;
    double t_min = project(a.begin), t_max = t_min;
    auto scan = [&](std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) {
        const double t = project(r);
        if (t < t_min) {
          t_min = t;
          row_min = r;
        }
        if (t > t_max) {
          t_max = t;
          row_max = r;
        }
      }
    };
    scan(a.begin, a.end);
    scan(b.begin, b.end);
    if (row_min == row_max) {  // overlapping balls collapsed the projection
      row_min = a.begin;
      row_max = b.begin;
    }

    ++state_.distance_evaluations;
    const double dist = distance(pts[row_min], pts[row_max]);
    if (dist > state_.delta) {
      state_.delta = dist;
      state_.best_first = pts.id(row_min);
      state_.best_second = pts.id(row_max);
      if (trace_)
        trace_->events.push_back(
            RunTrace::EstimateUpdated{state_.delta, state_.best_first, state_.best_second});
    }
    if (trace_) trace_->events.push_back(RunTrace::PairResolved{u, v, m});
  }

  void push(const PairEntry& e) {
    ++stats_.heap_ops;
    if (strategy_ == PairStrategy::FifoLevels)
      fifo_.push_back(e);
    else
      heap_.push(e);
  }

  bool empty() const {
    return strategy_ == PairStrategy::FifoLevels ? fifo_.empty() : heap_.empty();
  }

  PairEntry pop() {
    ++stats_.heap_ops;
    if (strategy_ == PairStrategy::FifoLevels) {
      PairEntry e = fifo_.front();
      fifo_.pop_front();
      return e;
    }
    PairEntry e = heap_.top();
    heap_.pop();
    return e;
  }

  FsTree tree_;
  double eps_;
  PairStrategy strategy_;
  bool directions_;
  double angle_cutoff_ = 0.0;
  RunTrace* trace_;

  EstimateState state_;
  RunStats stats_;
  std::uint64_t seq_ = 0;
  std::priority_queue<PairEntry, std::vector<PairEntry>, PairOrder> heap_;
  std::deque<PairEntry> fifo_;
};

}  // namespace

DiameterResult approx_diameter(const PointSet& points, double eps, PairStrategy strategy,
                               RunTrace* trace) {
  if (points.empty()) throw std::invalid_argument("approx_diameter: empty point set");
  return RefinementEngine(points, eps, strategy, /*directions=*/false, trace).run();
}

DiameterResult fs_directions_diameter(const PointSet& points, double eps, RunTrace* trace) {
  if (points.empty()) throw std::invalid_argument("fs_directions_diameter: empty point set");
  return RefinementEngine(points, eps, PairStrategy::Heap4Way, /*directions=*/true, trace).run();
}

}  // namespace diam
