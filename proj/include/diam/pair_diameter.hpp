#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "diam/fair_split_tree.hpp"
#include "diam/geometry.hpp"

namespace diam {

enum class PairStrategy {
  Heap4Way,    // expand a surviving pair into all child pairs (max-M heap)
  HeapWspd,    // split only the side with the larger longest edge
  FifoLevels,  // WSPD split rule, FIFO queue instead of a heap
};

struct RunStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t distance_evaluations = 0;
  std::uint64_t nodes_built = 0;
  std::uint64_t heap_ops = 0;  // queue pushes + pops (heap or FIFO)
  double wall_ms = 0.0;

  bool operator==(const RunStats&) const = default;
};

/// The returned distance is always realized by two input points, identified
/// by their stable ids.
struct DiameterResult {
  std::size_t first = 0, second = 0;
  double distance = 0.0;
  RunStats stats;
};

/// Ordered event log of one refinement run; detailed enough to replay the
/// live pair set (for invariant checks and SVG snapshots) without the tree.
struct RunTrace {
  struct NodeCreated {
    NodeId node;
    std::vector<double> lo, hi;
  };
  struct NodeSplit {
    NodeId node, left, right;
  };
  struct PairCreated {
    NodeId u, v;
    double m;
  };
  struct PairHandled {  // popped from the queue
    NodeId u, v;
    double m;
  };
  struct PairPruned {
    NodeId u, v;
    double m;
  };
  struct PairExpanded {
    NodeId u, v;
    double m;
  };
  struct PairResolved {  // FS Directions: settled by axis projection
    NodeId u, v;
    double m;
  };
  struct EstimateUpdated {
    double value;
    std::size_t first, second;  // realizing point ids
  };
  using Event = std::variant<NodeCreated, NodeSplit, PairCreated, PairHandled, PairPruned,
                             PairExpanded, PairResolved, EstimateUpdated>;

  std::vector<Event> events;
};

/// M(u,v) = |c(u)c(v)| + r(u) + r(v): an upper bound on the distance between
/// any p in P(u) and q in P(v).
double pair_upper_bound(const FsTree& tree, NodeId u, NodeId v);

/// True iff m_value <= (1 + eps) * delta_curr. Throws on negative eps.
bool should_prune(double m_value, double delta_curr, double eps);

/// Running best estimate plus the counters it owns.
struct EstimateState {
  double delta = 0.0;  // current best realized distance
  std::size_t best_first = 0, best_second = 0;
  std::uint64_t distance_evaluations = 0;
};

/// Evaluates one representative pair of (u, v) — the first row of each range,
/// or first/last when u == v — and raises the estimate if the distance is
/// strictly larger. Returns true on a raise.
bool update_estimate(EstimateState& state, const FsTree& tree, NodeId u, NodeId v);

/// Pair-refinement diameter. With eps == 0 the result is the exact diameter;
/// otherwise (1 - eps) * diam <= result <= diam.
DiameterResult approx_diameter(const PointSet& points, double eps, PairStrategy strategy,
                               RunTrace* trace = nullptr);

/// Heap4Way variant that resolves a pair by projecting its points onto the
/// center-to-center axis once the angle bound nu(u,v) drops below sqrt(eps).
/// Requires eps > 0.
DiameterResult fs_directions_diameter(const PointSet& points, double eps,
                                      RunTrace* trace = nullptr);

/// Conservative upper bound on the angle between segment c(u)c(v) and any
/// segment pq with p in P(u), q in P(v): arcsin(min(1, (r_u + r_v)/|c_u c_v|)),
/// or pi when the centers coincide.
double pair_angle_bound(const FsTree& tree, NodeId u, NodeId v);

}  // namespace diam
