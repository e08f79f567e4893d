#include "diam/bench.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "diam/baselines.hpp"

namespace diam {

namespace {

struct AlgoName {
  Algorithm algo;
  std::string_view name;
};

constexpr AlgoName kNames[] = {
    {Algorithm::FsHeap, "fs-heap"},         {Algorithm::FsWspd, "fs-wspd"},
    {Algorithm::FsLevels, "fs-levels"},     {Algorithm::FsDirections, "fs-directions"},
    {Algorithm::Grid, "grid"},              {Algorithm::GridFsDir, "grid-fs-dir"},
    {Algorithm::Chan, "chan"},              {Algorithm::ChanMod, "chan-mod"},
    {Algorithm::DirSearch, "dir-search"},   {Algorithm::BBox, "bbox"},
    {Algorithm::Pca, "pca"},                {Algorithm::Brute, "brute"},
};

DiameterResult snapped_run(const PointSet& points, double snap_eps,
                           const std::function<DiameterResult(const PointSet&)>& inner) {
  GridSnapResult snapped = grid_snap(points, snap_eps);
  DiameterResult sub = inner(snapped.points);
  DiameterResult res;
  res.stats = sub.stats;
  res.first = snapped.representative[sub.first];
  res.second = snapped.representative[sub.second];
  if (res.first > res.second) std::swap(res.first, res.second);
  std::vector<std::size_t> rows(points.size());
  for (std::size_t r = 0; r < points.size(); ++r) rows[points.id(r)] = r;
  res.distance = distance(points[rows[res.first]], points[rows[res.second]]);
  ++res.stats.distance_evaluations;
  return res;
}

}  // namespace

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (const auto& entry : kNames)
    if (entry.name == name) return entry.algo;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm algo) {
  for (const auto& entry : kNames)
    if (entry.algo == algo) return entry.name;
  return "?";
}

std::vector<Algorithm> all_algorithms() {
  std::vector<Algorithm> out;
  for (const auto& entry : kNames) out.push_back(entry.algo);
  return out;
}

bool algorithm_uses_eps(Algorithm algo) {
  return algo != Algorithm::BBox && algo != Algorithm::Pca && algo != Algorithm::Brute;
}

bool algorithm_requires_positive_eps(Algorithm algo) {
  switch (algo) {
    case Algorithm::FsDirections:
    case Algorithm::Grid:
    case Algorithm::GridFsDir:
    case Algorithm::Chan:
    case Algorithm::ChanMod:
    case Algorithm::DirSearch:
      return true;
    default:
      return false;
  }
}

DiameterResult run_algorithm(const PointSet& points, Algorithm algo, double eps,
                             RunTrace* trace) {
  if (algorithm_uses_eps(algo)) {
    if (eps < 0.0) throw std::invalid_argument("eps must be >= 0");
    if (eps == 0.0 && algorithm_requires_positive_eps(algo))
      throw std::invalid_argument(std::string(algorithm_name(algo)) + " requires eps > 0");
  }
  const double d = static_cast<double>(points.dim());
  switch (algo) {
    case Algorithm::FsHeap:
      return approx_diameter(points, eps, PairStrategy::Heap4Way, trace);
    case Algorithm::FsWspd:
      return approx_diameter(points, eps, PairStrategy::HeapWspd, trace);
    case Algorithm::FsLevels:
      return approx_diameter(points, eps, PairStrategy::FifoLevels, trace);
    case Algorithm::FsDirections:
      return fs_directions_diameter(points, eps, trace);
    case Algorithm::Grid:
      // Snap error is bounded by sqrt(d) x the grid eps, so spend eps/2 of
      // the budget there and the rest in the refinement.
      return snapped_run(points, eps / (2.0 * std::sqrt(d)), [&](const PointSet& snapped) {
        return approx_diameter(snapped, eps / 2.0, PairStrategy::FifoLevels);
      });
    case Algorithm::GridFsDir:
      return snapped_run(points, eps / 2.0, [&](const PointSet& snapped) {
        return fs_directions_diameter(snapped, eps / 2.0);
      });
    case Algorithm::Chan:
      return chan_diameter(points, eps, Chan2dBase::ConvexHullExact);
    case Algorithm::ChanMod:
      return chan_diameter(points, eps, Chan2dBase::FsVariant);
    case Algorithm::DirSearch:
      return direction_search_diameter(points, eps, /*pre_snap=*/false);
    case Algorithm::BBox:
      return bbox_diameter(points);
    case Algorithm::Pca:
      return pca_diameter(points);
    case Algorithm::Brute:
      return brute_force_diameter(points);
  }
  throw std::invalid_argument("run_algorithm: bad algorithm");
}

std::vector<BenchCell> run_bench(const BenchConfig& config) {
  if (config.inputs.empty() || config.algorithms.empty())
    throw std::invalid_argument("run_bench: need at least one input and one algorithm");
  if (config.repetitions < 1) throw std::invalid_argument("run_bench: repetitions must be >= 1");

  std::vector<double> eps_values = config.eps_values;
  if (eps_values.empty()) eps_values.push_back(0.0);
  std::sort(eps_values.begin(), eps_values.end());
  eps_values.erase(std::unique(eps_values.begin(), eps_values.end()), eps_values.end());

  // Cache the oracle per input (n <= cutoff only).
  std::vector<double> oracle(config.inputs.size(), -1.0);
  for (std::size_t i = 0; i < config.inputs.size(); ++i)
    if (config.inputs[i].points.size() >= 2 &&
        config.inputs[i].points.size() <= config.oracle_cutoff)
      oracle[i] = brute_force_diameter(config.inputs[i].points).distance;

  std::vector<BenchCell> cells;
  auto run_cell = [&](std::size_t input_idx, Algorithm algo, double eps, bool eps_applies) {
    const BenchInput& input = config.inputs[input_idx];
    BenchCell cell;
    cell.input = input.label;
    cell.algorithm = algo;
    cell.eps = eps_applies ? eps : 0.0;
    cell.eps_applies = eps_applies;
    try {
      std::vector<double> times;
      for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        cell.result = run_algorithm(input.points, algo, eps);
        times.push_back(cell.result.stats.wall_ms);
      }
      std::sort(times.begin(), times.end());
      cell.median_wall_ms = times[times.size() / 2];
      if (oracle[input_idx] >= 0.0) {
        cell.validated = true;
        const double upper = oracle[input_idx] * (1.0 + 1e-12);
        double lower = 0.0;
        if (algo == Algorithm::BBox || algo == Algorithm::Pca) {
          lower = oracle[input_idx] / std::sqrt(static_cast<double>(input.points.dim()));
        } else if (algo == Algorithm::Brute) {
          lower = oracle[input_idx];
        } else {
          lower = (1.0 - eps) * oracle[input_idx];
        }
        cell.ok = cell.result.distance <= upper &&
                  cell.result.distance >= lower * (1.0 - 1e-12);
      }
    } catch (const std::exception& e) {
      cell.ok = false;
      cell.error = e.what();
    }
    cells.push_back(std::move(cell));
  };

  for (double eps : eps_values)
    for (Algorithm algo : config.algorithms) {
      if (!algorithm_uses_eps(algo)) continue;
      if (eps == 0.0 && algorithm_requires_positive_eps(algo)) continue;
      for (std::size_t i = 0; i < config.inputs.size(); ++i) run_cell(i, algo, eps, true);
    }
  for (Algorithm algo : config.algorithms) {
    if (algorithm_uses_eps(algo)) continue;
    for (std::size_t i = 0; i < config.inputs.size(); ++i) run_cell(i, algo, 0.0, false);
  }
  return cells;
}

std::string bench_to_csv(const std::vector<BenchCell>& cells) {
  std::ostringstream out;
  out << "input,algorithm,eps,median_ms,distance,i,j,pairs_created,distance_evals,nodes_built,"
         "heap_ops,validated,ok,error\n";
  for (const auto& c : cells) {
    out << c.input << ',' << algorithm_name(c.algorithm) << ',';
    if (c.eps_applies)
      out << c.eps;
    else
      out << "-";
    out << ',' << c.median_wall_ms << ',' << c.result.distance << ',' << c.result.first << ','
        << c.result.second << ',' << c.result.stats.pairs_created << ','
        << c.result.stats.distance_evaluations << ',' << c.result.stats.nodes_built << ','
        << c.result.stats.heap_ops << ',' << (c.validated ? 1 : 0) << ',' << (c.ok ? 1 : 0)
        << ',' << c.error << '\n';
  }
  return out.str();
}

std::string bench_to_markdown(const std::vector<BenchCell>& cells) {
  // Rows: algorithm grouped by eps; columns: inputs; cell: median ms.
  std::vector<std::string> inputs;
  for (const auto& c : cells)
    if (std::find(inputs.begin(), inputs.end(), c.input) == inputs.end())
      inputs.push_back(c.input);

  struct RowKey {
    bool constant_factor;
    double eps;
    Algorithm algo;
    bool operator<(const RowKey& o) const {
      if (constant_factor != o.constant_factor) return !constant_factor;
      if (eps != o.eps) return eps < o.eps;
      return algo < o.algo;
    }
  };
  std::map<RowKey, std::map<std::string, std::string>> rows;
  for (const auto& c : cells) {
    RowKey key{!c.eps_applies, c.eps, c.algorithm};
    std::ostringstream val;
    if (!c.error.empty()) {
      val << "error";
    } else {
      val << c.median_wall_ms;
      if (c.validated && !c.ok) val << " (!)";
    }
    rows[key][c.input] = val.str();
  }

  std::ostringstream out;
  out << "| eps | algorithm |";
  for (const auto& in : inputs) out << ' ' << in << " |";
  out << "\n|---|---|";
  for (std::size_t i = 0; i < inputs.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& [key, by_input] : rows) {
    out << "| ";
    if (key.constant_factor)
      out << "const";
    else
      out << key.eps;
    out << " | " << algorithm_name(key.algo) << " |";
    for (const auto& in : inputs) {
      auto it = by_input.find(in);
      out << ' ' << (it == by_input.end() ? "-" : it->second) << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace diam
