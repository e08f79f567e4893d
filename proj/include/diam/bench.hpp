#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diam/geometry.hpp"
#include "diam/pair_diameter.hpp"

namespace diam {

enum class Algorithm {
  FsHeap,
  FsWspd,
  FsLevels,
  FsDirections,
  Grid,
  GridFsDir,
  Chan,
  ChanMod,
  DirSearch,
  BBox,
  Pca,
  Brute,
};

std::optional<Algorithm> algorithm_from_name(std::string_view name);
std::string_view algorithm_name(Algorithm algo);
std::vector<Algorithm> all_algorithms();

/// bbox / pca / brute run at a fixed constant factor and ignore eps.
bool algorithm_uses_eps(Algorithm algo);
/// Everything eps-dependent except the fs-heap/wspd/levels family, which
/// supports eps == 0 (exact mode).
bool algorithm_requires_positive_eps(Algorithm algo);

/// Single dispatch point shared by the CLI, the bench matrix, and the tests.
/// Throws std::invalid_argument on an algorithm/eps mismatch.
DiameterResult run_algorithm(const PointSet& points, Algorithm algo, double eps,
                             RunTrace* trace = nullptr);

struct BenchInput {
  std::string label;
  PointSet points;
};

struct BenchConfig {
  std::vector<BenchInput> inputs;
  std::vector<Algorithm> algorithms;
  std::vector<double> eps_values;
  std::size_t repetitions = 1;
  std::size_t oracle_cutoff = 5000;  // brute-force validation for n <= cutoff
};

struct BenchCell {
  std::string input;
  Algorithm algorithm;
  double eps = 0.0;        // 0 and ignored for constant-factor algorithms
  bool eps_applies = true;
  DiameterResult result;
  double median_wall_ms = 0.0;
  bool validated = false;  // oracle comparison ran
  bool ok = true;          // false when validation failed
  std::string error;       // nonempty when the cell itself failed
};

/// Runs every applicable (input, algorithm, eps) cell `repetitions` times.
/// Rows come out grouped by eps in ascending order with the constant-factor
/// algorithms last. Per-cell failures are recorded; the run continues.
std::vector<BenchCell> run_bench(const BenchConfig& config);

std::string bench_to_csv(const std::vector<BenchCell>& cells);
std::string bench_to_markdown(const std::vector<BenchCell>& cells);

}  // namespace diam
