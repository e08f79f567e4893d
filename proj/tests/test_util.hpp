#pragma once

#include <random>
#include <vector>

#include "diam/geometry.hpp"

namespace testutil {

inline double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline diam::PointSet random_points(std::mt19937_64& rng, std::size_t n, std::size_t dim,
                                    double lo = 0.0, double hi = 1.0) {
  diam::PointSet ps(dim);
  std::vector<double> p(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < dim; ++a) p[a] = uniform(rng, lo, hi);
    ps.add(p);
  }
  return ps;
}

/// Independent quadratic farthest-pair scan (kept separate from the library
/// brute force on purpose).
inline double naive_diameter(const diam::PointSet& ps) {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      best = std::max(best, diam::distance(ps[i], ps[j]));
  return best;
}

}  // namespace testutil
