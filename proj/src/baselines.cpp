#include "diam/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace diam {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_pairable(const PointSet& points, const char* who) {
  if (points.size() < 2) throw std::invalid_argument(std::string(who) + ": need at least 2 points");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> row_by_id(const PointSet& points) {
  std::vector<std::size_t> rows(points.size());
  for (std::size_t r = 0; r < points.size(); ++r) rows[points.id(r)] = r;
  return rows;
}

}  // namespace

DiameterResult brute_force_diameter(const PointSet& points) {
  require_pairable(points, "brute_force_diameter");
  const auto t0 = Clock::now();
  DiameterResult res;
  res.first = 0;
  res.second = 1;
  res.distance = -1.0;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(points[i], points[j]);
      ++res.stats.distance_evaluations;
      if (d > res.distance) {
        res.distance = d;
        res.first = points.id(i);
        res.second = points.id(j);
      }
    }
  }
  res.stats.wall_ms = elapsed_ms(t0);
  return res;
}

DiameterResult bbox_diameter(const PointSet& points) {
  require_pairable(points, "bbox_diameter");
  const auto t0 = Clock::now();
  const std::size_t d = points.dim();
  const std::size_t n = points.size();
  std::vector<std::size_t> row_min(d, 0), row_max(d, 0);
  for (std::size_t r = 1; r < n; ++r) {
    auto p = points[r];
    for (std::size_t a = 0; a < d; ++a) {
      if (p[a] < points[row_min[a]][a]) row_min[a] = r;
      if (p[a] > points[row_max[a]][a]) row_max[a] = r;
    }
  }
  DiameterResult res;
  res.distance = -1.0;
  for (std::size_t a = 0; a < d; ++a) {
    const double dist = distance(points[row_min[a]], points[row_max[a]]);
    ++res.stats.distance_evaluations;
    if (dist > res.distance) {
      res.distance = dist;
      res.first = points.id(row_min[a]);
      res.second = points.id(row_max[a]);
    }
  }
  if (res.first == res.second) {  // every axis degenerate: all points coincide
    res.first = points.id(0);
    res.second = points.id(1);
    res.distance = 0.0;
  }
  res.stats.wall_ms = elapsed_ms(t0);
  return res;
}

namespace {

/// Cyclic Jacobi eigendecomposition of a symmetric matrix; eigenvectors come
/// back as rows of `vecs`.
void jacobi_eigenvectors(std::vector<double> m, std::size_t d, std::vector<std::vector<double>>& vecs) {
  vecs.assign(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) vecs[i][i] = 1.0;
  auto at = [&](std::size_t r, std::size_t c) -> double& { return m[r * d + c]; };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) return;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        if (at(p, q) == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < d; ++k) {
          const double mkp = at(k, p), mkq = at(k, q);
          at(k, p) = c * mkp - s * mkq;
          at(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const double mpk = at(p, k), mqk = at(q, k);
          at(p, k) = c * mpk - s * mqk;
          at(q, k) = s * mpk + c * mqk;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const double vpk = vecs[p][k], vqk = vecs[q][k];
          vecs[p][k] = c * vpk - s * vqk;
          vecs[q][k] = s * vpk + c * vqk;
        }
      }
    }
  }
  throw std::runtime_error("pca_diameter: eigen-decomposition did not converge");
}

}  // namespace

DiameterResult pca_diameter(const PointSet& points) {
  require_pairable(points, "pca_diameter");
  const auto t0 = Clock::now();
  const std::size_t d = points.dim();
  const std::size_t n = points.size();

  std::vector<double> mean(d, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    auto p = points[r];
    for (std::size_t a = 0; a < d; ++a) mean[a] += p[a];
  }
  for (double& m : mean) m /= static_cast<double>(n);

  std::vector<double> cov(d * d, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    auto p = points[r];
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a; b < d; ++b) cov[a * d + b] += (p[a] - mean[a]) * (p[b] - mean[b]);
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < a; ++b) cov[a * d + b] = cov[b * d + a];
  for (double& c : cov) c /= static_cast<double>(n);

  std::vector<std::vector<double>> axes;
  jacobi_eigenvectors(std::move(cov), d, axes);

  DiameterResult res;
  res.distance = -1.0;
  for (const auto& axis : axes) {
    std::size_t row_min = 0, row_max = 0;
    double t_min = dot(points[0], axis), t_max = t_min;
    for (std::size_t r = 1; r < n; ++r) {
      const double t = dot(points[r], axis);
      if (t < t_min) {
        t_min = t;
        row_min = r;
      }
      if (t > t_max) {
        t_max = t;
        row_max = r;
      }
    }
    const double dist = distance(points[row_min], points[row_max]);
    ++res.stats.distance_evaluations;
    if (dist > res.distance) {
      res.distance = dist;
      res.first = points.id(row_min);
      res.second = points.id(row_max);
    }
  }
  if (res.first == res.second) {
    res.first = points.id(0);
    res.second = points.id(1);
    res.distance = 0.0;
  }
  res.stats.wall_ms = elapsed_ms(t0);
  return res;
}

GridSnapConfig GridSnapConfig::from_eps(double eps) {
  if (eps <= 0.0) throw std::invalid_argument("grid_snap: eps must be > 0");
  GridSnapConfig cfg;
  cfg.eps = eps;
  cfg.cells_per_axis = static_cast<std::size_t>(std::max(1.0, std::ceil(1.0 / eps)));
  return cfg;
}

GridSnapResult grid_snap(const PointSet& points, double eps) {
  GridSnapConfig cfg = GridSnapConfig::from_eps(eps);
  if (points.empty()) throw std::invalid_argument("grid_snap: empty point set");
  const std::size_t d = points.dim();
  const auto k = static_cast<std::int64_t>(cfg.cells_per_axis);
  Aabb box = bounding_box(points);

  std::vector<double> cell_w(d);
  for (std::size_t a = 0; a < d; ++a) cell_w[a] = box.extent(a) / static_cast<double>(k);

  // Snap and deduplicate; the first point to land in a cell represents it.
  std::map<std::vector<std::int64_t>, std::size_t> occupied;
  std::vector<std::int64_t> idx(d);
  for (std::size_t r = 0; r < points.size(); ++r) {
    auto p = points[r];
    for (std::size_t a = 0; a < d; ++a) {
      if (cell_w[a] <= 0.0) {
        idx[a] = 0;
      } else {
        auto i = static_cast<std::int64_t>((p[a] - box.lo()[a]) / cell_w[a]);
        idx[a] = std::clamp<std::int64_t>(i, 0, k - 1);
      }
    }
    occupied.try_emplace(idx, r);
  }

  // Grid cleaning: along each axis keep only the two extreme occupied cells
  // of every grid line (the line fixes all other indices).
  std::vector<const std::vector<std::int64_t>*> keys;
  keys.reserve(occupied.size());
  for (const auto& [key, row] : occupied) keys.push_back(&key);
  std::vector<bool> keep(keys.size(), false);
  std::vector<std::int64_t> line_key;
  for (std::size_t a = 0; a < d; ++a) {
    std::map<std::vector<std::int64_t>, std::pair<std::size_t, std::size_t>> lines;  // -> (argmin, argmax)
    for (std::size_t i = 0; i < keys.size(); ++i) {
      line_key = *keys[i];
      line_key.erase(line_key.begin() + static_cast<std::ptrdiff_t>(a));
      auto [it, fresh] = lines.try_emplace(line_key, i, i);
      if (!fresh) {
        auto& [lo_i, hi_i] = it->second;
        if ((*keys[i])[a] < (*keys[lo_i])[a]) lo_i = i;
        if ((*keys[i])[a] > (*keys[hi_i])[a]) hi_i = i;
      }
    }
    for (const auto& [key, extremes] : lines) {
      keep[extremes.first] = true;
      keep[extremes.second] = true;
    }
  }

  GridSnapResult result{PointSet(d), {}, {}, cfg, box};
  std::vector<double> center(d);
  std::size_t i = 0;
  for (const auto& [key, row] : occupied) {
    if (keep[i++]) {
      for (std::size_t a = 0; a < d; ++a)
        center[a] = cell_w[a] <= 0.0
                        ? box.lo()[a]
                        : box.lo()[a] + (static_cast<double>(key[a]) + 0.5) * cell_w[a];
      result.points.add(center);
      result.representative.push_back(points.id(row));
      result.cell.push_back(key);
    }
  }
  return result;
}

namespace {

/// Cover of the full sphere S^(dim-1) with caps of angular radius `radius`,
/// built from latitude bands and a recursive cover one dimension down.
void full_sphere_cover(std::size_t dim, double radius, std::vector<std::vector<double>>& out) {
  if (dim == 1) {
    out.push_back({1.0});
    out.push_back({-1.0});
    return;
  }
  if (dim == 2) {
    const auto m = static_cast<std::size_t>(std::ceil(std::numbers::pi / radius));
    for (std::size_t i = 0; i < m; ++i) {
      const double theta = (static_cast<double>(i) + 0.5) * 2.0 * std::numbers::pi /
                           static_cast<double>(m);
      out.push_back({std::cos(theta), std::sin(theta)});
    }
    return;
  }
  const double band = radius;  // half the budget to latitude, half within-band
  const auto bands = static_cast<std::size_t>(std::ceil(std::numbers::pi / band));
  for (std::size_t j = 0; j < bands; ++j) {
    const double phi = (static_cast<double>(j) + 0.5) * std::numbers::pi /
                       static_cast<double>(bands);
    const double s = std::sin(phi);
    std::vector<std::vector<double>> inner;
    const double inner_radius = (band / 2.0) / std::max(s, 1e-12);
    if (inner_radius >= std::numbers::pi) {
      inner.push_back(std::vector<double>(dim - 1, 0.0));
      inner.back()[0] = 1.0;
    } else {
      full_sphere_cover(dim - 1, inner_radius, inner);
    }
    for (const auto& w : inner) {
      std::vector<double> v(dim);
      for (std::size_t i = 0; i + 1 < dim; ++i) v[i] = s * w[i];
      v[dim - 1] = std::cos(phi);
      out.push_back(std::move(v));
    }
  }
}

}  // namespace

DirectionCover direction_cover(double eps, std::size_t dim) {
  if (eps <= 0.0) throw std::invalid_argument("direction_cover: eps must be > 0");
  if (dim < 2) throw std::invalid_argument("direction_cover: dimension must be >= 2");
  DirectionCover cover;
  cover.angular_radius = std::sqrt(2.0 * eps);
  const double alpha = cover.angular_radius;

  if (dim == 2) {
    // Antipodal directions are equivalent, so cover half the circle.
    const auto m = static_cast<std::size_t>(
        std::max(1.0, std::ceil(std::numbers::pi / (2.0 * alpha))));
    for (std::size_t i = 0; i < m; ++i) {
      const double theta = (static_cast<double>(i) + 0.5) * std::numbers::pi /
                           static_cast<double>(m);
      cover.directions.push_back({std::cos(theta), std::sin(theta)});
    }
    return cover;
  }

  // Latitude bands over the upper hemisphere (antipodal identification), a
  // full-sphere cover one dimension down inside each band. The lat spacing
  // and the in-band radius each consume half the angular budget.
  const auto bands = static_cast<std::size_t>(
      std::max(1.0, std::ceil((std::numbers::pi / 2.0) / alpha)));
  for (std::size_t j = 0; j < bands; ++j) {
    const double phi = (static_cast<double>(j) + 0.5) * (std::numbers::pi / 2.0) /
                       static_cast<double>(bands);
    const double s = std::sin(phi);
    std::vector<std::vector<double>> inner;
    const double inner_radius = (alpha / 2.0) / std::max(s, 1e-12);
    if (inner_radius >= std::numbers::pi) {
      inner.push_back(std::vector<double>(dim - 1, 0.0));
      inner.back()[0] = 1.0;
    } else {
      full_sphere_cover(dim - 1, inner_radius, inner);
    }
    for (const auto& w : inner) {
      std::vector<double> v(dim);
      for (std::size_t i = 0; i + 1 < dim; ++i) v[i] = s * w[i];
      v[dim - 1] = std::cos(phi);
      cover.directions.push_back(std::move(v));
    }
  }
  return cover;
}

DiameterResult direction_search_diameter(const PointSet& points, double eps, bool pre_snap) {
  if (eps <= 0.0) throw std::invalid_argument("direction_search_diameter: eps must be > 0");
  require_pairable(points, "direction_search_diameter");
  const auto t0 = Clock::now();

  const PointSet* work = &points;
  GridSnapResult snapped{PointSet(points.dim()), {}, {}, {}, bounding_box(points)};
  double cover_eps = eps;
  if (pre_snap) {
    snapped = grid_snap(points, eps / 2.0);
    work = &snapped.points;
    cover_eps = eps / 2.0;
  }
  auto original_id = [&](std::size_t row) {
    return pre_snap ? snapped.representative[row] : work->id(row);
  };

  DirectionCover cover = direction_cover(cover_eps, points.dim());
  const std::vector<std::size_t> rows = row_by_id(points);
  DiameterResult res;
  res.distance = -1.0;
  for (const auto& dir : cover.directions) {
    std::size_t row_min = 0, row_max = 0;
    double t_min = dot((*work)[0], dir), t_max = t_min;
    for (std::size_t r = 1; r < work->size(); ++r) {
      const double t = dot((*work)[r], dir);
      if (t < t_min) {
        t_min = t;
        row_min = r;
      }
      if (t > t_max) {
        t_max = t;
        row_max = r;
      }
    }
    const std::size_t i = original_id(row_min);
    const std::size_t j = original_id(row_max);
    const double dist = distance(points[rows[i]], points[rows[j]]);
    ++res.stats.distance_evaluations;
    if (dist > res.distance) {
      res.distance = dist;
      res.first = i;
      res.second = j;
    }
  }
  if (res.first == res.second) {
    res.first = points.id(0);
    res.second = points.id(1);
    res.distance = 0.0;
  }
  res.stats.wall_ms = elapsed_ms(t0);
  return res;
}

namespace {

struct Candidate {
  std::size_t i, j;  // original point ids
};

struct Vec2 {
  double x, y;
  std::size_t row;
};

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist2(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Exact planar farthest pair: monotone-chain hull, then rotating calipers
/// over the upper and lower chains. Returns row indices.
std::pair<std::size_t, std::size_t> farthest_pair_2d(const std::vector<Vec2>& input,
                                                     std::uint64_t& evals) {
  std::vector<Vec2> pts = input;
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());

  if (pts.size() <= 3) {
    std::size_t bi = 0, bj = pts.size() > 1 ? 1 : 0;
    double best = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        ++evals;
        if (dist2(pts[i], pts[j]) > best) {
          best = dist2(pts[i], pts[j]);
          bi = i;
          bj = j;
        }
      }
    return {pts[bi].row, pts[bj].row};
  }

  std::vector<Vec2> upper, lower;
  for (const Vec2& p : pts) {
    while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), p) >= 0)
      upper.pop_back();
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    upper.push_back(p);
    lower.push_back(p);
  }

  // Walk antipodal pairs: i ascends the upper chain, j descends the lower.
  std::size_t i = 0, j = lower.size() - 1;
  std::size_t bi = upper[0].row, bj = lower[j].row;
  double best = -1.0;
  while (i < upper.size() - 1 || j > 0) {
    ++evals;
    if (dist2(upper[i], lower[j]) > best) {
      best = dist2(upper[i], lower[j]);
      bi = upper[i].row;
      bj = lower[j].row;
    }
    if (i == upper.size() - 1) {
      --j;
    } else if (j == 0) {
      ++i;
    } else if ((upper[i + 1].y - upper[i].y) * (lower[j].x - lower[j - 1].x) >
               (lower[j].y - lower[j - 1].y) * (upper[i + 1].x - upper[i].x)) {
      ++i;
    } else {
      --j;
    }
  }
  ++evals;
  if (dist2(upper[i], lower[j]) > best) {
    bi = upper[i].row;
    bj = lower[j].row;
  }
  return {bi, bj};
}

struct ChanWork {
  std::vector<double> coords;     // row-major, `dim` columns
  std::vector<std::size_t> ids;   // row -> original point id
  std::size_t dim = 0;

  std::span<const double> row(std::size_t r) const { return {coords.data() + r * dim, dim}; }
  std::size_t size() const { return ids.size(); }
};

ChanWork clean_work(const ChanWork& work, double grid_eps) {
  PointSet tmp(work.dim);
  for (std::size_t r = 0; r < work.size(); ++r) tmp.add(work.row(r));
  GridSnapResult snapped = grid_snap(tmp, grid_eps);
  ChanWork out;
  out.dim = work.dim;
  for (std::size_t r = 0; r < snapped.points.size(); ++r) {
    auto p = snapped.points[r];
    out.coords.insert(out.coords.end(), p.begin(), p.end());
    out.ids.push_back(work.ids[snapped.representative[r]]);
  }
  return out;
}

void chan_recurse(const ChanWork& work, double eps, Chan2dBase base,
                  std::vector<Candidate>& candidates, RunStats& stats) {
  if (work.size() < 2) return;
  if (work.dim == 2) {
    if (base == Chan2dBase::ConvexHullExact) {
      std::vector<Vec2> pts(work.size());
      for (std::size_t r = 0; r < work.size(); ++r)
        pts[r] = {work.row(r)[0], work.row(r)[1], r};
      auto [a, b] = farthest_pair_2d(pts, stats.distance_evaluations);
      candidates.push_back({work.ids[a], work.ids[b]});
    } else {
      PointSet tmp(2);
      for (std::size_t r = 0; r < work.size(); ++r) tmp.add(work.row(r));
      DiameterResult sub = approx_diameter(tmp, eps, PairStrategy::Heap4Way);
      stats.pairs_created += sub.stats.pairs_created;
      stats.distance_evaluations += sub.stats.distance_evaluations;
      stats.nodes_built += sub.stats.nodes_built;
      stats.heap_ops += sub.stats.heap_ops;
      candidates.push_back({work.ids[sub.first], work.ids[sub.second]});
    }
    return;
  }

  // Budget per level: cleaning eps/8, projection-angle loss eps/4 (angle
  // sqrt(eps/2)), recursion eps/2; the geometric series stays below eps.
  const double dd = static_cast<double>(work.dim);
  ChanWork cleaned = clean_work(work, eps / (8.0 * std::sqrt(dd)));

  // Normals on the great circle spanned by the two widest box axes; some
  // hyperplane ends up within angle sqrt(eps/2) of any direction.
  PointSet tmp(cleaned.dim);
  for (std::size_t r = 0; r < cleaned.size(); ++r) tmp.add(cleaned.row(r));
  Aabb box = bounding_box(tmp);
  std::size_t a1 = 0, a2 = 1;
  for (std::size_t a = 0; a < cleaned.dim; ++a) {
    if (box.extent(a) > box.extent(a1)) {
      a2 = a1;
      a1 = a;
    } else if (a != a1 && box.extent(a) > box.extent(a2)) {
      a2 = a;
    }
  }
  if (a1 == a2) a2 = (a1 + 1) % cleaned.dim;

  const double angle = std::sqrt(eps / 2.0);
  const auto m = static_cast<std::size_t>(
      std::max(1.0, std::ceil(std::numbers::pi / (2.0 * angle))));
  for (std::size_t t = 0; t < m; ++t) {
    const double theta = (static_cast<double>(t) + 0.5) * std::numbers::pi /
                         static_cast<double>(m);
    const double c = std::cos(theta), s = std::sin(theta);
    // Basis of the hyperplane: all axes except a1/a2, plus the in-plane
    // tangent (-sin, cos).
    ChanWork projected;
    projected.dim = cleaned.dim - 1;
    projected.ids = cleaned.ids;
    projected.coords.reserve(cleaned.size() * projected.dim);
    for (std::size_t r = 0; r < cleaned.size(); ++r) {
      auto p = cleaned.row(r);
      for (std::size_t a = 0; a < cleaned.dim; ++a)
        if (a != a1 && a != a2) projected.coords.push_back(p[a]);
      projected.coords.push_back(-p[a1] * s + p[a2] * c);
    }
    chan_recurse(projected, eps / 2.0, base, candidates, stats);
  }
}

}  // namespace

DiameterResult diameter_2d_exact(const PointSet& points) {
  require_pairable(points, "diameter_2d_exact");
  if (points.dim() != 2) throw std::invalid_argument("diameter_2d_exact: dimension must be 2");
  const auto t0 = Clock::now();
  std::vector<Vec2> pts(points.size());
  for (std::size_t r = 0; r < points.size(); ++r) pts[r] = {points[r][0], points[r][1], r};
  DiameterResult res;
  auto [a, b] = farthest_pair_2d(pts, res.stats.distance_evaluations);
  res.first = std::min(points.id(a), points.id(b));
  res.second = std::max(points.id(a), points.id(b));
  res.distance = distance(points[a], points[b]);
  res.stats.wall_ms = elapsed_ms(t0);
  return res;
}

DiameterResult chan_diameter(const PointSet& points, double eps, Chan2dBase base2d) {
  if (eps <= 0.0) throw std::invalid_argument("chan_diameter: eps must be > 0");
  if (points.dim() < 2) throw std::invalid_argument("chan_diameter: dimension must be >= 2");
  if (points.empty()) throw std::invalid_argument("chan_diameter: empty point set");
  const auto t0 = Clock::now();
  DiameterResult res;
  if (points.size() == 1) return res;

  ChanWork work;
  work.dim = points.dim();
  work.coords.reserve(points.size() * work.dim);
  for (std::size_t r = 0; r < points.size(); ++r) {
    auto p = points[r];
    work.coords.insert(work.coords.end(), p.begin(), p.end());
    work.ids.push_back(points.id(r));
  }

  std::vector<Candidate> candidates;
  chan_recurse(work, eps, base2d, candidates, res.stats);

  const std::vector<std::size_t> rows = row_by_id(points);
  res.distance = -1.0;
  for (const Candidate& c : candidates) {
    const double dist = distance(points[rows[c.i]], points[rows[c.j]]);
    ++res.stats.distance_evaluations;
    if (dist > res.distance) {
      res.distance = dist;
      res.first = std::min(c.i, c.j);
      res.second = std::max(c.i, c.j);
    }
  }
  if (res.distance < 0.0) {  // no candidate produced (should not happen for n >= 2)
    res.distance = 0.0;
    res.first = points.id(0);
    res.second = points.id(1);
  }
  res.stats.wall_ms = elapsed_ms(t0);
  return res;
}

}  // namespace diam
