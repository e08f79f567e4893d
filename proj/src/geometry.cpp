#include "diam/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diam {

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
}

PointSet PointSet::from_rows(std::size_t dim,
                             std::initializer_list<std::initializer_list<double>> rows) {
  PointSet ps(dim);
  for (const auto& row : rows) ps.add(std::span<const double>(row.begin(), row.size()));
  return ps;
}

void PointSet::add(std::span<const double> coords) {
  if (coords.size() != dim_)
    throw std::invalid_argument("PointSet::add: coordinate count does not match dimension");
  for (double c : coords)
    if (!std::isfinite(c)) throw std::invalid_argument("PointSet::add: non-finite coordinate");
  coords_.insert(coords_.end(), coords.begin(), coords.end());
  ids_.push_back(ids_.size());
}

void PointSet::add(std::initializer_list<double> coords) {
  add(std::span<const double>(coords.begin(), coords.size()));
}

std::span<const double> PointSet::operator[](std::size_t row) const {
  return {coords_.data() + row * dim_, dim_};
}

void PointSet::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(coords_.begin() + a * dim_, coords_.begin() + (a + 1) * dim_,
                   coords_.begin() + b * dim_);
  std::swap(ids_[a], ids_[b]);
}

bool PointSet::operator==(const PointSet& other) const {
  return dim_ == other.dim_ && coords_ == other.coords_ && ids_ == other.ids_;
}

double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

Aabb::Aabb(std::vector<double> lo, std::vector<double> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty() || lo_.size() != hi_.size())
    throw std::invalid_argument("Aabb: lo/hi must be nonempty and equally sized");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!std::isfinite(lo_[i]) || !std::isfinite(hi_[i]))
      throw std::invalid_argument("Aabb: non-finite bound");
    if (lo_[i] > hi_[i]) throw std::invalid_argument("Aabb: lo > hi");
  }
}

bool Aabb::contains(std::span<const double> p) const {
  if (p.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  return true;
}

Aabb bounding_box(const PointSet& points, std::size_t begin, std::size_t end) {
  if (begin >= end || end > points.size())
    throw std::invalid_argument("bounding_box: empty or out-of-range point range");
  std::vector<double> lo(points[begin].begin(), points[begin].end());
  std::vector<double> hi = lo;
  for (std::size_t r = begin + 1; r < end; ++r) {
    auto p = points[r];
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return Aabb(std::move(lo), std::move(hi));
}

Aabb bounding_box(const PointSet& points) { return bounding_box(points, 0, points.size()); }

CenterRadius center_and_radius(const Aabb& box) {
  std::vector<double> center(box.dim());
  double sum = 0.0;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    center[i] = (box.lo()[i] + box.hi()[i]) / 2.0;
    const double e = box.extent(i);
    sum += e * e;
  }
  return {std::move(center), std::sqrt(sum) / 2.0};
}

LongestEdge longest_edge(const Aabb& box) {
  std::size_t axis = 0;
  double best = box.extent(0);
  for (std::size_t i = 1; i < box.dim(); ++i) {
    if (box.extent(i) > best) {
      best = box.extent(i);
      axis = i;
    }
  }
  return {axis, best};
}

}  // namespace diam
