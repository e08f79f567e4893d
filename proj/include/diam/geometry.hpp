#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace diam {

/// Dense storage for n points in R^d with a stable id per point.
///
/// Rows may be permuted in place (the fair-split tree partitions its working
/// copy this way); ids travel with their coordinates, so results can always
/// be reported in terms of the original insertion order.
class PointSet {
 public:
  explicit PointSet(std::size_t dim);

  static PointSet from_rows(std::size_t dim,
                            std::initializer_list<std::initializer_list<double>> rows);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  /// Appends a point; its id is the current size. Coordinates must be finite
  /// and match dim().
  void add(std::span<const double> coords);
  void add(std::initializer_list<double> coords);

  std::span<const double> operator[](std::size_t row) const;
  std::size_t id(std::size_t row) const { return ids_[row]; }

  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const PointSet& other) const;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<std::size_t> ids_;
};

/// Euclidean distance; throws std::invalid_argument on dimension mismatch.
double distance(std::span<const double> a, std::span<const double> b);

/// Axis-aligned box, lo[i] <= hi[i] for all i. Zero-width axes are allowed.
class Aabb {
 public:
  Aabb(std::vector<double> lo, std::vector<double> hi);

  std::size_t dim() const { return lo_.size(); }
  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }
  double extent(std::size_t axis) const { return hi_[axis] - lo_[axis]; }
  bool contains(std::span<const double> p) const;

 private:
  std::vector<double> lo_, hi_;
};

/// Tight bounding box of rows [begin, end); throws on an empty range.
Aabb bounding_box(const PointSet& points, std::size_t begin, std::size_t end);
Aabb bounding_box(const PointSet& points);

struct CenterRadius {
  std::vector<double> center;  // (lo + hi) / 2
  double radius;               // |hi - lo| / 2, half the box diagonal
};
CenterRadius center_and_radius(const Aabb& box);

struct LongestEdge {
  std::size_t axis;  // ties broken by lowest axis index
  double length;
};
LongestEdge longest_edge(const Aabb& box);

}  // namespace diam
