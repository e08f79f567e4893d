#pragma once

#include <cstdint>
#include <string>

#include "diam/geometry.hpp"

namespace diam {

/// PRNG identifier recorded in generated-file metadata: mt19937_64 drawing
/// 53-bit uniforms, Gaussians via Box-Muller. Identical specs produce
/// identical point sets.
inline constexpr const char* kPrngId = "mt19937_64";

enum class GenFamily { Sphere, Arcs, Cube, Ellipse };

struct GenSpec {
  GenFamily family = GenFamily::Cube;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t dim = 3;        // cube and sphere
  double arc_width = 0.05;    // radians
  double separation = 0.0;    // 0 selects the default: 100 x arc chord
  bool rotate = false;        // arcs: turn the inter-arc axis off-grid
  double axis_a = 2.0, axis_b = 1.0;  // ellipse semi-axes

  bool operator==(const GenSpec&) const = default;
};

/// Uniform points on the unit sphere S^(dim-1); every norm is 1 up to 1e-12.
PointSet gen_sphere(std::size_t n, std::uint64_t seed, std::size_t dim = 3);

/// n/2 points on each of two tiny circular arcs whose supporting tangents are
/// orthogonal, with centers `separation` apart. All inter-arc distances sit
/// in a narrow band around the separation, which makes the exact diameter
/// quadratically hard when rotated off the coordinate axes. n must be even.
PointSet gen_arcs(std::size_t n, std::uint64_t seed, double arc_width = 0.05,
                  double separation = 0.0, bool rotate = false);

/// Uniform points in [0,1]^dim.
PointSet gen_cube(std::size_t n, std::uint64_t seed, std::size_t dim = 3);

/// n evenly spaced parameter samples on the ellipse with semi-axes (a, b);
/// for dim == 3 the ellipse is embedded in the plane z = 0. Even n hits both
/// major-axis vertices.
PointSet gen_ellipse(std::size_t n, double axis_a, double axis_b, std::size_t dim = 3);

PointSet generate(const GenSpec& spec);

/// Parses "family:key=value:..." descriptors, e.g. "sphere:n=1000:seed=7".
/// Keys: n, seed, dim, width, sep, rotate, a, b. Throws on unknown family or
/// key.
GenSpec parse_gen_spec(const std::string& text);

std::string describe(const GenSpec& spec);  // canonical descriptor round-trip

}  // namespace diam
