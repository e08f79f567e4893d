#include "diam/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace diam {

namespace {

/// Uniform in [0, 1) from the top 53 bits; fixed mapping so that generated
/// sets depend only on the seed, not on library internals.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Box-Muller; the (0,1] flip keeps log() away from zero.
double next_gaussian(std::mt19937_64& rng, bool& have_spare, double& spare) {
  if (have_spare) {
    have_spare = false;
    return spare;
  }
  const double u = 1.0 - next_uniform(rng);
  const double v = next_uniform(rng);
  const double r = std::sqrt(-2.0 * std::log(u));
  const double theta = 2.0 * std::numbers::pi * v;
  spare = r * std::sin(theta);
  have_spare = true;
  return r * std::cos(theta);
}

}  // namespace

PointSet gen_sphere(std::size_t n, std::uint64_t seed, std::size_t dim) {
  if (n < 1) throw std::invalid_argument("gen_sphere: n must be >= 1");
  if (dim < 2) throw std::invalid_argument("gen_sphere: dim must be >= 2");
  std::mt19937_64 rng(seed);
  bool have_spare = false;
  double spare = 0.0;
  PointSet ps(dim);
  std::vector<double> p(dim);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    do {
      norm = 0.0;
      for (std::size_t a = 0; a < dim; ++a) {
        p[a] = next_gaussian(rng, have_spare, spare);
        norm += p[a] * p[a];
      }
      norm = std::sqrt(norm);
    } while (norm < 1e-12);
    for (double& c : p) c /= norm;
    ps.add(p);
  }
  return ps;
}

PointSet gen_cube(std::size_t n, std::uint64_t seed, std::size_t dim) {
  if (n < 1) throw std::invalid_argument("gen_cube: n must be >= 1");
  std::mt19937_64 rng(seed);
  PointSet ps(dim);
  std::vector<double> p(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < dim; ++a) p[a] = next_uniform(rng);
    ps.add(p);
  }
  return ps;
}

PointSet gen_ellipse(std::size_t n, double axis_a, double axis_b, std::size_t dim) {
  if (n < 1) throw std::invalid_argument("gen_ellipse: n must be >= 1");
  if (dim != 2 && dim != 3) throw std::invalid_argument("gen_ellipse: dim must be 2 or 3");
  if (axis_a <= 0.0 || axis_b <= 0.0)
    throw std::invalid_argument("gen_ellipse: semi-axes must be positive");
  PointSet ps(dim);
  std::vector<double> p(dim, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    p[0] = axis_a * std::cos(t);
    p[1] = axis_b * std::sin(t);
    ps.add(p);
  }
  return ps;
}

PointSet gen_arcs(std::size_t n, std::uint64_t seed, double arc_width, double separation,
                  bool rotate) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("gen_arcs: n must be even and >= 2");
  if (arc_width <= 0.0 || arc_width >= std::numbers::pi)
    throw std::invalid_argument("gen_arcs: arc_width must be in (0, pi)");
  const double chord = 2.0 * std::sin(arc_width / 2.0);  // unit-radius reference chord
  const double sep = separation > 0.0 ? separation : 100.0 * chord;

  // Each arc lies on a circle of radius `sep` centered at the other arc's
  // midpoint, so every inter-arc distance equals sep up to fourth order in
  // the half-angle: with |pq|^2 = sep^2 (1 + 2(1-cos b)(1-cos g)), every
  // cross pair is a near-diametrical candidate. Tangents at the midpoints
  // run along y and z, mutually orthogonal.
  const double half = std::asin(std::min(0.999, chord / (2.0 * sep)));

  std::mt19937_64 rng(seed);
  PointSet ps(3);
  auto emit = [&](bool second) {
    const double t = (next_uniform(rng) - 0.5) * 2.0 * half;
    double p[3];
    if (!second) {  // through the origin, curving around (sep, 0, 0)
      p[0] = sep * (1.0 - std::cos(t));
      p[1] = sep * std::sin(t);
      p[2] = 0.0;
    } else {  // through (sep, 0, 0), curving around the origin
      p[0] = sep * std::cos(t);
      p[1] = 0.0;
      p[2] = sep * std::sin(t);
    }
    if (rotate) {
      // Fixed generic rotation: no coordinate axis stays aligned with the
      // inter-arc axis.
      static constexpr double ax = 0.23, ay = 0.61, az = 0.37;
      auto rot = [](double& u, double& v, double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        const double nu = c * u - s * v, nv = s * u + c * v;
        u = nu;
        v = nv;
      };
      rot(p[1], p[2], ax);
      rot(p[2], p[0], ay);
      rot(p[0], p[1], az);
    }
    ps.add({p[0], p[1], p[2]});
  };

  for (std::size_t i = 0; i < n / 2; ++i) emit(false);
  for (std::size_t i = 0; i < n / 2; ++i) emit(true);
  return ps;
}

PointSet generate(const GenSpec& spec) {
  switch (spec.family) {
    case GenFamily::Sphere:
      return gen_sphere(spec.n, spec.seed, spec.dim);
    case GenFamily::Arcs:
      return gen_arcs(spec.n, spec.seed, spec.arc_width, spec.separation, spec.rotate);
    case GenFamily::Cube:
      return gen_cube(spec.n, spec.seed, spec.dim);
    case GenFamily::Ellipse:
      return gen_ellipse(spec.n, spec.axis_a, spec.axis_b, spec.dim);
  }
  throw std::invalid_argument("generate: unknown family");
}

GenSpec parse_gen_spec(const std::string& text) {
  GenSpec spec;
  std::stringstream ss(text);
  std::string token;
  if (!std::getline(ss, token, ':')) throw std::invalid_argument("gen spec: empty descriptor");
  if (token == "sphere") {
    spec.family = GenFamily::Sphere;
  } else if (token == "arcs") {
    spec.family = GenFamily::Arcs;
  } else if (token == "cube") {
    spec.family = GenFamily::Cube;
  } else if (token == "ellipse") {
    spec.family = GenFamily::Ellipse;
  } else {
    throw std::invalid_argument("gen spec: unknown family '" + token + "'");
  }
  while (std::getline(ss, token, ':')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("gen spec: expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "n") {
        spec.n = std::stoull(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "dim") {
        spec.dim = std::stoull(value);
      } else if (key == "width") {
        spec.arc_width = std::stod(value);
      } else if (key == "sep") {
        spec.separation = std::stod(value);
      } else if (key == "rotate") {
        spec.rotate = value == "1" || value == "true";
      } else if (key == "a") {
        spec.axis_a = std::stod(value);
      } else if (key == "b") {
        spec.axis_b = std::stod(value);
      } else {
        throw std::invalid_argument("gen spec: unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("gen spec: bad value for '" + key + "'");
    }
  }
  return spec;
}

std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  switch (spec.family) {
    case GenFamily::Sphere:
      out << "sphere:n=" << spec.n << ":seed=" << spec.seed << ":dim=" << spec.dim;
      break;
    case GenFamily::Arcs:
      out << "arcs:n=" << spec.n << ":seed=" << spec.seed << ":width=" << spec.arc_width
          << ":sep=" << spec.separation << ":rotate=" << (spec.rotate ? 1 : 0);
      break;
    case GenFamily::Cube:
      out << "cube:n=" << spec.n << ":seed=" << spec.seed << ":dim=" << spec.dim;
      break;
    case GenFamily::Ellipse:
      out << "ellipse:n=" << spec.n << ":a=" << spec.axis_a << ":b=" << spec.axis_b
          << ":dim=" << spec.dim;
      break;
  }
  return out.str();
}

}  // namespace diam
