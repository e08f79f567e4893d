#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diam/baselines.hpp"
#include "diam/generators.hpp"
#include "diam/pair_diameter.hpp"
#include "test_util.hpp"

using diam::GenFamily;
using diam::GenSpec;
using diam::PointSet;

TEST_CASE("sphere points sit on the unit sphere") {
  PointSet one = diam::gen_sphere(1, 3);
  CHECK(one.size() == 1);

  PointSet ps = diam::gen_sphere(500, 11);
  for (std::size_t r = 0; r < ps.size(); ++r) {
    double norm = 0.0;
    for (double c : ps[r]) norm += c * c;
    CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-12);
  }
  CHECK(diam::brute_force_diameter(ps).distance <= 2.0 + 1e-12);

  // Statistical, calibrated once: dense spheres nearly realize the diameter.
  PointSet dense = diam::gen_sphere(5000, 1);
  CHECK(diam::brute_force_diameter(dense).distance >= 1.99);
}

TEST_CASE("sphere supports other dimensions") {
  PointSet circle = diam::gen_sphere(64, 5, 2);
  CHECK(circle.dim() == 2);
  PointSet s4 = diam::gen_sphere(64, 5, 5);
  CHECK(s4.dim() == 5);
  for (std::size_t r = 0; r < s4.size(); ++r) {
    double norm = 0.0;
    for (double c : s4[r]) norm += c * c;
    CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-12);
  }
}

TEST_CASE("cube points stay in the unit cube") {
  PointSet ps = diam::gen_cube(2000, 17, 3);
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (double c : ps[r]) {
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
    }
  // Exact refinement agrees with the oracle on this family.
  CHECK(diam::approx_diameter(ps, 0.0, diam::PairStrategy::Heap4Way).distance ==
        diam::brute_force_diameter(ps).distance);
}

TEST_CASE("ellipse hits its vertices with even sampling") {
  PointSet ps = diam::gen_ellipse(360, 2.0, 1.0);
  CHECK(ps.dim() == 3);
  for (std::size_t r = 0; r < ps.size(); ++r) CHECK(ps[r][2] == 0.0);
  CHECK(diam::brute_force_diameter(ps).distance == doctest::Approx(4.0).epsilon(1e-9));

  PointSet flat = diam::gen_ellipse(360, 3.0, 0.5, 2);
  CHECK(flat.dim() == 2);
  CHECK(diam::brute_force_diameter(flat).distance == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("arcs geometry") {
  PointSet two = diam::gen_arcs(2, 9);
  CHECK(two.size() == 2);
  const double chord = 2.0 * std::sin(0.05 / 2.0);
  const double sep = 100.0 * chord;
  CHECK(diam::distance(two[0], two[1]) == doctest::Approx(sep).epsilon(1e-6));

  CHECK_THROWS_AS(diam::gen_arcs(7, 1), std::invalid_argument);

  // Exhaustive at n=200: all inter-arc distances within [sep(1-d), sep(1+d)],
  // with d derived from the fourth-order spread of the construction.
  PointSet arcs = diam::gen_arcs(200, 13);
  const double delta = 1e-9;
  for (std::size_t i = 0; i < 100; ++i)
    for (std::size_t j = 100; j < 200; ++j) {
      const double dist = diam::distance(arcs[i], arcs[j]);
      CHECK(dist >= sep * (1 - delta));
      CHECK(dist <= sep * (1 + delta));
    }

  // Intra-arc spread stays two orders of magnitude below the separation.
  double intra = 0.0;
  for (std::size_t i = 0; i < 100; ++i)
    for (std::size_t j = i + 1; j < 100; ++j)
      intra = std::max(intra, diam::distance(arcs[i], arcs[j]));
  CHECK(intra * 10.0 < sep);
}

TEST_CASE("rotated arcs force quadratic work at eps=0 but not at eps=0.1") {
  PointSet arcs = diam::gen_arcs(1000, 42, 0.05, 0.0, true);
  const auto exact = diam::approx_diameter(arcs, 0.0, diam::PairStrategy::HeapWspd);
  CHECK(exact.stats.distance_evaluations >= 1000ull * 1000ull / 8ull);
  CHECK(exact.distance == diam::brute_force_diameter(arcs).distance);

  const auto loose = diam::approx_diameter(arcs, 0.1, diam::PairStrategy::HeapWspd);
  CHECK(loose.stats.distance_evaluations <= 50ull * 1000ull);
  CHECK(loose.distance >= 0.9 * exact.distance * (1 - 1e-12));
}

TEST_CASE("determinism: identical specs give identical point sets") {
  GenSpec spec;
  spec.family = GenFamily::Sphere;
  spec.n = 300;
  spec.seed = 123;
  PointSet a = diam::generate(spec);
  PointSet b = diam::generate(spec);
  CHECK(a == b);

  spec.seed = 124;
  PointSet c = diam::generate(spec);
  CHECK_FALSE(a == c);

  GenSpec arcs;
  arcs.family = GenFamily::Arcs;
  arcs.n = 64;
  arcs.seed = 5;
  arcs.rotate = true;
  CHECK(diam::generate(arcs) == diam::generate(arcs));
}

TEST_CASE("gen spec parsing round-trips") {
  GenSpec spec = diam::parse_gen_spec("sphere:n=1000:seed=7");
  CHECK(spec.family == GenFamily::Sphere);
  CHECK(spec.n == 1000);
  CHECK(spec.seed == 7);
  CHECK(diam::parse_gen_spec(diam::describe(spec)) == spec);

  GenSpec arcs = diam::parse_gen_spec("arcs:n=500:seed=3:width=0.02:rotate=1");
  CHECK(arcs.family == GenFamily::Arcs);
  CHECK(arcs.arc_width == 0.02);
  CHECK(arcs.rotate);
  CHECK(diam::parse_gen_spec(diam::describe(arcs)) == arcs);

  GenSpec ellipse = diam::parse_gen_spec("ellipse:n=360:a=2.5:b=0.5:dim=2");
  CHECK(ellipse.axis_a == 2.5);
  CHECK(ellipse.dim == 2);

  CHECK_THROWS_AS(diam::parse_gen_spec("torus:n=5"), std::invalid_argument);
  CHECK_THROWS_AS(diam::parse_gen_spec("cube:n"), std::invalid_argument);
  CHECK_THROWS_AS(diam::parse_gen_spec("cube:m=5"), std::invalid_argument);
}
