#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "phalanx/geometry.hpp"
#include "phalanx/kinematics.hpp"
#include "phalanx/reachability.hpp"

using namespace phalanx;

namespace {

FingerSpec canonical(double rho, double omega) {
  FingerSpec spec;
  spec.rho = rho;
  spec.omega = omega;
  return validate_finger_spec(spec);
}

ControlSequence word_from_bits(unsigned long code, int k) {
  ControlSequence c;
  for (int j = 0; j < k; ++j) {
    c.u.push_back(static_cast<int>((code >> (2 * j)) & 1u));
    c.v.push_back(static_cast<int>((code >> (2 * j + 1)) & 1u));
  }
  return c;
}

double min_distance(const Vec2& p, std::span<const Vec2> cloud) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& q : cloud) best = std::min(best, (p - q).norm());
  return best;
}

}  // namespace

TEST_CASE("ifs_maps: fixed points and contraction factor") {
  const double rho = 2.0;
  const double omega = 2.0 * kPi / 3.0;
  const auto maps = ifs_maps(rho, omega);

  CHECK(std::abs(maps[2].apply({0.0, 0.0}) - Complex{0.5, 0.0}) < 1e-15);  // f3(0) = 1/rho
  CHECK(std::abs(maps[0].apply({0.0, 0.0})) == 0.0);                       // f1(0) = 0
  CHECK(std::abs(maps[1].apply({0.0, 0.0})) == 0.0);                       // f2(0) = 0
  // f4(0) = e^{-i omega}/rho: the rotate-and-extend step.
  CHECK(std::abs(maps[3].apply({0.0, 0.0}) - std::polar(0.5, -omega)) < 1e-15);

  for (const AffineMap& f : maps) {
    CHECK(std::abs(std::abs(f.linear) - 1.0 / rho) < 1e-15);
  }
}

TEST_CASE("compose_maps basics and inverse identity") {
  const auto maps = ifs_maps(2.0, 2.0 * kPi / 3.0);

  const int single[] = {3};
  CHECK(std::abs(compose_maps(maps, single, {0.0, 0.0}) - Complex{0.5, 0.0}) < 1e-15);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const int chain[] = {4, 3, 2};
  for (int trial = 0; trial < 100; ++trial) {
    const Complex z{coord(rng), coord(rng)};
    const Complex w = compose_maps(maps, chain, z);
    CHECK(std::abs(compose_maps_inverse(maps, chain, w) - z) < 1e-12);
  }
}

TEST_CASE("digit chain reproduces the endpoint of its control word") {
  const double rho = 2.0;
  const double omega = 2.0 * kPi / 3.0;
  const FingerSpec spec = canonical(rho, omega);
  const auto maps = ifs_maps(rho, omega);

  const ControlSequence controls{{1, 1}, {1, 0}, std::nullopt};
  const auto digits = digit_sequence(controls);
  CHECK(digits == std::vector<int>{4, 3});
  CHECK(std::abs(compose_maps(maps, digits, {0.0, 0.0}) - evaluate_complex(spec, controls)) < 1e-14);
}

TEST_CASE("IFS/enumeration equivalence for all words up to length 8") {
  for (const auto& [rho, omega] :
       std::vector<std::pair<double, double>>{{2.0, 2.0 * kPi / 3.0}, {1.7, 1.0}}) {
    const FingerSpec spec = canonical(rho, omega);
    const auto maps = ifs_maps(rho, omega);
    for (int k = 0; k <= 8; ++k) {
      for (unsigned long code = 0; code < (1ul << (2 * k)); ++code) {
        const ControlSequence controls = word_from_bits(code, k);
        const Complex via_sum = evaluate_complex(spec, controls);
        const Complex via_maps = compose_maps(maps, digit_sequence(controls), {0.0, 0.0});
        if (std::abs(via_sum - via_maps) >= 1e-12) {
          REQUIRE(std::abs(via_sum - via_maps) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("enumerate_reachable small depths") {
  const double rho = 2.0;
  const double omega = 2.0 * kPi / 3.0;
  const FingerSpec spec = canonical(rho, omega);

  const ReachableCloud k0 = enumerate_reachable(spec, 0);
  REQUIRE(k0.points.size() == 1);
  CHECK(k0.points[0].norm() == 0.0);

  const ReachableCloud k1 = enumerate_reachable(spec, 1);
  REQUIRE(k1.points.size() == 3);
  CHECK(min_distance({0.0, 0.0}, k1.points) < 1e-12);
  CHECK(min_distance({0.5, 0.0}, k1.points) < 1e-12);
  CHECK(min_distance(to_vec2(std::polar(0.5, -omega)), k1.points) < 1e-12);

  const ReachableCloud k2 = enumerate_reachable(spec, 2);
  CHECK(k2.points.size() <= 16);
  const auto maps = ifs_maps(rho, omega);
  for (unsigned long code = 0; code < 16; ++code) {
    const ControlSequence controls = word_from_bits(code, 2);
    const Complex z = compose_maps(maps, digit_sequence(controls), {0.0, 0.0});
    CHECK(min_distance(to_vec2(z), k2.points) < 2.0 * k2.dedupe_tol);
  }
}

TEST_CASE("depth cap is enforced") {
  CHECK_THROWS_AS(enumerate_reachable(canonical(2.0, 1.0), 17), DepthCapExceeded);
  CHECK_THROWS_AS(enumerate_reachable(canonical(2.0, 1.0), -1), DepthCapExceeded);
}

TEST_CASE("monotonicity: R_k subset of R_{k+1}") {
  const FingerSpec spec = canonical(2.0, 2.0 * kPi / 3.0);
  ReachableCloud prev = enumerate_reachable(spec, 0);
  for (int k = 1; k <= 8; ++k) {
    const ReachableCloud next = enumerate_reachable(spec, k);
    for (const Vec2& p : prev.points) {
      if (min_distance(p, next.points) >= 2.0 * prev.dedupe_tol) {
        REQUIRE(min_distance(p, next.points) < 2.0 * prev.dedupe_tol);
      }
    }
    prev = next;
  }
}

TEST_CASE("hutchinson_iterate basics") {
  const double rho = 2.0;
  const double omega = 2.0 * kPi / 3.0;
  const FingerSpec spec = canonical(rho, omega);

  const std::vector<Vec2> seed{{0.0, 0.0}};
  const auto once = hutchinson_iterate(spec, seed, 1);
  REQUIRE(once.size() == 3);
  CHECK(min_distance({0.0, 0.0}, once) < 1e-12);
  CHECK(min_distance({0.5, 0.0}, once) < 1e-12);
  CHECK(min_distance(to_vec2(std::polar(0.5, -omega)), once) < 1e-12);

  const auto zero = hutchinson_iterate(spec, {{0.3, -0.4}, {1.0, 2.0}}, 0);
  REQUIRE(zero.size() == 2);

  // Contraction rate: d(F^{n+1}, F^n) <= (1/rho) d(F^n, F^{n-1}).
  const auto f7 = hutchinson_iterate(spec, seed, 7);
  const auto f8 = hutchinson_iterate(spec, seed, 8);
  const auto f9 = hutchinson_iterate(spec, seed, 9);
  const double d78 = hausdorff_distance(f7, f8);
  const double d89 = hausdorff_distance(f8, f9);
  CHECK(d89 <= d78 / rho + 1e-9);
}

TEST_CASE("closure relation: Hutchinson iterates equal the enumeration") {
  for (const auto& [rho, omega] :
       std::vector<std::pair<double, double>>{{2.0, 2.0 * kPi / 3.0}, {1.7, 1.0}}) {
    const FingerSpec spec = canonical(rho, omega);
    for (int k = 1; k <= 7; ++k) {
      const auto iterated = hutchinson_iterate(spec, {{0.0, 0.0}}, k);
      const ReachableCloud enumerated = enumerate_reachable(spec, k);
      CHECK(hausdorff_distance(iterated, enumerated.points) < 2.0 * enumerated.dedupe_tol);
    }
  }
}

TEST_CASE("size cap raises SizeCapExceeded") {
  const FingerSpec spec = canonical(2.0, 1.0);  // irrational omega/pi, clouds grow fast
  CHECK_THROWS_AS(hutchinson_iterate(spec, {{0.0, 0.0}}, 12, 1e-12, 1000), SizeCapExceeded);
}

TEST_CASE("alphabet remark: full rotation words are base-lambda expansions") {
  const double rho = 2.0;
  const double omega = 2.0 * kPi / 3.0;
  const FingerSpec spec = canonical(rho, omega);
  const Complex lambda = std::polar(rho, omega);
  const int k = 8;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    ControlSequence controls;
    Complex expansion{0.0, 0.0};
    Complex power{1.0, 0.0};
    for (int j = 0; j < k; ++j) {
      const int uj = static_cast<int>((mask >> j) & 1u);
      controls.u.push_back(uj);
      controls.v.push_back(1);
      power /= lambda;
      expansion += static_cast<double>(uj) * power;
    }
    const Complex endpoint = evaluate_complex(spec, controls);
    if (std::abs(endpoint - expansion) >= 1e-12) {
      REQUIRE(std::abs(endpoint - expansion) < 1e-12);
    }
  }
}

TEST_CASE("hull_vertices_2pi3 at rho = 2 and the large-rho limit") {
  const auto v = hull_vertices_2pi3(2.0);
  CHECK((v[0] - Vec2(1.0, 0.0)).norm() < 1e-14);
  CHECK((v[1] - Vec2(-0.5, -std::sqrt(3.0) / 2.0)).norm() < 1e-14);
  CHECK((v[2] - Vec2(-0.5, 0.0)).norm() < 1e-14);
  CHECK((v[3] - Vec2(-0.25, std::sqrt(3.0) / 4.0)).norm() < 1e-14);

  for (const Vec2& vert : hull_vertices_2pi3(1e9)) CHECK(vert.norm() < 1e-8);
}

TEST_CASE("depth-10 cloud lies inside the closed-form hull and the reach disc") {
  const FingerSpec spec = canonical(2.0, 2.0 * kPi / 3.0);
  const ReachableCloud cloud = enumerate_reachable(spec, 10);
  const auto verts = hull_vertices_2pi3(2.0);
  const std::vector<Vec2> hull(verts.begin(), verts.end());
  const std::vector<Vec2> ccw = convex_hull(hull);
  const double bound = 1.0 / (spec.rho - 1.0) + cloud.dedupe_tol;
  for (const Vec2& p : cloud.points) {
    if (distance_to_convex_polygon(p, ccw) >= 1e-9) {
      REQUIRE(distance_to_convex_polygon(p, ccw) < 1e-9);
    }
    if (p.norm() >= bound) REQUIRE(p.norm() < bound);
  }
}

TEST_CASE("convex_hull basics") {
  const std::vector<Vec2> tri{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  const auto hull = convex_hull(tri);
  CHECK(hull.size() == 3);
  double area2 = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    area2 += cross2(hull[i], hull[(i + 1) % hull.size()]);
  }
  CHECK(area2 > 0.0);  // counterclockwise

  const std::vector<Vec2> line{{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}, {0.5, 0.5}};
  const auto degenerate = convex_hull(line);
  CHECK(degenerate.size() == 2);

  CHECK(convex_hull(std::vector<Vec2>{{3.0, 4.0}}).size() == 1);
  CHECK_THROWS_AS(convex_hull(std::vector<Vec2>{}), BadInput);
}

TEST_CASE("convex_hull contains its input") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec2> pts;
    for (int i = 0; i < 40; ++i) pts.push_back({coord(rng), coord(rng)});
    const auto hull = convex_hull(pts);
    for (const Vec2& p : pts) CHECK(distance_to_convex_polygon(p, hull) < 1e-12);
  }
}

TEST_CASE("finite-depth hull approximates the closed-form four-vertex hull") {
  const FingerSpec spec = canonical(2.0, 2.0 * kPi / 3.0);
  const ReachableCloud cloud = enumerate_reachable(spec, 12);
  const auto hull = convex_hull(cloud.points);
  const auto verts = hull_vertices_2pi3(2.0);
  const std::vector<Vec2> closed_form = convex_hull(std::vector<Vec2>(verts.begin(), verts.end()));
  CHECK(convex_hausdorff_distance(hull, closed_form) < 1e-3);
}
