#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "phalanx/core.hpp"

namespace phalanx {

// Finite reachable set R_k as a deduplicated point cloud. Deduplication
// snaps to a grid of pitch dedupe_tol, so the cloud has approximate set
// semantics: two endpoints closer than the pitch may be merged.
struct ReachableCloud {
  std::vector<Vec2> points;
  int depth = 0;
  FingerSpec spec;
  double dedupe_tol = kGeomTol;
};

// The four contractions whose attractor is the asymptotic reachable set:
//   f1: x -> x/rho                 f2: x -> e^{-i omega} x / rho
//   f3: x -> (x+1)/rho             f4: x -> e^{-i omega} (x+1) / rho
// f_{digit_index(u,v)} is the step a control pair (u,v) prepends: extend
// (or not) by 1, rotate (or not) by omega, scale by 1/rho.
std::array<AffineMap, 4> ifs_maps(double rho, double omega);

// Applies the maps selected by `indices` (values in 1..4, given in control
// order) so that the first index's map is outermost:
//   result = f_{d_1}( f_{d_2}( ... f_{d_K}(point) ... ) ).
// With indices = digit_index of a control word, compose_maps(.., 0) equals
// the endpoint of that word.
Complex compose_maps(const std::array<AffineMap, 4>& maps,
                     std::span<const int> indices, Complex point);

// Unwinds compose_maps: applies f^{-1}_{d_1} first, f^{-1}_{d_K} last, so
// compose_maps_inverse(maps, idx, compose_maps(maps, idx, z)) == z.
Complex compose_maps_inverse(const std::array<AffineMap, 4>& maps,
                             std::span<const int> indices, Complex point);

// Digit sequence d_j = digit_index(u_j, v_j) of a control word.
std::vector<int> digit_sequence(const ControlSequence& controls);

inline constexpr int kDefaultDepthCap = 16;
inline constexpr std::size_t kDefaultSizeCap = 10'000'000;

// Endpoints of every control word of length `depth`, deduplicated on the
// dedupe_tol grid. Exact per-word evaluation up to 4^12 words; beyond that
// the suffix-set recursion (same values, intermediate dedupe) keeps the
// cost proportional to the number of distinct points.
ReachableCloud enumerate_reachable(const FingerSpec& spec, int depth,
                                   double dedupe_tol = kGeomTol,
                                   int depth_cap = kDefaultDepthCap,
                                   std::size_t size_cap = kDefaultSizeCap);

// n applications of the Hutchinson operator S -> union_j f_j(S), with
// grid-snap dedupe at every round. Converges to the attractor at rate
// 1/rho per iteration in Hausdorff distance.
std::vector<Vec2> hutchinson_iterate(const FingerSpec& spec,
                                     std::vector<Vec2> seed, int iterations,
                                     double dedupe_tol = kGeomTol,
                                     std::size_t size_cap = kDefaultSizeCap);

// Vertices of conv(R_inf(rho, 2pi/3)), in the order v1, v2, v3, v4:
//   v1 = 1/(rho-1)
//   v2 = e^{-i 2pi/3}/(rho-1)
//   v3 = e^{-i 2pi/3}/rho + e^{-i 4pi/3}/(rho (rho-1))
//   v4 = e^{-i 4pi/3}/(rho (rho-1))
std::array<Vec2, 4> hull_vertices_2pi3(double rho);

// Convex hull, counterclockwise vertex order. Collinear input degenerates
// to a 2-vertex hull (a single point to one vertex).
std::vector<Vec2> convex_hull(std::span<const Vec2> points);

// Distance from p to a convex polygon (0 inside or on the boundary).
double distance_to_convex_polygon(const Vec2& p, std::span<const Vec2> hull);

// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(std::span<const Vec2> a, std::span<const Vec2> b);

// Hausdorff distance between two convex regions given by their hulls.
double convex_hausdorff_distance(std::span<const Vec2> hull_a,
                                 std::span<const Vec2> hull_b);

}  // namespace phalanx
