#include "phalanx/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <unordered_set>

#include "phalanx/geometry.hpp"
#include "phalanx/kinematics.hpp"

namespace phalanx {

namespace {

struct CellHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& c) const {
    std::uint64_t h = static_cast<std::uint64_t>(c.first) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::uint64_t>(c.second) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Set of points deduplicated on a grid of pitch tol. The first point seen
// in a cell is kept verbatim, so representatives are exact endpoints and
// the insertion order fixes the result deterministically.
class GridSet {
 public:
  GridSet(double tol, std::size_t cap) : tol_(tol), cap_(cap) {}

  void insert(const Vec2& p) {
    const std::pair<std::int64_t, std::int64_t> cell{
        static_cast<std::int64_t>(std::llround(p.x() / tol_)),
        static_cast<std::int64_t>(std::llround(p.y() / tol_))};
    if (cells_.insert(cell).second) {
      if (points_.size() >= cap_) {
        std::ostringstream os;
        os << "point set exceeds size cap " << cap_;
        throw SizeCapExceeded(os.str());
      }
      points_.push_back(p);
    }
  }

  std::vector<Vec2> take() && { return std::move(points_); }

 private:
  double tol_;
  std::size_t cap_;
  std::unordered_set<std::pair<std::int64_t, std::int64_t>, CellHash> cells_;
  std::vector<Vec2> points_;
};

void sort_points(std::vector<Vec2>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
  });
}

}  // namespace

std::array<AffineMap, 4> ifs_maps(double rho, double omega) {
  FingerSpec probe;
  probe.rho = rho;
  probe.omega = omega;
  validate_finger_spec(probe);
  const Complex straight{1.0 / rho, 0.0};
  const Complex rotated = std::polar(1.0 / rho, -omega);
  return {AffineMap{straight, {0.0, 0.0}},  // f1: retract
          AffineMap{rotated, {0.0, 0.0}},   // f2: retract + rotate
          AffineMap{straight, straight},    // f3: extend
          AffineMap{rotated, rotated}};     // f4: extend + rotate
}

namespace {

void require_digit(int d) {
  if (d < 1 || d > 4) {
    std::ostringstream os;
    os << "map index " << d << " outside 1..4";
    throw BadInput(os.str());
  }
}

}  // namespace

Complex compose_maps(const std::array<AffineMap, 4>& maps,
                     std::span<const int> indices, Complex point) {
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    require_digit(*it);
    point = maps[static_cast<std::size_t>(*it - 1)].apply(point);
  }
  return point;
}

Complex compose_maps_inverse(const std::array<AffineMap, 4>& maps,
                             std::span<const int> indices, Complex point) {
  for (int d : indices) {
    require_digit(d);
    point = maps[static_cast<std::size_t>(d - 1)].apply_inverse(point);
  }
  return point;
}

std::vector<int> digit_sequence(const ControlSequence& controls) {
  validate_controls(controls);
  std::vector<int> digits;
  digits.reserve(controls.size());
  for (std::size_t k = 0; k < controls.size(); ++k) {
    digits.push_back(digit_index(controls.u[k], controls.v[k]));
  }
  return digits;
}

namespace {

// Exact per-word enumeration: walks the control tree, accumulating the
// endpoint sum term by term. Rotation counts are integers, so the phase
// table keeps e^{-i n omega} consistent across every branch.
void enumerate_exact(int depth, const std::vector<double>& inv_pow,
                     const std::vector<Complex>& phase, int level, int rotations,
                     Complex z, GridSet& out) {
  if (level == depth) {
    out.insert(to_vec2(z));
    return;
  }
  const Complex term = inv_pow[static_cast<std::size_t>(level + 1)] *
                       phase[static_cast<std::size_t>(rotations)];
  const Complex term_rot = inv_pow[static_cast<std::size_t>(level + 1)] *
                           phase[static_cast<std::size_t>(rotations + 1)];
  enumerate_exact(depth, inv_pow, phase, level + 1, rotations, z, out);              // (0,0)
  enumerate_exact(depth, inv_pow, phase, level + 1, rotations + 1, z, out);          // (0,1)
  enumerate_exact(depth, inv_pow, phase, level + 1, rotations, z + term, out);       // (1,0)
  enumerate_exact(depth, inv_pow, phase, level + 1, rotations + 1, z + term_rot, out);  // (1,1)
}

}  // namespace

ReachableCloud enumerate_reachable(const FingerSpec& spec, int depth,
                                   double dedupe_tol, int depth_cap,
                                   std::size_t size_cap) {
  validate_finger_spec(spec);
  if (depth < 0 || depth > depth_cap) {
    std::ostringstream os;
    os << "enumeration depth " << depth << " outside [0, " << depth_cap << "]";
    throw DepthCapExceeded(os.str());
  }

  ReachableCloud cloud;
  cloud.depth = depth;
  cloud.spec = spec;
  cloud.dedupe_tol = dedupe_tol;

  GridSet set(dedupe_tol, size_cap);
  if (depth <= 12) {
    std::vector<double> inv_pow(static_cast<std::size_t>(depth) + 1);
    std::vector<Complex> phase(static_cast<std::size_t>(depth) + 1);
    inv_pow[0] = 1.0;
    for (int j = 1; j <= depth; ++j) {
      inv_pow[static_cast<std::size_t>(j)] = inv_pow[static_cast<std::size_t>(j - 1)] / spec.rho;
    }
    for (int n = 0; n <= depth; ++n) {
      phase[static_cast<std::size_t>(n)] = std::polar(1.0, -spec.omega * n);
    }
    enumerate_exact(depth, inv_pow, phase, 0, 0, {0.0, 0.0}, set);
  } else {
    // Suffix-set recursion: S_m = union over control pairs of
    // e^{-i v omega} (u + S_{m-1}) / rho, with S_0 = {0}. Identical values
    // to the full 4^depth walk up to intermediate dedupe, at cost
    // proportional to the number of distinct points per level.
    const Complex rot = std::polar(1.0, -spec.omega);
    std::vector<Complex> level{{0.0, 0.0}};
    for (int m = 1; m <= depth; ++m) {
      GridSet next(dedupe_tol, size_cap);
      for (Complex s : level) {
        next.insert(to_vec2(s / spec.rho));
        next.insert(to_vec2(rot * s / spec.rho));
        next.insert(to_vec2((s + 1.0) / spec.rho));
        next.insert(to_vec2(rot * (s + 1.0) / spec.rho));
      }
      const std::vector<Vec2> pts = std::move(next).take();
      level.clear();
      level.reserve(pts.size());
      for (const Vec2& p : pts) level.push_back(to_complex(p));
    }
    for (Complex s : level) set.insert(to_vec2(s));
  }

  cloud.points = std::move(set).take();
  sort_points(cloud.points);
  return cloud;
}

std::vector<Vec2> hutchinson_iterate(const FingerSpec& spec,
                                     std::vector<Vec2> seed, int iterations,
                                     double dedupe_tol, std::size_t size_cap) {
  const auto maps = ifs_maps(spec.rho, spec.omega);
  std::vector<Vec2> current = std::move(seed);
  for (int n = 0; n < iterations; ++n) {
    GridSet next(dedupe_tol, size_cap);
    for (const Vec2& p : current) {
      for (const AffineMap& f : maps) {
        next.insert(to_vec2(f.apply(to_complex(p))));
      }
    }
    current = std::move(next).take();
  }
  sort_points(current);
  return current;
}

std::array<Vec2, 4> hull_vertices_2pi3(double rho) {
  if (!(rho > 1.0)) {
    throw RatioOutOfRange("hull vertices require rho > 1");
  }
  const Complex w1 = std::polar(1.0, -2.0 * kPi / 3.0);
  const Complex w2 = std::polar(1.0, -4.0 * kPi / 3.0);
  return {to_vec2(Complex{1.0 / (rho - 1.0), 0.0}),
          to_vec2(w1 / (rho - 1.0)),
          to_vec2(w1 / rho + w2 / (rho * (rho - 1.0))),
          to_vec2(w2 / (rho * (rho - 1.0)))};
}

std::vector<Vec2> convex_hull(std::span<const Vec2> points) {
  if (points.empty()) {
    throw BadInput("convex hull of an empty point set");
  }
  std::vector<Vec2> pts(points.begin(), points.end());
  sort_points(pts);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return a == b; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;

  // Andrew monotone chain; strict turns only, so collinear interior points
  // are dropped.
  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

double distance_to_convex_polygon(const Vec2& p, std::span<const Vec2> hull) {
  if (hull.empty()) throw BadInput("distance to an empty polygon");
  if (hull.size() == 1) return (p - hull[0]).norm();
  if (hull.size() == 2) return point_segment_distance(p, hull[0], hull[1]);
  bool inside = true;
  double boundary = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vec2& a = hull[i];
    const Vec2& b = hull[(i + 1) % hull.size()];
    if (cross2(b - a, p - a) < 0.0) inside = false;
    boundary = std::min(boundary, point_segment_distance(p, a, b));
  }
  return inside ? 0.0 : boundary;
}

double hausdorff_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
  if (a.empty() || b.empty()) throw BadInput("Hausdorff distance of an empty set");
  auto directed = [](std::span<const Vec2> from, std::span<const Vec2> to) {
    double worst = 0.0;
    for (const Vec2& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec2& q : to) best = std::min(best, (p - q).squaredNorm());
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

double convex_hausdorff_distance(std::span<const Vec2> hull_a,
                                 std::span<const Vec2> hull_b) {
  double worst = 0.0;
  for (const Vec2& p : hull_a) worst = std::max(worst, distance_to_convex_polygon(p, hull_b));
  for (const Vec2& q : hull_b) worst = std::max(worst, distance_to_convex_polygon(q, hull_a));
  return worst;
}

}  // namespace phalanx
