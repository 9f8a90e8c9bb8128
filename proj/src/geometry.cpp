#include "phalanx/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace phalanx {

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double point_line_distance(const Vec2& p, const Vec2& point, const Vec2& dir) {
  return std::abs(cross2(dir, p - point)) / dir.norm();
}

Vec2 project_on_line(const Vec2& p, const Vec2& point, const Vec2& dir) {
  const Vec2 d = dir.normalized();
  return point + d.dot(p - point) * d;
}

double segment_segment_distance(const Vec2& a, const Vec2& b,
                                const Vec2& c, const Vec2& d) {
  const Vec2 ab = b - a;
  const Vec2 cd = d - c;
  // Proper crossing: endpoints of each segment on strictly opposite sides
  // of the other.
  const double d1 = cross2(ab, c - a);
  const double d2 = cross2(ab, d - a);
  const double d3 = cross2(cd, a - c);
  const double d4 = cross2(cd, b - c);
  if (((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
      ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))) {
    return 0.0;
  }
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

}  // namespace phalanx
