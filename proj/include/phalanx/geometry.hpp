#pragma once

#include "phalanx/core.hpp"

namespace phalanx {

inline double cross2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Distance from p to the closed segment [a, b]; [a, a] is a point.
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

// Distance from p to the infinite line through `point` with direction `dir`
// (dir need not be unit).
double point_line_distance(const Vec2& p, const Vec2& point, const Vec2& dir);

// Orthogonal projection of p onto the line through `point` with direction `dir`.
Vec2 project_on_line(const Vec2& p, const Vec2& point, const Vec2& dir);

// Minimum distance between two closed segments (0 when they cross).
double segment_segment_distance(const Vec2& a, const Vec2& b,
                                const Vec2& c, const Vec2& d);

}  // namespace phalanx
