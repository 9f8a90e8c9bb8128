#pragma once

#include <optional>
#include <utility>

#include "phalanx/core.hpp"
#include "phalanx/geometry.hpp"

namespace phalanx {

struct Segment {
  Vec2 a{0.0, 0.0};
  Vec2 b{0.0, 0.0};
};

// True iff the closed segments come within tol of each other. Zero-length
// segments act as points.
bool segments_intersect(const Segment& s1, const Segment& s2, double tol = kGeomTol);

// 1-based indices (i, j) of two offending phalanxes, i < j.
struct OffendingPair {
  int i = 0;
  int j = 0;
};

// Checks whether two non-adjacent nonzero-length phalanxes intersect, or
// whether adjacent ones fold back over their shared junction. Phalanxes
// with u = 0 are skipped; two extended phalanxes separated only by
// retracted ones count as adjacent. Returns the lexicographically smallest
// offending pair.
std::optional<OffendingPair> self_intersection(const Configuration& config,
                                               double tol = kGeomTol);

inline bool is_self_intersecting(const Configuration& config, double tol = kGeomTol) {
  return self_intersection(config, tol).has_value();
}

// True iff (rho, omega) falls under the no-self-intersection guarantee:
// omega = 2pi/3 (within 1e-12) and rho >= 2. False promises nothing.
bool no_self_intersection_guarantee(double rho, double omega);

struct SweepCounterexample {
  ControlSequence controls;
  OffendingPair pair;
};

// Exhaustive sweep over every control word of length <= depth. Returns the
// first (depth-first, control order (0,0),(0,1),(1,0),(1,1)) word whose
// configuration self-intersects, or nullopt if none does.
std::optional<SweepCounterexample> sweep_self_intersections(const FingerSpec& spec,
                                                            int depth,
                                                            double tol = kGeomTol);

}  // namespace phalanx
