#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phalanx/core.hpp"
#include "phalanx/grasp.hpp"
#include "phalanx/reachability.hpp"

namespace phalanx {

// Rigid embedding of a finger plane into 3D: plane point (x, y) maps to
// origin + x ex + y ey with ex, ey orthonormal.
struct PlaneEmbedding {
  Vec3 origin{0.0, 0.0, 0.0};
  Vec3 ex{1.0, 0.0, 0.0};
  Vec3 ey{0.0, 1.0, 0.0};

  static PlaneEmbedding z_offset(double z) { return {{0.0, 0.0, z}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}; }
  Vec3 embed(const Vec2& p) const { return origin + p.x() * ex + p.y() * ey; }
};

// Fingers 1 and 2 (thumb and index) are coplanar at z = 0; finger h >= 3
// sits at z = delta (h - 2).
struct HandSpec {
  double delta = 0.25;
  std::vector<FingerSpec> fingers;
};

// Validates finger count (>= 2), each finger, and the plane-offset layout.
// Throws InvalidHandSpec; soft findings (thumb and index not sharing their
// first junction) come back as warnings.
std::vector<std::string> validate_hand_spec(const HandSpec& hand);

// Embeds the 2D junctions of a configuration into the finger's plane.
std::vector<Vec3> embed_finger(const Configuration& config, const PlaneEmbedding& embedding);
std::vector<Vec3> embed_finger(const Configuration& config, const FingerSpec& spec);

struct HandReach {
  std::vector<std::vector<Vec3>> per_finger;
  std::vector<Vec3> all;  // union, per-finger order preserved
};

// Depth-k reachable cloud of every finger, embedded and unioned.
HandReach hand_reachable(const HandSpec& hand, int depth,
                         double dedupe_tol = kGeomTol,
                         int depth_cap = kDefaultDepthCap);

// Infinite cylinder: a circular section in the z = 0 reference plane swept
// along the axis direction.
struct CylinderObject {
  Circle section;
  Vec3 axis_direction{0.0, 0.0, 1.0};
};

// Grasps a cylinder with axis normal to the finger planes: every finger
// runs the same planar grasp of the section (the prefix digits select the
// transformed copy of the primary circle). Non-thumb fingers must share
// (rho, omega) (else MixedSpecs). When thumb_controls is given, finger 1 is
// driven by it and checked for contact only (forces zero). Reports come
// back in finger order. A degenerate 1-finger "hand" reduces to
// grasp_transformed_circle.
//
// `section` overrides the grasped section: it must lie inside the finger's
// reachable hull (else NotGraspable), and the contact condition is then
// re-evaluated against it while the motion stays the standard grasp word.
std::vector<GraspReport> grasp_cylinder_scene(
    const HandSpec& hand, std::span<const int> section_prefix,
    const std::optional<ControlSequence>& thumb_controls = std::nullopt,
    const std::optional<Circle>& section = std::nullopt,
    double tol = kGeomTol);

inline bool scene_all_pass(const std::vector<GraspReport>& reports) {
  for (const GraspReport& r : reports) {
    if (!(r.contact_ok && r.reachable_ok && r.stable_ok)) return false;
  }
  return true;
}

// Scripted demo: cylinder whose section is the primary grasped circle of
// the omega = pi/2 finger tilted by 2pi/3 about Oy, grasped with the fixed
// control words of the three listed fingers (thumb omega = pi/4). Reports
// the per-phalanx clearance to the cylinder surface; no pass/fail, the
// numbers are the result.
struct DemoFinger {
  std::string name;
  FingerSpec spec;
  ControlSequence controls;
  std::vector<Vec3> junctions;
  double min_gap = 0.0;       // min over extended phalanxes of dist(segment, axis) - radius
  double closest_approach = 0.0;  // min absolute gap (how near a true contact)
};

struct RotatedCylinderDemo {
  CylinderObject cylinder;
  Vec3 axis_point{0.0, 0.0, 0.0};
  std::vector<DemoFinger> fingers;
};

RotatedCylinderDemo rotated_cylinder_demo(double delta = 0.25);

}  // namespace phalanx
