#pragma once

#include <array>
#include <span>

#include "phalanx/core.hpp"
#include "phalanx/kinematics.hpp"

namespace phalanx {

// Smallest integer J with omega (J-1) < pi <= omega J. Requires
// omega in (0, pi), which forces J >= 2.
int rotation_count_J(double omega);

// Existence threshold for the primary grasped circle,
// 2 + tan(omega (J_w - 1)/2) * cot(omega/2); the circle exists iff
// rho is strictly below it.
double primary_circle_threshold(double omega);

bool primary_circle_exists(double rho, double omega);

// Minimal-extension grasp word of length J (J >= J_w + 1, else BadLength):
// u_j = 1 for j in {1} union [J_w, J], v_j = 1 for j <= J_w + 1, all force
// intensities zero until the equilibrium solver fills them in.
ControlSequence primary_grasping_controls(double omega, int J);

// Three contact points with their inward unit normals (pointing from the
// contact toward the circle center) and the 1-based indices of the
// phalanxes carrying them.
struct ContactSet {
  std::array<Vec2, 3> points{Vec2{0.0, 0.0}, Vec2{0.0, 0.0}, Vec2{0.0, 0.0}};
  std::array<Vec2, 3> normals{Vec2{0.0, 0.0}, Vec2{0.0, 0.0}, Vec2{0.0, 0.0}};
  std::array<int, 3> phalanx_indices{0, 0, 0};
};

struct PrimaryCircle {
  Circle circle;
  ContactSet contacts;
  ControlSequence controls;  // grasp word actually used (tail long enough
                             // for the third tangency to land on a phalanx)
};

// Constructs the circle tangent to the three support lines of the contact
// phalanxes of the primary grasping configuration, in the canonical frame.
// Throws NotGraspable when rho is at or above the existence threshold.
//
// The inradius follows from the two tangent lengths along the J_w-th
// phalanx: r = rho^{-J_w} / (tan(omega/2) + tan((J_w-1) omega/2)), which
// covers both the triangle case and the rhombus case (omega J_w = pi) as
// the continuous limit tan((J_w-1) omega/2) -> cot(omega/2).
PrimaryCircle primary_circle(double rho, double omega);

// Unit normals at the three contacts, all pointing into the circle:
// n_k = -e^{i(-k omega + pi/2)} for k = 1, J_w, J_w + 1.
std::array<Vec2, 3> contact_normals(double omega);

struct EquilibriumForces {
  std::array<double, 3> alphas;  // alpha_1, alpha_{J_w}, alpha_{J_w+1}
  double t;
};

// Force intensities balancing the three contact forces:
//   alpha_1 = t,
//   alpha_{J_w} = -t sin(omega J_w)/sin(omega),
//   alpha_{J_w+1} = t sin((J_w-1) omega)/sin(omega),
// with t = 1 when omega J_w = pi (within 1e-12) and otherwise the largest
// t <= 1 keeping every intensity within [0,1].
EquilibriumForces equilibrium_forces(double omega);

// Residuals of the static equilibrium: norm of the net force
// sum alpha_i n_i and the scalar moment sum (C_i - C) x (alpha_i n_i)
// about the circle center.
std::pair<double, double> check_equilibrium(const Circle& circle,
                                            const ContactSet& contacts,
                                            const std::array<double, 3>& alphas);

enum class MapDirection { Forward, Inverse };

// Maps a circle through the digit chain (similarities map circles to
// circles). Forward scales the radius by rho^{-J}, inverse by rho^{J};
// the two directions are mutually inverse.
Circle transform_object(const Circle& circle, std::span<const int> digits,
                        MapDirection direction, double rho, double omega);

struct GraspReport {
  Circle circle;
  ContactSet contacts;
  std::array<double, 3> alphas{0.0, 0.0, 0.0};
  double t = 0.0;
  double force_residual = 0.0;
  double moment_residual = 0.0;
  bool contact_ok = false;
  bool reachable_ok = false;
  bool stable_ok = false;
  ControlSequence controls;  // full word: prefix then grasp controls
};

// Prepends the motion prefix (forces zero) to the primary grasping
// controls, maps the primary circle forward through the prefix digits, and
// verifies the three grasping conditions independently. Contact is checked
// geometrically: the three tangency distances, each contact on its phalanx
// segment, and no phalanx of the whole configuration penetrating the
// circle.
GraspReport grasp_transformed_circle(double rho, double omega,
                                     const ControlSequence& prefix,
                                     double tol = kGeomTol);

inline GraspReport primary_grasp_report(double rho, double omega) {
  return grasp_transformed_circle(rho, omega, ControlSequence{});
}

}  // namespace phalanx
