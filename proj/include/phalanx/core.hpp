#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "phalanx/errors.hpp"

namespace phalanx {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Tolerance policy: geometric predicates default to 1e-9, algebraic
// identities to 1e-12. Both are overridable per call.
inline constexpr double kGeomTol = 1e-9;
inline constexpr double kAlgebraTol = 1e-12;

inline Complex to_complex(const Vec2& v) { return {v.x(), v.y()}; }
inline Vec2 to_vec2(Complex z) { return {z.real(), z.imag()}; }

// Geometric parameters of one finger. The in-plane geometry is 2D
// (finger-plane coordinates); plane_offset places the plane in 3D, which
// only the hand module uses.
struct FingerSpec {
  double rho = 2.0;                 // scaling ratio between phalanx lengths, > 1
  double omega = 2.0 * kPi / 3.0;   // rotation angle in (0, pi)
  double plane_offset = 0.0;        // z-coordinate of the finger plane
  Vec2 base_direction{1.0, 0.0};    // unit vector, direction of the unrotated first phalanx
  Vec2 origin{0.0, 0.0};            // first junction, plane coordinates
};

// Paired binary extension/rotation words, plus optional force intensities.
struct ControlSequence {
  std::vector<int> u;                          // extension bits
  std::vector<int> v;                          // rotation bits
  std::optional<std::vector<double>> alpha;    // force intensities in [0,1]

  std::size_t size() const { return u.size(); }
};

// Junction positions x_0..x_K with the per-step local frames E_0..E_K.
// Zero-length steps (u_k = 0) are retained so that indices align with the
// control indices; consumers skip them where needed.
struct Configuration {
  std::vector<Vec2> junctions;
  std::vector<Mat2> frames;
  FingerSpec spec;
  ControlSequence controls;
};

// One contraction of the reachable-set IFS, x -> linear * x + offset with
// |linear| = 1/rho < 1. Forward and inverse application are exact affine
// arithmetic on the complex plane.
struct AffineMap {
  Complex linear{1.0, 0.0};
  Complex offset{0.0, 0.0};

  Complex apply(Complex z) const { return linear * z + offset; }
  Complex apply_inverse(Complex w) const { return (w - offset) / linear; }
};

struct Circle {
  Vec2 center{0.0, 0.0};
  double radius = 1.0;
};

// Control pair -> IFS map index. Bijection {0,1}^2 -> {1,2,3,4}:
// (0,0)->1, (0,1)->2, (1,0)->3, (1,1)->4.
inline int digit_index(int u, int v) { return 1 + 2 * u + v; }

// Inverse of digit_index; returns the (u, v) pair of a map index.
inline std::pair<int, int> controls_of_digit(int digit) {
  return {(digit - 1) / 2, (digit - 1) % 2};
}

// Clockwise rotation by `angle`: maps (1,0) to (cos a, -sin a). The sign
// convention matches the e^{-i angle} factors used throughout.
Mat2 rotation_2x2(double angle);

// Throws RatioOutOfRange / AngleOutOfRange / NonUnitDirection.
FingerSpec validate_finger_spec(const FingerSpec& spec);

// Throws InvalidControls on length mismatch, non-binary entries, or alpha
// values outside [0,1].
const ControlSequence& validate_controls(const ControlSequence& controls);

}  // namespace phalanx
