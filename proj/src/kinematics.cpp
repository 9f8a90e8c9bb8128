#include "phalanx/kinematics.hpp"

#include <cmath>

namespace phalanx {

CumulativeAngles cumulative_angles(const std::vector<int>& v, double omega) {
  CumulativeAngles out;
  out.omegas.reserve(v.size());
  double acc = 0.0;
  for (int bit : v) {
    acc += bit ? omega : 0.0;
    out.omegas.push_back(acc);
  }
  return out;
}

Configuration evaluate_junctions(const FingerSpec& spec, const ControlSequence& controls) {
  validate_controls(controls);
  const std::size_t K = controls.size();

  Configuration config;
  config.spec = spec;
  config.controls = controls;
  config.junctions.reserve(K + 1);
  config.frames.reserve(K + 1);

  // E_0 maps e1 to the base direction.
  Mat2 frame;
  frame << spec.base_direction.x(), -spec.base_direction.y(),
           spec.base_direction.y(), spec.base_direction.x();

  Vec2 x = spec.origin;
  config.junctions.push_back(x);
  config.frames.push_back(frame);

  double length = 1.0;  // 1/rho^k, updated per step
  for (std::size_t k = 1; k <= K; ++k) {
    length /= spec.rho;
    frame = rotation_2x2(controls.v[k - 1] ? spec.omega : 0.0) * frame;
    x += controls.u[k - 1] * length * frame.col(0);
    config.junctions.push_back(x);
    config.frames.push_back(frame);
  }
  return config;
}

Complex evaluate_complex(const FingerSpec& spec, const ControlSequence& controls) {
  validate_controls(controls);
  Complex z{0.0, 0.0};
  double angle = 0.0;
  double length = 1.0;
  for (std::size_t k = 0; k < controls.size(); ++k) {
    length /= spec.rho;
    if (controls.v[k]) angle += spec.omega;
    if (controls.u[k]) z += length * std::polar(1.0, -angle);
  }
  return z;
}

}  // namespace phalanx
