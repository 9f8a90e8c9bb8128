#include "phalanx/core.hpp"

#include <cmath>
#include <sstream>

namespace phalanx {

Mat2 rotation_2x2(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat2 m;
  m << c, s, -s, c;
  return m;
}

FingerSpec validate_finger_spec(const FingerSpec& spec) {
  if (!(spec.rho > 1.0)) {
    std::ostringstream os;
    os << "scaling ratio must satisfy rho > 1, got " << spec.rho;
    throw RatioOutOfRange(os.str());
  }
  if (!(spec.omega > 0.0 && spec.omega < kPi)) {
    std::ostringstream os;
    os << "rotation angle must lie in (0, pi), got " << spec.omega;
    throw AngleOutOfRange(os.str());
  }
  if (std::abs(spec.base_direction.norm() - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "base direction must be unit length, |d| = " << spec.base_direction.norm();
    throw NonUnitDirection(os.str());
  }
  return spec;
}

const ControlSequence& validate_controls(const ControlSequence& controls) {
  if (controls.u.size() != controls.v.size()) {
    std::ostringstream os;
    os << "extension/rotation words differ in length: " << controls.u.size()
       << " vs " << controls.v.size();
    throw InvalidControls(os.str());
  }
  auto check_bits = [](const std::vector<int>& bits, const char* which) {
    for (int b : bits) {
      if (b != 0 && b != 1) {
        std::ostringstream os;
        os << which << " word contains non-binary entry " << b;
        throw InvalidControls(os.str());
      }
    }
  };
  check_bits(controls.u, "extension");
  check_bits(controls.v, "rotation");
  if (controls.alpha) {
    if (controls.alpha->size() != controls.u.size()) {
      std::ostringstream os;
      os << "alpha word length " << controls.alpha->size()
         << " does not match control length " << controls.u.size();
      throw InvalidControls(os.str());
    }
    for (double a : *controls.alpha) {
      if (!(a >= 0.0 && a <= 1.0)) {
        std::ostringstream os;
        os << "force intensity " << a << " outside [0,1]";
        throw InvalidControls(os.str());
      }
    }
  }
  return controls;
}

}  // namespace phalanx
