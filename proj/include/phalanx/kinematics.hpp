#pragma once

#include <vector>

#include "phalanx/core.hpp"

namespace phalanx {

// Cumulative rotation angles Omega_1..Omega_K; Omega_j increases by omega
// exactly at steps with rotation bit 1.
struct CumulativeAngles {
  std::vector<double> omegas;
};

CumulativeAngles cumulative_angles(const std::vector<int>& v, double omega);

// Evaluates the junction sequence of a finger under the given controls.
//
// State is carried as (position, frame) pairs: the frame E_k advances on
// every rotation bit even when the phalanx does not extend, so "invisible"
// rotations are stored and become effective at the next extension.
Configuration evaluate_junctions(const FingerSpec& spec, const ControlSequence& controls);

// Endpoint sum_{j=1..K} u_j / rho^j * e^{-i Omega_j} in the canonical frame
// (origin 0, base direction (1,0)); spec.origin and spec.base_direction are
// ignored, callers post-compose a rigid motion for general placement.
Complex evaluate_complex(const FingerSpec& spec, const ControlSequence& controls);

}  // namespace phalanx
