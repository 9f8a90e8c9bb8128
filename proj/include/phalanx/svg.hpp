#pragma once

#include <span>
#include <string>
#include <vector>

#include "phalanx/core.hpp"
#include "phalanx/grasp.hpp"
#include "phalanx/hand.hpp"

namespace phalanx {

// Deterministic SVG rendering. The viewBox is computed from the reach
// bound 1/(rho-1) so everything a finger can reach fits in frame.

std::string svg_configuration(const Configuration& config);

std::string svg_cloud(std::span<const Vec2> points, double rho);

// Transformed-circle family: graspable circles solid, the rest dashed.
struct FamilyEntry {
  std::vector<int> digits;
  GraspReport report;
};
std::string svg_grasp_family(std::span<const FamilyEntry> family, double rho);

// One panel per finger plane: configuration plus section circle.
std::string svg_scene(const HandSpec& hand, std::span<const GraspReport> reports);

}  // namespace phalanx
