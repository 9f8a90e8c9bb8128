#include "phalanx/grasp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phalanx/geometry.hpp"
#include "phalanx/reachability.hpp"

namespace phalanx {

namespace {

constexpr double kAngleTol = 1e-12;

void require_omega(double omega) {
  if (!(omega > 0.0 && omega < kPi)) {
    std::ostringstream os;
    os << "omega must lie in (0, pi), got " << omega;
    throw AngleOutOfRange(os.str());
  }
}

}  // namespace

int rotation_count_J(double omega) {
  require_omega(omega);
  const double approx = (kPi - kAngleTol) / omega;
  if (approx > 1e9) {
    std::ostringstream os;
    os << "omega = " << omega << " is too small: J_w exceeds 1e9";
    throw AngleOutOfRange(os.str());
  }
  int J = std::max(1, static_cast<int>(std::floor(approx)));
  while (omega * J < kPi - kAngleTol) ++J;
  return J;
}

double primary_circle_threshold(double omega) {
  const int J = rotation_count_J(omega);
  return 2.0 + std::tan(omega * (J - 1) / 2.0) / std::tan(omega / 2.0);
}

bool primary_circle_exists(double rho, double omega) {
  return rho < primary_circle_threshold(omega);
}

ControlSequence primary_grasping_controls(double omega, int J) {
  const int Jw = rotation_count_J(omega);
  if (J < Jw + 1) {
    std::ostringstream os;
    os << "grasp word length " << J << " shorter than J_w + 1 = " << Jw + 1;
    throw BadLength(os.str());
  }
  ControlSequence controls;
  controls.u.resize(static_cast<std::size_t>(J));
  controls.v.resize(static_cast<std::size_t>(J));
  for (int j = 1; j <= J; ++j) {
    controls.u[static_cast<std::size_t>(j - 1)] = (j == 1 || j >= Jw) ? 1 : 0;
    controls.v[static_cast<std::size_t>(j - 1)] = (j <= Jw + 1) ? 1 : 0;
  }
  controls.alpha = std::vector<double>(static_cast<std::size_t>(J), 0.0);
  return controls;
}

std::array<Vec2, 3> contact_normals(double omega) {
  const int Jw = rotation_count_J(omega);
  auto normal = [&](int k) {
    return to_vec2(-std::polar(1.0, -k * omega + kPi / 2.0));
  };
  return {normal(1), normal(Jw), normal(Jw + 1)};
}

PrimaryCircle primary_circle(double rho, double omega) {
  require_omega(omega);
  if (!primary_circle_exists(rho, omega)) {
    std::ostringstream os;
    os << "no primary grasped circle: rho = " << rho
       << " is not below the threshold " << primary_circle_threshold(omega);
    throw NotGraspable(os.str());
  }
  const int Jw = rotation_count_J(omega);
  if (Jw > 1'000'000) {
    std::ostringstream os;
    os << "J_w = " << Jw << " phalanxes exceed the construction bound";
    throw AngleOutOfRange(os.str());
  }
  const double scale = std::pow(rho, -Jw);  // length of the J_w-th phalanx
  const double r = scale / (std::tan(omega / 2.0) + std::tan((Jw - 1) * omega / 2.0));
  const double t2 = r * std::tan(omega / 2.0);        // tangent length from x_{J_w}
  const double t1 = r * std::tan((Jw - 1) * omega / 2.0);  // tangent length from x_1

  // Extend the tail until it reaches the third tangency point. The
  // existence inequality bounds t2 strictly below the infinite-tail length
  // rho^{-J_w}/(rho-1), so this terminates.
  int J = Jw;
  double tail = 0.0;
  double len = scale;
  do {
    ++J;
    len /= rho;
    tail += len;
    if (J - Jw > 4096) {
      throw NotGraspable("third tangency unreachable within tail cap (rho at threshold)");
    }
  } while (tail < t2 * (1.0 - 1e-12));

  const Complex dir1 = std::polar(1.0, -omega);
  const Complex dirJ = std::polar(1.0, -Jw * omega);
  const Complex dirT = std::polar(1.0, -(Jw + 1) * omega);

  const Complex x1 = dir1 / rho;
  const Complex xJ = x1 + scale * dirJ;

  const Complex c1 = x1 - t1 * dir1;
  const Complex cJ = xJ - t2 * dirJ;
  const Complex cT = xJ + t2 * dirT;

  const auto normals = contact_normals(omega);
  const Vec2 center = to_vec2(cJ) + r * normals[1];

  PrimaryCircle out;
  out.circle = Circle{center, r};
  out.contacts = ContactSet{{to_vec2(c1), to_vec2(cJ), to_vec2(cT)}, normals, {1, Jw, J}};
  out.controls = primary_grasping_controls(omega, J);
  return out;
}

EquilibriumForces equilibrium_forces(double omega) {
  const int Jw = rotation_count_J(omega);
  const double s = std::sin(omega);
  EquilibriumForces out;
  if (std::abs(Jw * omega - kPi) < kAngleTol) {
    // sin(J_w omega) vanishes analytically; alpha_{J_w} is its limit 0.
    out.t = 1.0;
    out.alphas = {1.0, 0.0, std::sin((Jw - 1) * omega) / s};
  } else {
    const double sJ = std::sin(Jw * omega);
    const double sJ1 = std::sin((Jw - 1) * omega);
    out.t = std::min({1.0, -s / sJ, s / sJ1});
    out.alphas = {out.t, -out.t * sJ / s, out.t * sJ1 / s};
  }
  for (double& a : out.alphas) a = std::clamp(a, 0.0, 1.0);
  return out;
}

std::pair<double, double> check_equilibrium(const Circle& circle,
                                            const ContactSet& contacts,
                                            const std::array<double, 3>& alphas) {
  Vec2 force{0.0, 0.0};
  double moment = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Vec2 f = alphas[static_cast<std::size_t>(i)] * contacts.normals[static_cast<std::size_t>(i)];
    force += f;
    moment += cross2(contacts.points[static_cast<std::size_t>(i)] - circle.center, f);
  }
  return {force.norm(), moment};
}

Circle transform_object(const Circle& circle, std::span<const int> digits,
                        MapDirection direction, double rho, double omega) {
  const auto maps = ifs_maps(rho, omega);
  const Complex c = to_complex(circle.center);
  const double scale = std::pow(rho, static_cast<double>(digits.size()));
  if (direction == MapDirection::Forward) {
    return {to_vec2(compose_maps(maps, digits, c)), circle.radius / scale};
  }
  return {to_vec2(compose_maps_inverse(maps, digits, c)), circle.radius * scale};
}

GraspReport grasp_transformed_circle(double rho, double omega,
                                     const ControlSequence& prefix, double tol) {
  validate_controls(prefix);
  const PrimaryCircle primary = primary_circle(rho, omega);
  const EquilibriumForces eq = equilibrium_forces(omega);
  const std::size_t P = prefix.size();

  GraspReport report;
  report.t = eq.t;
  report.alphas = eq.alphas;

  // Concatenated word: motion prefix with zero force, then the grasp word
  // with the equilibrium intensities on the three contact phalanxes.
  ControlSequence full;
  full.u = prefix.u;
  full.v = prefix.v;
  full.u.insert(full.u.end(), primary.controls.u.begin(), primary.controls.u.end());
  full.v.insert(full.v.end(), primary.controls.v.begin(), primary.controls.v.end());
  std::vector<double> alpha(full.u.size(), 0.0);
  alpha[P + 0] = eq.alphas[0];
  alpha[P + static_cast<std::size_t>(primary.contacts.phalanx_indices[1]) - 1] = eq.alphas[1];
  alpha[P + static_cast<std::size_t>(primary.contacts.phalanx_indices[2]) - 1] = eq.alphas[2];
  full.alpha = std::move(alpha);
  report.controls = full;

  FingerSpec spec;
  spec.rho = rho;
  spec.omega = omega;
  const Configuration config = evaluate_junctions(spec, full);
  report.reachable_ok = true;

  // The grasp sub-configuration is the prefix similarity applied to the
  // canonical one, so circle, contacts and normals map through it.
  const std::vector<int> digits = digit_sequence(prefix);
  report.circle = transform_object(primary.circle, digits, MapDirection::Forward, rho, omega);
  int prefix_rotations = 0;
  for (int b : prefix.v) prefix_rotations += b;
  const Mat2 rot = rotation_2x2(prefix_rotations * omega);
  const auto maps = ifs_maps(rho, omega);
  for (int i = 0; i < 3; ++i) {
    const std::size_t si = static_cast<std::size_t>(i);
    report.contacts.points[si] =
        to_vec2(compose_maps(maps, digits, to_complex(primary.contacts.points[si])));
    report.contacts.normals[si] = rot * primary.contacts.normals[si];
    report.contacts.phalanx_indices[si] =
        primary.contacts.phalanx_indices[si] + static_cast<int>(P);
  }

  const auto [force_res, moment_res] =
      check_equilibrium(report.circle, report.contacts, report.alphas);
  report.force_residual = force_res;
  report.moment_residual = moment_res;
  report.stable_ok = force_res < tol && std::abs(moment_res) < tol &&
                     std::all_of(report.alphas.begin(), report.alphas.end(),
                                 [](double a) { return a >= 0.0 && a <= 1.0; });

  bool contact = true;
  for (int i = 0; i < 3; ++i) {
    const std::size_t si = static_cast<std::size_t>(i);
    const int k = report.contacts.phalanx_indices[si];
    const Vec2& a = config.junctions[static_cast<std::size_t>(k - 1)];
    const Vec2& b = config.junctions[static_cast<std::size_t>(k)];
    if (point_segment_distance(report.contacts.points[si], a, b) > tol) contact = false;
    const double line_dist = point_line_distance(report.circle.center, a, b - a);
    if (std::abs(line_dist - report.circle.radius) > tol) contact = false;
  }
  // No phalanx may cut into the circle; tangency is allowed.
  for (std::size_t k = 1; k < config.junctions.size(); ++k) {
    if (!full.u[k - 1]) continue;
    const double d = point_segment_distance(report.circle.center,
                                            config.junctions[k - 1], config.junctions[k]);
    if (d < report.circle.radius - tol) contact = false;
  }
  report.contact_ok = contact;
  return report;
}

}  // namespace phalanx
