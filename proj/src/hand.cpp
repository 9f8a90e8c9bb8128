#include "phalanx/hand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "phalanx/geometry.hpp"

namespace phalanx {

namespace {

// Layout checks shared by the hand operations; the public validator
// additionally insists on a real hand (thumb + index).
void validate_hand_layout(const HandSpec& hand, std::size_t min_fingers) {
  if (hand.fingers.size() < min_fingers) {
    std::ostringstream os;
    os << "hand needs at least " << min_fingers << " finger(s), got " << hand.fingers.size();
    throw InvalidHandSpec(os.str());
  }
  if (!(hand.delta > 0.0)) {
    throw InvalidHandSpec("plane spacing delta must be positive");
  }
  for (const FingerSpec& f : hand.fingers) validate_finger_spec(f);

  auto expect_offset = [&](std::size_t idx, double want) {
    if (std::abs(hand.fingers[idx].plane_offset - want) > 1e-12) {
      std::ostringstream os;
      os << "finger " << idx + 1 << " must lie on plane z = " << want
         << ", got z = " << hand.fingers[idx].plane_offset;
      throw InvalidHandSpec(os.str());
    }
  };
  for (std::size_t h = 0; h < hand.fingers.size(); ++h) {
    expect_offset(h, h < 2 ? 0.0 : hand.delta * static_cast<double>(h - 1));
  }
}

}  // namespace

std::vector<std::string> validate_hand_spec(const HandSpec& hand) {
  validate_hand_layout(hand, 2);
  std::vector<std::string> warnings;
  if ((hand.fingers[0].origin - hand.fingers[1].origin).norm() > 1e-12) {
    warnings.push_back("thumb and index finger do not share their first junction");
  }
  return warnings;
}

std::vector<Vec3> embed_finger(const Configuration& config, const PlaneEmbedding& embedding) {
  if (std::abs(embedding.ex.norm() - 1.0) > 1e-9 || std::abs(embedding.ey.norm() - 1.0) > 1e-9 ||
      std::abs(embedding.ex.dot(embedding.ey)) > 1e-9) {
    throw BadInput("plane embedding axes must be orthonormal");
  }
  std::vector<Vec3> out;
  out.reserve(config.junctions.size());
  for (const Vec2& p : config.junctions) out.push_back(embedding.embed(p));
  return out;
}

std::vector<Vec3> embed_finger(const Configuration& config, const FingerSpec& spec) {
  return embed_finger(config, PlaneEmbedding::z_offset(spec.plane_offset));
}

HandReach hand_reachable(const HandSpec& hand, int depth, double dedupe_tol, int depth_cap) {
  validate_hand_layout(hand, 1);
  HandReach reach;
  reach.per_finger.reserve(hand.fingers.size());
  for (const FingerSpec& spec : hand.fingers) {
    const ReachableCloud cloud = enumerate_reachable(spec, depth, dedupe_tol, depth_cap);
    Mat2 place;
    place << spec.base_direction.x(), -spec.base_direction.y(),
             spec.base_direction.y(), spec.base_direction.x();
    const PlaneEmbedding embedding = PlaneEmbedding::z_offset(spec.plane_offset);
    std::vector<Vec3> points;
    points.reserve(cloud.points.size());
    for (const Vec2& p : cloud.points) {
      points.push_back(embedding.embed(spec.origin + place * p));
    }
    reach.all.insert(reach.all.end(), points.begin(), points.end());
    reach.per_finger.push_back(std::move(points));
  }
  return reach;
}

namespace {

ControlSequence controls_from_digits(std::span<const int> digits) {
  ControlSequence controls;
  controls.u.reserve(digits.size());
  controls.v.reserve(digits.size());
  for (int d : digits) {
    if (d < 1 || d > 4) {
      std::ostringstream os;
      os << "digit " << d << " outside 1..4";
      throw BadInput(os.str());
    }
    const auto [u, v] = controls_of_digit(d);
    controls.u.push_back(u);
    controls.v.push_back(v);
  }
  return controls;
}

// Contact-only check of an explicitly driven finger against the section:
// tangency of at least one extended phalanx, penetration of none.
GraspReport contact_only_report(const FingerSpec& spec, const ControlSequence& controls,
                                const Circle& section, double tol) {
  const Configuration config = evaluate_junctions(spec, controls);
  GraspReport report;
  report.circle = section;
  report.controls = controls;
  report.alphas = {0.0, 0.0, 0.0};
  report.t = 0.0;
  report.reachable_ok = true;
  report.force_residual = 0.0;
  report.moment_residual = 0.0;
  report.stable_ok = true;

  struct Near {
    double gap;
    int index;
    Vec2 closest;
  };
  std::vector<Near> nearest;
  bool penetrates = false;
  for (std::size_t k = 1; k < config.junctions.size(); ++k) {
    if (!controls.u[k - 1]) continue;
    const Vec2& a = config.junctions[k - 1];
    const Vec2& b = config.junctions[k];
    const double d = point_segment_distance(section.center, a, b);
    if (d < section.radius - tol) penetrates = true;
    const Vec2 foot = project_on_line(section.center, a, b - a);
    const Vec2 on_seg = (foot - a).dot(b - a) < 0.0 ? a : ((foot - b).dot(b - a) > 0.0 ? b : foot);
    nearest.push_back({d - section.radius, static_cast<int>(k), on_seg});
  }
  std::sort(nearest.begin(), nearest.end(),
            [](const Near& x, const Near& y) { return std::abs(x.gap) < std::abs(y.gap); });
  bool touches = !nearest.empty() && std::abs(nearest.front().gap) <= tol;
  report.contact_ok = touches && !penetrates;
  if (!nearest.empty()) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Near& n = nearest[std::min(i, nearest.size() - 1)];
      report.contacts.points[i] = n.closest;
      Vec2 inward = section.center - n.closest;
      report.contacts.normals[i] = inward.norm() > 0.0 ? Vec2(inward.normalized()) : Vec2(1.0, 0.0);
      report.contacts.phalanx_indices[i] = n.index;
    }
  }
  return report;
}

}  // namespace

namespace {

// Re-evaluates the contact condition of a standard report against an
// explicit section circle: same motion, tangency/penetration retested.
void retest_contact(GraspReport& report, const FingerSpec& spec, const Circle& section,
                    double tol) {
  report.circle = section;
  const Configuration config = evaluate_junctions(spec, report.controls);
  bool touches = false;
  bool penetrates = false;
  for (std::size_t k = 1; k < config.junctions.size(); ++k) {
    if (!report.controls.u[k - 1]) continue;
    const double d = point_segment_distance(section.center, config.junctions[k - 1],
                                            config.junctions[k]);
    if (d < section.radius - tol) penetrates = true;
    if (std::abs(d - section.radius) <= tol) touches = true;
  }
  report.contact_ok = touches && !penetrates;
}

}  // namespace

std::vector<GraspReport> grasp_cylinder_scene(const HandSpec& hand,
                                              std::span<const int> section_prefix,
                                              const std::optional<ControlSequence>& thumb_controls,
                                              const std::optional<Circle>& section,
                                              double tol) {
  validate_hand_layout(hand, 1);
  const std::size_t ref = hand.fingers.size() > 1 ? 1 : 0;
  const double rho = hand.fingers[ref].rho;
  const double omega = hand.fingers[ref].omega;
  for (std::size_t h = 1; h < hand.fingers.size(); ++h) {
    if (std::abs(hand.fingers[h].rho - rho) > 1e-12 ||
        std::abs(hand.fingers[h].omega - omega) > 1e-12) {
      std::ostringstream os;
      os << "finger " << h + 1 << " differs in (rho, omega) from the other non-thumb fingers";
      throw MixedSpecs(os.str());
    }
  }
  const bool thumb_standard = !thumb_controls.has_value();
  if (thumb_standard && (std::abs(hand.fingers[0].rho - rho) > 1e-12 ||
                         std::abs(hand.fingers[0].omega - omega) > 1e-12)) {
    throw MixedSpecs("thumb differs in (rho, omega); supply explicit thumb controls");
  }

  if (section) {
    // The object must sit where the finger can reach at all.
    FingerSpec canonical;
    canonical.rho = rho;
    canonical.omega = omega;
    const ReachableCloud cloud = enumerate_reachable(canonical, 10, 1e-6);
    const std::vector<Vec2> hull = convex_hull(cloud.points);
    if (distance_to_convex_polygon(section->center, hull) > 0.0) {
      throw NotGraspable("section lies outside the reachable hull");
    }
  }

  const ControlSequence prefix = controls_from_digits(section_prefix);
  GraspReport standard = grasp_transformed_circle(rho, omega, prefix, tol);
  if (section) {
    FingerSpec canonical;
    canonical.rho = rho;
    canonical.omega = omega;
    retest_contact(standard, canonical, *section, tol);
  }

  std::vector<GraspReport> reports;
  reports.reserve(hand.fingers.size());
  if (thumb_standard) {
    reports.push_back(standard);
  } else {
    reports.push_back(contact_only_report(hand.fingers[0], *thumb_controls,
                                          standard.circle, tol));
  }
  for (std::size_t h = 1; h < hand.fingers.size(); ++h) reports.push_back(standard);
  return reports;
}

namespace {

double segment_line_distance_3d(const Vec3& a, const Vec3& b,
                                const Vec3& line_point, const Vec3& line_dir) {
  const Vec3 d = line_dir.normalized();
  auto perp = [&](const Vec3& w) { return Vec3(w - w.dot(d) * d); };
  const Vec3 w0 = perp(a - line_point);
  const Vec3 u = perp(b - a);
  const double uu = u.squaredNorm();
  double t = 0.0;
  if (uu > 0.0) t = std::clamp(-w0.dot(u) / uu, 0.0, 1.0);
  return (w0 + t * u).norm();
}

}  // namespace

RotatedCylinderDemo rotated_cylinder_demo(double delta) {
  RotatedCylinderDemo demo;
  const double rho = 2.0;
  const double omega = kPi / 2.0;
  const PrimaryCircle base = primary_circle(rho, omega);

  demo.cylinder.section = base.circle;
  demo.axis_point = Vec3(base.circle.center.x(), base.circle.center.y(), 0.0);
  const double tilt = 2.0 * kPi / 3.0;
  demo.cylinder.axis_direction = Vec3(std::sin(tilt), 0.0, std::cos(tilt));

  auto finger = [&](std::string name, double om, double plane,
                    std::vector<int> u, std::vector<int> v) {
    DemoFinger f;
    f.name = std::move(name);
    f.spec.rho = rho;
    f.spec.omega = om;
    f.spec.plane_offset = plane;
    f.controls.u = std::move(u);
    f.controls.v = std::move(v);
    const Configuration config = evaluate_junctions(f.spec, f.controls);
    f.junctions = embed_finger(config, f.spec);
    f.min_gap = std::numeric_limits<double>::infinity();
    f.closest_approach = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < f.junctions.size(); ++k) {
      if (!f.controls.u[k - 1]) continue;
      const double d = segment_line_distance_3d(f.junctions[k - 1], f.junctions[k],
                                                demo.axis_point, demo.cylinder.axis_direction);
      const double gap = d - demo.cylinder.section.radius;
      f.min_gap = std::min(f.min_gap, gap);
      f.closest_approach = std::min(f.closest_approach, std::abs(gap));
    }
    return f;
  };

  demo.fingers.push_back(finger("thumb", kPi / 4.0, 0.0, {1, 1, 1, 1}, {1, 1, 0, 0}));
  demo.fingers.push_back(finger("index", omega, 0.0, {1, 1, 1, 1}, {0, 0, 1, 0}));
  demo.fingers.push_back(finger("last", omega, 3.0 * delta, {1, 1, 1, 1}, {0, 1, 1, 0}));
  return demo;
}

}  // namespace phalanx
