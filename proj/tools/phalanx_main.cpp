#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "phalanx/collision.hpp"
#include "phalanx/grasp.hpp"
#include "phalanx/hand.hpp"
#include "phalanx/kinematics.hpp"
#include "phalanx/reachability.hpp"
#include "phalanx/serialize.hpp"
#include "phalanx/svg.hpp"

namespace {

using namespace phalanx;

// "-" or empty means stdout; bare filenames land in $PHALANX_OUT_DIR when set.
std::string resolve_out(const std::string& out) {
  if (out.empty() || out == "-") return "-";
  if (out.find('/') == std::string::npos) {
    if (const char* dir = std::getenv("PHALANX_OUT_DIR")) {
      return std::string(dir) + "/" + out;
    }
  }
  return out;
}

void emit(const std::string& out, const std::string& text) {
  const std::string path = resolve_out(out);
  if (path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

void echo_params(const std::string& verb, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream os;
  os << "phalanx " << verb << ":";
  for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
  std::cerr << os.str() << '\n';
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::vector<int> parse_digits(const std::string& digits) {
  std::vector<int> out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c == ',' || c == ' ') continue;
    if (c < '1' || c > '4') throw BadInput(std::string("invalid digit '") + c + "' (expected 1..4)");
    out.push_back(c - '0');
  }
  return out;
}

struct AngleOpts {
  double omega = 2.0 * kPi / 3.0;
  bool degrees = false;
  double radians() const { return degrees ? omega * kPi / 180.0 : omega; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-similar finger model: kinematics, reachability, grasping"};
  app.require_subcommand(1);

  double rho = 2.0;
  AngleOpts angle;
  int depth = 6;
  double dedupe_tol = 1e-9;
  std::string out = "-";
  std::string format = "json";
  std::string controls_path;
  std::string prefix_path;
  std::string hand_path;
  std::string prefix_digits = "3";
  std::string thumb_path;
  std::string svg_path;
  bool rotated_demo = false;

  auto add_common = [&](CLI::App* sub, bool with_depth) {
    sub->add_option("--rho", rho, "scaling ratio (> 1)");
    sub->add_option("--omega", angle.omega, "rotation angle (radians unless --degrees)");
    sub->add_flag("--degrees", angle.degrees, "interpret --omega in degrees");
    if (with_depth) sub->add_option("--depth", depth, "control word length");
    sub->add_option("--out", out, "output path ('-' for stdout)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a configuration from a controls file");
  add_common(eval, false);
  eval->add_option("--controls", controls_path, "ControlSequence JSON file")->required();
  eval->add_option("--format", format, "csv | svg | json");

  CLI::App* reach = app.add_subcommand("reach", "enumerate the depth-k reachable set");
  add_common(reach, true);
  reach->add_option("--dedupe-tol", dedupe_tol, "dedupe grid pitch");
  reach->add_option("--format", format, "csv | svg | json");

  CLI::App* hull = app.add_subcommand("hull", "convex hull of the depth-k reachable set");
  add_common(hull, true);
  hull->add_option("--dedupe-tol", dedupe_tol, "dedupe grid pitch");

  CLI::App* check = app.add_subcommand("check-intersect", "self-intersection check / sweep");
  add_common(check, true);
  check->add_option("--controls", controls_path, "check one configuration instead of sweeping");

  CLI::App* grasp_circle = app.add_subcommand("grasp-circle", "primary (or prefix-transformed) grasp report");
  add_common(grasp_circle, false);
  grasp_circle->add_option("--prefix", prefix_path, "motion-prefix ControlSequence JSON file");

  CLI::App* grasp_family = app.add_subcommand("grasp-family", "grasp reports for every prefix word up to depth");
  add_common(grasp_family, true);
  grasp_family->add_option("--svg", svg_path, "also write an SVG of the circle family");

  CLI::App* hand_scene = app.add_subcommand("hand-scene", "cylinder grasp scene for a whole hand");
  hand_scene->add_option("--hand", hand_path, "HandSpec JSON file");
  hand_scene->add_option("--prefix", prefix_digits, "section digits, e.g. \"3\"");
  hand_scene->add_option("--thumb-controls", thumb_path, "drive the thumb explicitly (contact check only)");
  hand_scene->add_option("--out", out, "output path ('-' for stdout)");
  hand_scene->add_option("--svg", svg_path, "also write a per-finger SVG");
  hand_scene->add_flag("--rotated-demo", rotated_demo, "run the tilted-cylinder demo scene");

  try {
    app.parse(argc, argv);

    const double omega = angle.radians();
    FingerSpec spec;
    spec.rho = rho;
    spec.omega = omega;

    if (*eval) {
      echo_params("eval", {{"rho", num(rho)}, {"omega", num(omega)}, {"controls", controls_path},
                           {"format", format}});
      const ControlSequence controls = controls_from_json(load_json_file(controls_path));
      const Configuration config = evaluate_junctions(validate_finger_spec(spec), controls);
      if (format == "csv") {
        std::ostringstream os;
        write_junctions_csv(os, config);
        emit(out, os.str());
      } else if (format == "svg") {
        emit(out, svg_configuration(config));
      } else if (format == "json") {
        Json j;
        j["params"] = {{"rho", rho}, {"omega", omega}};
        j["junctions"] = points_to_json(config.junctions);
        emit(out, j.dump(2) + "\n");
      } else {
        std::cerr << "unknown format: " << format << '\n';
        return 2;
      }
    } else if (*reach) {
      echo_params("reach", {{"rho", num(rho)}, {"omega", num(omega)}, {"depth", std::to_string(depth)},
                            {"dedupe_tol", num(dedupe_tol)}, {"format", format}});
      const ReachableCloud cloud = enumerate_reachable(validate_finger_spec(spec), depth, dedupe_tol);
      if (format == "csv") {
        std::ostringstream os;
        write_cloud_csv(os, cloud.points);
        emit(out, os.str());
      } else if (format == "svg") {
        emit(out, svg_cloud(cloud.points, rho));
      } else if (format == "json") {
        Json j;
        j["params"] = {{"rho", rho}, {"omega", omega}, {"depth", depth}, {"dedupe_tol", dedupe_tol}};
        j["points"] = points_to_json(cloud.points);
        emit(out, j.dump(2) + "\n");
      } else {
        std::cerr << "unknown format: " << format << '\n';
        return 2;
      }
    } else if (*hull) {
      echo_params("hull", {{"rho", num(rho)}, {"omega", num(omega)}, {"depth", std::to_string(depth)}});
      const ReachableCloud cloud = enumerate_reachable(validate_finger_spec(spec), depth, dedupe_tol);
      const std::vector<Vec2> verts = convex_hull(cloud.points);
      emit(out, points_to_json(verts).dump(2) + "\n");
    } else if (*check) {
      echo_params("check-intersect", {{"rho", num(rho)}, {"omega", num(omega)},
                                      {"depth", std::to_string(depth)},
                                      {"controls", controls_path.empty() ? "(sweep)" : controls_path}});
      validate_finger_spec(spec);
      Json j;
      j["params"] = {{"rho", rho}, {"omega", omega}, {"depth", depth}};
      j["guarantee"] = no_self_intersection_guarantee(rho, omega);
      if (!controls_path.empty()) {
        const ControlSequence controls = controls_from_json(load_json_file(controls_path));
        const Configuration config = evaluate_junctions(spec, controls);
        const auto hit = self_intersection(config);
        j["safe"] = !hit.has_value();
        if (hit) {
          j["counterexample"] = {{"u", controls.u}, {"v", controls.v},
                                 {"pair", {hit->i, hit->j}}};
        } else {
          j["counterexample"] = nullptr;
        }
      } else {
        const auto found = sweep_self_intersections(spec, depth);
        j["safe"] = !found.has_value();
        if (found) {
          j["counterexample"] = {{"u", found->controls.u}, {"v", found->controls.v},
                                 {"pair", {found->pair.i, found->pair.j}}};
        } else {
          j["counterexample"] = nullptr;
        }
      }
      emit(out, j.dump(2) + "\n");
    } else if (*grasp_circle) {
      echo_params("grasp-circle", {{"rho", num(rho)}, {"omega", num(omega)},
                                   {"prefix", prefix_path.empty() ? "(none)" : prefix_path}});
      ControlSequence prefix;
      if (!prefix_path.empty()) prefix = controls_from_json(load_json_file(prefix_path));
      const GraspReport report = grasp_transformed_circle(rho, omega, prefix);
      Json j = to_json(report);
      j["params"] = {{"rho", rho}, {"omega", omega}};
      emit(out, j.dump(2) + "\n");
    } else if (*grasp_family) {
      echo_params("grasp-family", {{"rho", num(rho)}, {"omega", num(omega)},
                                   {"depth", std::to_string(depth)}});
      if (depth < 0 || depth > 6) {
        throw DepthCapExceeded("grasp-family depth must lie in [0, 6]");
      }
      std::vector<FamilyEntry> family;
      std::vector<int> word;
      // Iterate all digit words of length 0..depth in lexicographic order.
      auto walk = [&](auto&& self, int remaining) -> void {
        ControlSequence prefix;
        for (int d : word) {
          const auto [u, v] = controls_of_digit(d);
          prefix.u.push_back(u);
          prefix.v.push_back(v);
        }
        family.push_back({word, grasp_transformed_circle(rho, omega, prefix)});
        if (remaining == 0) return;
        for (int d = 1; d <= 4; ++d) {
          word.push_back(d);
          self(self, remaining - 1);
          word.pop_back();
        }
      };
      walk(walk, depth);
      Json arr = Json::array();
      for (const FamilyEntry& entry : family) {
        Json e;
        e["digits"] = entry.digits;
        e["circle"] = to_json(entry.report.circle);
        e["contact_ok"] = entry.report.contact_ok;
        e["reachable_ok"] = entry.report.reachable_ok;
        e["stable_ok"] = entry.report.stable_ok;
        e["graspable"] = entry.report.contact_ok && entry.report.reachable_ok &&
                         entry.report.stable_ok;
        arr.push_back(e);
      }
      Json j;
      j["params"] = {{"rho", rho}, {"omega", omega}, {"depth", depth}};
      j["family"] = arr;
      emit(out, j.dump(2) + "\n");
      if (!svg_path.empty()) write_text_file(resolve_out(svg_path), svg_grasp_family(family, rho));
    } else if (*hand_scene) {
      if (rotated_demo) {
        echo_params("hand-scene", {{"demo", "rotated-cylinder"}});
        const RotatedCylinderDemo demo = rotated_cylinder_demo();
        Json j;
        j["cylinder"] = {{"section", to_json(demo.cylinder.section)},
                         {"axis_point", {demo.axis_point.x(), demo.axis_point.y(), demo.axis_point.z()}},
                         {"axis_direction", {demo.cylinder.axis_direction.x(),
                                             demo.cylinder.axis_direction.y(),
                                             demo.cylinder.axis_direction.z()}}};
        Json fingers = Json::array();
        for (const DemoFinger& f : demo.fingers) {
          Json e;
          e["name"] = f.name;
          e["omega"] = f.spec.omega;
          e["plane_offset"] = f.spec.plane_offset;
          e["controls"] = to_json(f.controls);
          e["min_gap"] = f.min_gap;
          e["closest_approach"] = f.closest_approach;
          fingers.push_back(e);
        }
        j["fingers"] = fingers;
        emit(out, j.dump(2) + "\n");
        return 0;
      }
      if (hand_path.empty()) {
        std::cerr << "hand-scene requires --hand FILE (or --rotated-demo)\n";
        return 2;
      }
      echo_params("hand-scene", {{"hand", hand_path}, {"prefix", prefix_digits}});
      const HandSpec hand = hand_spec_from_json(load_json_file(hand_path));
      for (const std::string& w : validate_hand_spec(hand)) {
        std::cerr << "warning: " << w << '\n';
      }
      std::optional<ControlSequence> thumb;
      if (!thumb_path.empty()) thumb = controls_from_json(load_json_file(thumb_path));
      const std::vector<int> digits = parse_digits(prefix_digits);
      const std::vector<GraspReport> reports = grasp_cylinder_scene(hand, digits, thumb);
      Json arr = Json::array();
      for (const GraspReport& r : reports) arr.push_back(to_json(r));
      Json j;
      j["prefix"] = digits;
      j["all_pass"] = scene_all_pass(reports);
      j["reports"] = arr;
      emit(out, j.dump(2) + "\n");
      if (!svg_path.empty()) write_text_file(resolve_out(svg_path), svg_scene(hand, reports));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}
