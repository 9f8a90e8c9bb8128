#include "phalanx/serialize.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace phalanx {

namespace {

Json vec2_json(const Vec2& v) { return Json::array({v.x(), v.y()}); }

Vec2 vec2_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw BadInput(std::string(what) + " must be a [x, y] number pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double number_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw BadInput(std::string("missing numeric field \"") + key + "\"");
  }
  return j[key].get<double>();
}

std::vector<int> bits_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw BadInput(std::string("missing bit array \"") + key + "\"");
  }
  std::vector<int> bits;
  bits.reserve(j[key].size());
  for (const Json& e : j[key]) {
    if (!e.is_number_integer()) {
      throw BadInput(std::string("non-integer entry in \"") + key + "\"");
    }
    bits.push_back(e.get<int>());
  }
  return bits;
}

}  // namespace

Json to_json(const FingerSpec& spec) {
  return Json{{"rho", spec.rho},
              {"omega", spec.omega},
              {"plane_offset", spec.plane_offset},
              {"origin", vec2_json(spec.origin)},
              {"direction", vec2_json(spec.base_direction)}};
}

FingerSpec finger_spec_from_json(const Json& j) {
  FingerSpec spec;
  spec.rho = number_field(j, "rho");
  spec.omega = number_field(j, "omega");
  if (j.contains("plane_offset")) spec.plane_offset = number_field(j, "plane_offset");
  if (j.contains("origin")) spec.origin = vec2_from(j["origin"], "origin");
  if (j.contains("direction")) spec.base_direction = vec2_from(j["direction"], "direction");
  return spec;
}

Json to_json(const ControlSequence& controls) {
  Json j{{"u", controls.u}, {"v", controls.v}};
  if (controls.alpha) j["alpha"] = *controls.alpha;
  return j;
}

ControlSequence controls_from_json(const Json& j) {
  ControlSequence controls;
  controls.u = bits_field(j, "u");
  controls.v = bits_field(j, "v");
  if (j.contains("alpha")) {
    if (!j["alpha"].is_array()) throw BadInput("\"alpha\" must be an array");
    controls.alpha = j["alpha"].get<std::vector<double>>();
  }
  return controls;
}

Json to_json(const HandSpec& hand) {
  Json fingers = Json::array();
  for (const FingerSpec& f : hand.fingers) fingers.push_back(to_json(f));
  return Json{{"delta", hand.delta}, {"fingers", fingers}};
}

HandSpec hand_spec_from_json(const Json& j) {
  HandSpec hand;
  hand.delta = number_field(j, "delta");
  if (!j.contains("fingers") || !j["fingers"].is_array()) {
    throw BadInput("hand spec needs a \"fingers\" array");
  }
  for (const Json& f : j["fingers"]) hand.fingers.push_back(finger_spec_from_json(f));
  return hand;
}

Json to_json(const Circle& circle) {
  return Json{{"center", vec2_json(circle.center)}, {"radius", circle.radius}};
}

Circle circle_from_json(const Json& j) {
  Circle c;
  c.center = vec2_from(j.at("center"), "center");
  c.radius = number_field(j, "radius");
  return c;
}

Json to_json(const ContactSet& contacts) {
  Json points = Json::array();
  Json normals = Json::array();
  Json indices = Json::array();
  for (int i = 0; i < 3; ++i) {
    points.push_back(vec2_json(contacts.points[static_cast<std::size_t>(i)]));
    normals.push_back(vec2_json(contacts.normals[static_cast<std::size_t>(i)]));
    indices.push_back(contacts.phalanx_indices[static_cast<std::size_t>(i)]);
  }
  return Json{{"points", points}, {"normals", normals}, {"phalanx_indices", indices}};
}

ContactSet contact_set_from_json(const Json& j) {
  ContactSet contacts;
  for (std::size_t i = 0; i < 3; ++i) {
    contacts.points[i] = vec2_from(j.at("points").at(i), "contact point");
    contacts.normals[i] = vec2_from(j.at("normals").at(i), "contact normal");
    contacts.phalanx_indices[i] = j.at("phalanx_indices").at(i).get<int>();
  }
  return contacts;
}

Json to_json(const GraspReport& report) {
  return Json{{"circle", to_json(report.circle)},
              {"contacts", to_json(report.contacts)},
              {"alphas", report.alphas},
              {"t", report.t},
              {"force_residual", report.force_residual},
              {"moment_residual", report.moment_residual},
              {"contact_ok", report.contact_ok},
              {"reachable_ok", report.reachable_ok},
              {"stable_ok", report.stable_ok},
              {"controls", to_json(report.controls)}};
}

GraspReport grasp_report_from_json(const Json& j) {
  GraspReport report;
  report.circle = circle_from_json(j.at("circle"));
  report.contacts = contact_set_from_json(j.at("contacts"));
  const auto alphas = j.at("alphas").get<std::vector<double>>();
  if (alphas.size() != 3) throw BadInput("grasp report needs 3 alphas");
  std::copy(alphas.begin(), alphas.end(), report.alphas.begin());
  report.t = number_field(j, "t");
  report.force_residual = number_field(j, "force_residual");
  report.moment_residual = number_field(j, "moment_residual");
  report.contact_ok = j.at("contact_ok").get<bool>();
  report.reachable_ok = j.at("reachable_ok").get<bool>();
  report.stable_ok = j.at("stable_ok").get<bool>();
  report.controls = controls_from_json(j.at("controls"));
  return report;
}

Json points_to_json(std::span<const Vec2> points) {
  Json arr = Json::array();
  for (const Vec2& p : points) arr.push_back(vec2_json(p));
  return arr;
}

std::vector<Vec2> points_from_json(const Json& j) {
  if (!j.is_array()) throw BadInput("expected an array of [x, y] pairs");
  std::vector<Vec2> points;
  points.reserve(j.size());
  for (const Json& e : j) points.push_back(vec2_from(e, "point"));
  return points;
}

namespace {

std::ostream& csv_float(std::ostream& os, double x) {
  os << std::setprecision(17) << x;
  return os;
}

}  // namespace

void write_junctions_csv(std::ostream& os, const Configuration& config) {
  os << "index,x,y\n";
  for (std::size_t k = 0; k < config.junctions.size(); ++k) {
    os << k << ',';
    csv_float(os, config.junctions[k].x()) << ',';
    csv_float(os, config.junctions[k].y()) << '\n';
  }
}

void write_cloud_csv(std::ostream& os, std::span<const Vec2> points) {
  os << "x,y\n";
  for (const Vec2& p : points) {
    csv_float(os, p.x()) << ',';
    csv_float(os, p.y()) << '\n';
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw BadInput("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot open file for writing: " + path);
  out << text;
}

}  // namespace phalanx
