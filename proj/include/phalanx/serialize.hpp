#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "phalanx/core.hpp"
#include "phalanx/grasp.hpp"
#include "phalanx/hand.hpp"
#include "phalanx/reachability.hpp"

namespace phalanx {

using Json = nlohmann::json;

// FingerSpec: {"rho": n, "omega": n, "plane_offset": n, "origin": [x,y],
//              "direction": [x,y]}
Json to_json(const FingerSpec& spec);
FingerSpec finger_spec_from_json(const Json& j);

// ControlSequence: {"u": [0|1,...], "v": [0|1,...], "alpha": [n,...]?}
Json to_json(const ControlSequence& controls);
ControlSequence controls_from_json(const Json& j);

// HandSpec: {"delta": n, "fingers": [FingerSpec,...]}
Json to_json(const HandSpec& hand);
HandSpec hand_spec_from_json(const Json& j);

Json to_json(const Circle& circle);
Circle circle_from_json(const Json& j);

Json to_json(const ContactSet& contacts);
ContactSet contact_set_from_json(const Json& j);

Json to_json(const GraspReport& report);
GraspReport grasp_report_from_json(const Json& j);

// Hull / cloud as a JSON array of [x, y] pairs.
Json points_to_json(std::span<const Vec2> points);
std::vector<Vec2> points_from_json(const Json& j);

// CSV export. Junctions: "index,x,y" rows; clouds: "x,y" rows. Floats are
// printed round-trip exact, so identical inputs give identical bytes.
void write_junctions_csv(std::ostream& os, const Configuration& config);
void write_cloud_csv(std::ostream& os, std::span<const Vec2> points);

// File helpers; parse problems surface as BadInput.
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace phalanx
