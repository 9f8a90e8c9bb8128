#include "phalanx/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phalanx/kinematics.hpp"

namespace phalanx {

namespace {

struct Canvas {
  std::ostringstream os;
  double size;     // world half-extent
  double px;       // pixel size of the square canvas
  Vec2 center{0.0, 0.0};

  Canvas(double half_extent, double pixels = 640.0) : size(half_extent), px(pixels) {}

  double sx(double x) const { return (x - center.x() + size) / (2.0 * size) * px; }
  double sy(double y) const { return (size - (y - center.y())) / (2.0 * size) * px; }

  static std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << std::fixed << v;
    return s.str();
  }

  void open() {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px
       << "\" viewBox=\"0 0 " << px << " " << px << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  void close() { os << "</svg>\n"; }

  void polyline(std::span<const Vec2> pts, const char* color, double width) {
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
       << "\" points=\"";
    for (const Vec2& p : pts) os << fmt(sx(p.x())) << ',' << fmt(sy(p.y())) << ' ';
    os << "\"/>\n";
  }
  void dot(const Vec2& p, const char* color, double r) {
    os << "<circle cx=\"" << fmt(sx(p.x())) << "\" cy=\"" << fmt(sy(p.y())) << "\" r=\"" << r
       << "\" fill=\"" << color << "\"/>\n";
  }
  void circle(const Circle& c, const char* color, bool dashed) {
    os << "<circle cx=\"" << fmt(sx(c.center.x())) << "\" cy=\"" << fmt(sy(c.center.y()))
       << "\" r=\"" << fmt(c.radius / (2.0 * size) * px) << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"";
    if (dashed) os << " stroke-dasharray=\"4 3\"";
    os << "/>\n";
  }
};

double reach_bound(double rho) { return 1.1 / (rho - 1.0); }

void draw_configuration(Canvas& canvas, const Configuration& config) {
  canvas.polyline(config.junctions, "#1f4e8c", 2.0);
  for (std::size_t k = 0; k < config.junctions.size(); ++k) {
    canvas.dot(config.junctions[k], k == 0 ? "#c23b22" : "#1f4e8c", 3.0);
  }
}

}  // namespace

std::string svg_configuration(const Configuration& config) {
  Canvas canvas(reach_bound(config.spec.rho));
  canvas.center = config.spec.origin;
  canvas.open();
  draw_configuration(canvas, config);
  canvas.close();
  return canvas.os.str();
}

std::string svg_cloud(std::span<const Vec2> points, double rho) {
  Canvas canvas(reach_bound(rho));
  canvas.open();
  for (const Vec2& p : points) canvas.dot(p, "#1f4e8c", 1.2);
  canvas.close();
  return canvas.os.str();
}

std::string svg_grasp_family(std::span<const FamilyEntry> family, double rho) {
  Canvas canvas(reach_bound(rho));
  canvas.open();
  for (const FamilyEntry& entry : family) {
    const bool pass = entry.report.contact_ok && entry.report.reachable_ok &&
                      entry.report.stable_ok;
    canvas.circle(entry.report.circle, pass ? "#2a7d2a" : "#b0b0b0", !pass);
  }
  canvas.close();
  return canvas.os.str();
}

std::string svg_scene(const HandSpec& hand, std::span<const GraspReport> reports) {
  const std::size_t n = std::min(hand.fingers.size(), reports.size());
  const double panel = 320.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panel * n << "\" height=\""
     << panel << "\" viewBox=\"0 0 " << panel * n << " " << panel << "\">\n";
  for (std::size_t h = 0; h < n; ++h) {
    Canvas canvas(reach_bound(hand.fingers[h].rho), panel);
    canvas.open();
    const Configuration config = evaluate_junctions(hand.fingers[h], reports[h].controls);
    draw_configuration(canvas, config);
    canvas.circle(reports[h].circle, "#2a7d2a", false);
    canvas.close();
    os << "<g transform=\"translate(" << panel * h << ",0)\">\n" << canvas.os.str() << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace phalanx
