#include "piercing/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace piercing {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string plane_svg(const SegmentFamily& fam, const StabLine& line, const std::string& title) {
  constexpr double width = 640, height = 480, margin = 40;
  double t0 = 0, t1 = 1, z0 = 0, z1 = 1;
  if (fam.size() > 0) {
    t0 = fam.abscissa(0).get_d();
    t1 = fam.abscissa(fam.size() - 1).get_d();
    z0 = fam.interval(0).lo().get_d();
    z1 = fam.interval(0).hi().get_d();
    for (std::size_t k = 0; k < fam.size(); ++k) {
      z0 = std::min(z0, fam.interval(k).lo().get_d());
      z1 = std::max(z1, fam.interval(k).hi().get_d());
    }
  }
  z0 = std::min({z0, line.at(Rat(t0)).get_d(), line.at(Rat(t1)).get_d()});
  z1 = std::max({z1, line.at(Rat(t0)).get_d(), line.at(Rat(t1)).get_d()});
  if (t1 - t0 < 1e-9) t0 -= 1, t1 += 1;
  if (z1 - z0 < 1e-9) z0 -= 1, z1 += 1;
  auto px = [&](double t) { return margin + (t - t0) / (t1 - t0) * (width - 2 * margin); };
  auto py = [&](double z) { return height - margin - (z - z0) / (z1 - z0) * (height - 2 * margin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const double t = fam.abscissa(k).get_d();
    const bool hit = fam.interval(k).contains(line.at(fam.abscissa(k)));
    out << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(py(fam.interval(k).lo().get_d())) << "\" x2=\"" << num(px(t))
        << "\" y2=\"" << num(py(fam.interval(k).hi().get_d())) << "\" stroke=\"" << (hit ? "#1f77b4" : "#999999")
        << "\" stroke-width=\"4\"/>\n";
  }
  out << "<line x1=\"" << num(px(t0)) << "\" y1=\"" << num(py(line.at(Rat(t0)).get_d())) << "\" x2=\"" << num(px(t1))
      << "\" y2=\"" << num(py(line.at(Rat(t1)).get_d())) << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace piercing
