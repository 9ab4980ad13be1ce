#include "seaweed_cli/svg.hpp"

#include <sstream>

#include "seaweed/meander.hpp"

namespace seaweed::cli {

namespace {

constexpr double kStep = 48.0;
constexpr double kMargin = 32.0;

double vx(int v) { return kMargin + (v - 1) * kStep; }

// Two half-arcs so the arrow marker can sit on the apex.
void arc(std::ostringstream& os, int from, int to, double y, bool above, const char* cls) {
  const double x0 = vx(from);
  const double x1 = vx(to);
  const double r = (x1 > x0 ? x1 - x0 : x0 - x1) / 2.0;
  const double mid = (x0 + x1) / 2.0;
  const double apex = above ? y - r : y + r;
  os << "  <path class=\"" << cls << "\" d=\"M " << x0 << ' ' << y << " A " << r << ' ' << r
     << " 0 0 0 " << mid << ' ' << apex << " A " << r << ' ' << r << " 0 0 0 " << x1 << ' ' << y
     << "\" marker-mid=\"url(#arrow)\"/>\n";
}

}  // namespace

std::string render_svg(const SeaweedSpec& spec) {
  const Meander m = build_meander(spec);
  const int n = spec.n();
  const double half = (n - 1) * kStep / 2.0 + kStep / 2.0;
  const double width = 2 * kMargin + (n - 1) * kStep;
  const double height = 2 * (half + kMargin);
  const double y = height / 2.0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <title>" << spec.to_string() << "</title>\n";
  os << "  <defs>\n"
        "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"8\" "
        "markerHeight=\"8\" orient=\"auto\">\n"
        "      <path d=\"M 0 0 L 10 5 L 0 10 z\"/>\n"
        "    </marker>\n"
        "  </defs>\n";
  os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& [p, q] : m.top_edges()) arc(os, q, p, y, true, "top");
  for (const auto& [p, q] : m.bottom_edges()) arc(os, p, q, y, false, "bottom");
  os << "  </g>\n";
  for (int v = 1; v <= n; ++v) {
    os << "  <circle class=\"vertex\" cx=\"" << vx(v) << "\" cy=\"" << y << "\" r=\"4\"/>\n";
    os << "  <text x=\"" << vx(v) << "\" y=\"" << y - 8 << "\" font-size=\"11\" "
          "text-anchor=\"middle\" dx=\"10\">v" << v << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace seaweed::cli
