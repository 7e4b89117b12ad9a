#include "crg/svg.hpp"

#include <iomanip>
#include <sstream>

namespace crg {

namespace {

constexpr double kUnit = 100.0;

void dot(std::ostringstream& os, const CycloScalar& z, int radius, const char* cls) {
  const auto [x, y] = complex_position(z);
  os << "  <circle class=\"" << cls << "\" cx=\"" << x * kUnit << "\" cy=\"" << -y * kUnit
     << "\" r=\"" << radius << "\"/>\n";
}

}  // namespace

std::string render_svg(const Rank1Window& w) {
  const double half = w.radius.to_double() + 0.5;
  const double lo = -half * kUnit;
  const double size = 2.0 * half * kUnit;
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo << ' ' << lo << ' ' << size << ' '
     << size << "\" width=\"" << size << "\" height=\"" << size << "\">\n";
  os << "  <rect x=\"" << lo << "\" y=\"" << lo << "\" width=\"" << size << "\" height=\"" << size
     << "\" fill=\"white\"/>\n";
  os << "  <g fill=\"black\">\n";
  for (const auto& z : w.lattice_points) dot(os, z, 5, "lattice");
  os << "  </g>\n  <g fill=\"crimson\">\n";
  for (const auto& z : w.hyperplane_points) dot(os, z, 2, "hyperplane");
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace crg
