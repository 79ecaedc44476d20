#include "slicekit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "slicekit/error.hpp"
#include "slicekit/rational.hpp"

namespace slicekit {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kSquareLeft = 150.0, kSquareTop = 40.0, kSquareSide = 500.0;
constexpr double kBandLeft = 60.0, kBandRight = 740.0, kBandTop = 610.0, kBandHeight = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double sx(double y1) { return kSquareLeft + kSquareSide * y1; }
double sy(double y2) { return kSquareTop + kSquareSide * (1.0 - y2); }

// Endpoints of { y in [0,1]^2 : m1 y1 + m2 y2 = c }, if the line meets the square.
bool clip_line(double m1, double m2, double c, double& x0, double& y0, double& x1, double& y1) {
  std::vector<std::pair<double, double>> pts;
  auto push = [&](double a, double b) {
    if (a < -1e-12 || a > 1 + 1e-12 || b < -1e-12 || b > 1 + 1e-12) return;
    for (const auto& p : pts)
      if (std::abs(p.first - a) < 1e-12 && std::abs(p.second - b) < 1e-12) return;
    pts.emplace_back(a, b);
  };
  for (double e : {0.0, 1.0}) {
    push(e, (c - m1 * e) / m2);
    push((c - m2 * e) / m1, e);
  }
  if (pts.size() < 2) return false;
  x0 = pts[0].first, y0 = pts[0].second, x1 = pts[1].first, y1 = pts[1].second;
  return true;
}

}  // namespace

std::string render_grid(const ProblemInstance& inst, std::size_t depth) {
  if (inst.dimension() != 2) throw Error(ErrorKind::NotPlanar, "render requires l=2");
  const auto n = inst.base();
  const auto& a1 = inst.digit_sets()[0];
  const auto& a2 = inst.digit_sets()[1];

  // Rank-depth cubes as (corner numerator pair) at scale n^-depth.
  // Rank 0 is the unit square itself and is drawn unshaded.
  std::vector<std::pair<std::int64_t, std::int64_t>> cubes{{0, 0}};
  for (std::size_t k = 0; k < depth; ++k) {
    if (cubes.size() * a1.size() * a2.size() > kRenderCubeCap)
      throw Error(ErrorKind::TooLarge, "render would draw more than 10^5 cubes");
    std::vector<std::pair<std::int64_t, std::int64_t>> next;
    for (const auto& [p, q] : cubes)
      for (auto d1 : a1)
        for (auto d2 : a2) next.emplace_back(p * n + d1, q * n + d2);
    cubes = std::move(next);
  }
  double scale = 1.0;
  for (std::size_t k = 0; k < depth; ++k) scale /= static_cast<double>(n);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas)
      << "\" fill=\"white\"/>\n";
  svg << "<g class=\"cubes\">\n";
  if (depth == 0) cubes.clear();
  for (const auto& [p, q] : cubes) {
    const double y1 = static_cast<double>(p) * scale, y2 = static_cast<double>(q + 1) * scale;
    svg << "<rect class=\"cube\" x=\"" << num(sx(y1)) << "\" y=\"" << num(sy(y2)) << "\" width=\""
        << num(kSquareSide * scale) << "\" height=\"" << num(kSquareSide * scale)
        << "\" fill=\"#9bb7d4\" stroke=\"#34506b\" stroke-width=\"0.5\"/>\n";
  }
  svg << "</g>\n";
  svg << "<rect class=\"unit-square\" x=\"" << num(kSquareLeft) << "\" y=\"" << num(kSquareTop) << "\" width=\""
      << num(kSquareSide) << "\" height=\"" << num(kSquareSide) << "\" fill=\"none\" stroke=\"black\"/>\n";

  const auto m1 = static_cast<double>(inst.coefficients()[0]);
  const auto m2 = static_cast<double>(inst.coefficients()[1]);
  const auto lo = inst.m_lower(), hi = inst.m_upper();
  svg << "<g class=\"lines\">\n";
  for (std::int64_t u = n * lo; u <= n * hi; ++u) {
    double x0, y0, x1, y1;
    const double c = static_cast<double>(u) / static_cast<double>(n);
    if (!clip_line(m1, m2, c, x0, y0, x1, y1)) continue;
    svg << "<line class=\"level\" x1=\"" << num(sx(x0)) << "\" y1=\"" << num(sy(y0)) << "\" x2=\"" << num(sx(x1))
        << "\" y2=\"" << num(sy(y1)) << "\" stroke=\"" << (u % n == 0 ? "#b03030" : "#808080")
        << "\" stroke-width=\"" << (u % n == 0 ? "1.2" : "0.6") << "\"/>\n";
  }
  svg << "</g>\n";

  // Projection band: [m_*, m^*] laid out left to right.
  auto bx = [&](double v) {
    return kBandLeft + (kBandRight - kBandLeft) * (v - static_cast<double>(lo)) / static_cast<double>(hi - lo);
  };
  svg << "<g class=\"band\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (std::int64_t u = n * lo; u < n * hi; ++u) {
    const double left = bx(static_cast<double>(u) / static_cast<double>(n));
    const double right = bx(static_cast<double>(u + 1) / static_cast<double>(n));
    svg << "<rect class=\"interval\" x=\"" << num(left) << "\" y=\"" << num(kBandTop) << "\" width=\""
        << num(right - left) << "\" height=\"" << num(kBandHeight) << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text class=\"interval-label\" x=\"" << num((left + right) / 2) << "\" y=\""
        << num(kBandTop + kBandHeight / 2 + 4) << "\">I" << (u - n * lo) << "</text>\n";
  }
  for (std::int64_t t = lo; t < hi; ++t) {
    const double left = bx(static_cast<double>(t)), right = bx(static_cast<double>(t + 1));
    svg << "<line class=\"working\" x1=\"" << num(left + 2) << "\" y1=\"" << num(kBandTop + kBandHeight + 14)
        << "\" x2=\"" << num(right - 2) << "\" y2=\"" << num(kBandTop + kBandHeight + 14)
        << "\" stroke=\"#b03030\" stroke-width=\"2\"/>\n";
    svg << "<text class=\"working-label\" x=\"" << num((left + right) / 2) << "\" y=\""
        << num(kBandTop + kBandHeight + 32) << "\">J" << t << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace slicekit
