#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <variant>

namespace hypmetric::cli {

namespace {

constexpr double kSize = 480.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct View {
  double x0, y0, scale;
  double sx(double x) const { return (x - x0) * scale; }
  double sy(double y) const { return kSize - (y - y0) * scale; }
};

}  // namespace

std::string render_sphere_svg(const Domain& domain, const Point& center, const std::vector<SphereSample>& samples,
                              const std::optional<EuclideanBall>& exact,
                              const std::vector<EuclideanBall>& guides) {
  std::vector<EuclideanBall> circles = guides;
  if (exact) circles.push_back(*exact);
  double lo_x = center[0], hi_x = center[0], lo_y = center[1], hi_y = center[1];
  auto extend = [&](double x, double y) {
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  };
  for (const SphereSample& s : samples) extend(s.point[0], s.point[1]);
  for (const EuclideanBall& b : circles) {
    extend(b.center[0] - b.radius, b.center[1] - b.radius);
    extend(b.center[0] + b.radius, b.center[1] + b.radius);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12}) * 1.2;
  const View v{0.5 * (lo_x + hi_x) - 0.5 * span, 0.5 * (lo_y + hi_y) - 0.5 * span, kSize / span};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  os << "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";

  const auto line = [&](double ax, double ay, double bx, double by) {
    os << "<line x1=\"" << num(v.sx(ax)) << "\" y1=\"" << num(v.sy(ay)) << "\" x2=\"" << num(v.sx(bx)) << "\" y2=\""
       << num(v.sy(by)) << "\" stroke=\"black\"/>\n";
  };
  const auto dot = [&](const Point& p, double r, const char* color) {
    os << "<circle cx=\"" << num(v.sx(p[0])) << "\" cy=\"" << num(v.sy(p[1])) << "\" r=\"" << num(r) << "\" fill=\""
       << color << "\"/>\n";
  };
  const auto ring = [&](const Point& c, double r, const char* color) {
    os << "<circle cx=\"" << num(v.sx(c[0])) << "\" cy=\"" << num(v.sy(c[1])) << "\" r=\"" << num(r * v.scale)
       << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
  };

  const double left = v.x0, right = v.x0 + span;
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          line(left, 0.0, right, 0.0);
        } else if constexpr (std::is_same_v<T, UnitBall>) {
          ring(Point{0.0, 0.0}, 1.0, "black");
        } else if constexpr (std::is_same_v<T, PuncturedSpace>) {
          dot(g.p, 3.0, "black");
        } else if constexpr (std::is_same_v<T, TwicePunctured>) {
          dot(g.u, 3.0, "black");
          dot(g.v, 3.0, "black");
        } else if constexpr (std::is_same_v<T, SegmentComplement>) {
          line(g.u[0], g.u[1], g.v[0], g.v[1]);
        } else {
          line(g.lo[0], g.lo[1], g.hi[0], g.lo[1]);
          line(g.hi[0], g.lo[1], g.hi[0], g.hi[1]);
          line(g.hi[0], g.hi[1], g.lo[0], g.hi[1]);
          line(g.lo[0], g.hi[1], g.lo[0], g.lo[1]);
        }
      },
      domain.variant());

  for (const EuclideanBall& b : guides) ring(b.center, b.radius, "gray");
  if (exact) ring(exact->center, exact->radius, "red");
  for (const SphereSample& s : samples) dot(s.point, 1.5, s.multiple_crossings ? "orange" : "blue");
  dot(center, 2.5, "black");
  os << "</svg>\n";
  return os.str();
}

}  // namespace hypmetric::cli
