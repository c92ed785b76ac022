#include "hypmetric/metrics.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "hypmetric/errors.hpp"

namespace hypmetric {

namespace {

void require_positive_c(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ArgumentError("constant c must be a positive finite number");
}

double guarded_distance(const Domain& domain, const Point& x) {
  const double d = dist_to_boundary(domain, x);
  if (d < kBoundaryGuard) throw DomainError("point (" + to_string(x) + ") is numerically on the boundary");
  return d;
}

void require_same_dim(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw ArgumentError("points have different dimensions");
}

}  // namespace

double h_metric(const Domain& domain, double c, const Point& x, const Point& y) {
  require_positive_c(c);
  const double dx = guarded_distance(domain, x);
  const double dy = guarded_distance(domain, y);
  return std::log1p(c * distance(x, y) / std::sqrt(dx * dy));
}

long double h_metric_extended(const Domain& domain, double c, const Point& x, const Point& y) {
  require_positive_c(c);
  guarded_distance(domain, x);
  guarded_distance(domain, y);
  const long double dx = dist_to_boundary_extended(domain, x);
  const long double dy = dist_to_boundary_extended(domain, y);
  long double sep2 = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const long double d = static_cast<long double>(x[i]) - static_cast<long double>(y[i]);
    sep2 += d * d;
  }
  return std::log1p(static_cast<long double>(c) * std::sqrt(sep2) / std::sqrt(dx * dy));
}

double th_half_h(const Domain& domain, double c, const Point& x, const Point& y) {
  require_positive_c(c);
  const double dx = guarded_distance(domain, x);
  const double dy = guarded_distance(domain, y);
  const double sep = distance(x, y);
  if (sep == 0.0) return 0.0;
  return sep / (sep + (2.0 / c) * std::sqrt(dx * dy));
}

double j_metric(const Domain& domain, const Point& x, const Point& y) {
  const double d = std::min(guarded_distance(domain, x), guarded_distance(domain, y));
  return std::log1p(distance(x, y) / d);
}

double j_star(const Domain& domain, const Point& x, const Point& y) {
  const double d = std::min(guarded_distance(domain, x), guarded_distance(domain, y));
  const double sep = distance(x, y);
  if (sep == 0.0) return 0.0;
  return sep / (sep + 2.0 * d);
}

double s_metric(const Domain& domain, const Point& x, const Point& y) {
  guarded_distance(domain, x);
  guarded_distance(domain, y);
  const double sep = distance(x, y);
  if (sep == 0.0) return 0.0;
  return std::min(1.0, sep / path_infimum(domain, x, y));
}

double p_metric(const Domain& domain, const Point& x, const Point& y) {
  const double dx = guarded_distance(domain, x);
  const double dy = guarded_distance(domain, y);
  const double sep = distance(x, y);
  if (sep == 0.0) return 0.0;
  return sep / std::sqrt(sep * sep + 4.0 * dx * dy);
}

double rho_half_space(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (!(x.last() > 0.0) || !(y.last() > 0.0))
    throw DomainError("hyperbolic half-space distance needs positive last coordinates");
  return 2.0 * std::asinh(distance(x, y) / (2.0 * std::sqrt(x.last() * y.last())));
}

double rho_unit_ball(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const double rx = norm(x), ry = norm(y);
  if (!(rx < 1.0) || !(ry < 1.0)) throw DomainError("hyperbolic ball distance needs points with |x| < 1");
  const double gx = (1.0 - rx) * (1.0 + rx);
  const double gy = (1.0 - ry) * (1.0 + ry);
  return 2.0 * std::asinh(distance(x, y) / std::sqrt(gx * gy));
}

double h_from_rho(double c, double rho) {
  require_positive_c(c);
  if (!(rho >= 0.0)) throw ArgumentError("hyperbolic distance must be nonnegative");
  return std::log1p(2.0 * c * std::sinh(0.5 * rho));
}

bool MetricId::unconditionally_metric() const noexcept {
  switch (kind) {
    case Kind::J:
    case Kind::JStar:
    case Kind::S:
    case Kind::RhoHalfSpace:
    case Kind::RhoUnitBall: return true;
    default: return false;
  }
}

double evaluate(const MetricId& metric, const Domain& domain, const Point& x, const Point& y) {
  using K = MetricId::Kind;
  switch (metric.kind) {
    case K::H: return h_metric(domain, metric.c, x, y);
    case K::ThHalfH: return th_half_h(domain, metric.c, x, y);
    case K::J: return j_metric(domain, x, y);
    case K::JStar: return j_star(domain, x, y);
    case K::S: return s_metric(domain, x, y);
    case K::P: return p_metric(domain, x, y);
    case K::RhoHalfSpace:
      if (domain.kind() != DomainKind::HalfSpace) throw ArgumentError("rho_half_space needs the half-space domain");
      if (!contains(domain, x) || !contains(domain, y)) throw DomainError("point outside the half-space");
      return rho_half_space(x, y);
    case K::RhoUnitBall:
      if (domain.kind() != DomainKind::UnitBall) throw ArgumentError("rho_unit_ball needs the unit-ball domain");
      if (!contains(domain, x) || !contains(domain, y)) throw DomainError("point outside the unit ball");
      return rho_unit_ball(x, y);
  }
  throw ArgumentError("unknown metric");
}

MetricId parse_metric(std::string_view literal, const Domain& domain) {
  const std::string text(literal);
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  auto parse_c = [&]() {
    if (colon == std::string::npos) throw ParseError("metric '" + name + "' needs ':c=<value>'", text);
    const std::string arg = text.substr(colon + 1);
    if (arg.rfind("c=", 0) != 0) throw ParseError("expected 'c=<value>' in metric literal, got '" + arg + "'", arg);
    const std::string value = arg.substr(2);
    double c = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c);
    if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || !(c > 0.0) || !std::isfinite(c))
      throw ParseError("malformed constant '" + value + "' (need c > 0)", value);
    return c;
  };
  auto no_args = [&]() {
    if (colon != std::string::npos) throw ParseError("metric '" + name + "' takes no arguments", text);
  };
  using K = MetricId::Kind;
  if (name == "h") return MetricId::h(parse_c());
  if (name == "thh") return MetricId::th_half_h(parse_c());
  if (name == "j") return no_args(), MetricId::of(K::J);
  if (name == "jstar") return no_args(), MetricId::of(K::JStar);
  if (name == "s") return no_args(), MetricId::of(K::S);
  if (name == "p") return no_args(), MetricId::of(K::P);
  if (name == "rho") {
    no_args();
    if (domain.kind() == DomainKind::HalfSpace) return MetricId::of(K::RhoHalfSpace);
    if (domain.kind() == DomainKind::UnitBall) return MetricId::of(K::RhoUnitBall);
    throw ParseError("metric 'rho' is only defined on halfspace and ball domains", text);
  }
  throw ParseError("unknown metric '" + name + "'", name);
}

std::string to_literal(const MetricId& metric) {
  using K = MetricId::Kind;
  auto with_c = [&](const char* name) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, metric.c);
    return std::string(name) + ":c=" + std::string(buf, res.ptr);
  };
  switch (metric.kind) {
    case K::H: return with_c("h");
    case K::ThHalfH: return with_c("thh");
    case K::J: return "j";
    case K::JStar: return "jstar";
    case K::S: return "s";
    case K::P: return "p";
    case K::RhoHalfSpace:
    case K::RhoUnitBall: return "rho";
  }
  return "?";
}

}  // namespace hypmetric
