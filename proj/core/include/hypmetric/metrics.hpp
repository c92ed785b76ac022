#pragma once

#include <string>
#include <string_view>

#include "hypmetric/domains.hpp"
#include "hypmetric/point.hpp"

namespace hypmetric {

/// Any evaluation whose boundary distance falls below this is rejected as a
/// boundary point instead of overflowing.
inline constexpr double kBoundaryGuard = 1e-300;

/// h_{G,c}(x, y) = log(1 + c|x-y| / sqrt(d_G(x) d_G(y))).
double h_metric(const Domain& domain, double c, const Point& x, const Point& y);

/// tanh(h_{G,c}/2) = |x-y| / (|x-y| + (2/c) sqrt(d_G(x) d_G(y))).
double th_half_h(const Domain& domain, double c, const Point& x, const Point& y);

/// Distance ratio metric log(1 + |x-y| / min(d_G(x), d_G(y))).
double j_metric(const Domain& domain, const Point& x, const Point& y);

/// |x-y| / (|x-y| + 2 min(d_G(x), d_G(y))) = tanh(j/2).
double j_star(const Domain& domain, const Point& x, const Point& y);

/// Triangular ratio metric |x-y| / inf_{z in boundary}(|x-z| + |z-y|).
double s_metric(const Domain& domain, const Point& x, const Point& y);

/// Point pair function |x-y| / sqrt(|x-y|^2 + 4 d_G(x) d_G(y)). Not a metric
/// on every domain.
double p_metric(const Domain& domain, const Point& x, const Point& y);

/// Hyperbolic distance on {x_n > 0}: 2 arsinh(|x-y| / (2 sqrt(x_n y_n))).
double rho_half_space(const Point& x, const Point& y);

/// Hyperbolic distance on the unit ball: 2 arsinh(|x-y| / sqrt((1-|x|^2)(1-|y|^2))).
double rho_unit_ball(const Point& x, const Point& y);

/// log(1 + 2c sinh(rho/2)); equals h on the half-space when rho is the
/// hyperbolic distance there.
double h_from_rho(double c, double rho);

/// h_{G,c} evaluated in extended precision.
long double h_metric_extended(const Domain& domain, double c, const Point& x, const Point& y);

struct MetricId {
  enum class Kind { H, ThHalfH, J, JStar, S, P, RhoHalfSpace, RhoUnitBall };
  Kind kind = Kind::H;
  double c = 0.0;  // used by H and ThHalfH only

  static MetricId h(double c) { return {Kind::H, c}; }
  static MetricId th_half_h(double c) { return {Kind::ThHalfH, c}; }
  static MetricId of(Kind k) { return {k, 0.0}; }

  /// True for the kinds that satisfy the triangle inequality on every domain
  /// (j, j*, s, and the hyperbolic metrics). Whether h and th_half_h are metrics
  /// depends on c and the domain; p is not a metric in general.
  bool unconditionally_metric() const noexcept;
};

/// Dispatches to the functions above. Throws ArgumentError when a hyperbolic
/// metric is used with a domain other than its own.
double evaluate(const MetricId& metric, const Domain& domain, const Point& x, const Point& y);

/// "h:c=1.5", "thh:c=2", "j", "jstar", "s", "p", "rho". "rho" resolves to the
/// half-space or unit-ball metric according to `domain`.
MetricId parse_metric(std::string_view literal, const Domain& domain);
std::string to_literal(const MetricId& metric);

}  // namespace hypmetric
