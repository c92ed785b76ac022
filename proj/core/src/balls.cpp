#include "hypmetric/balls.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hypmetric/errors.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/parallel.hpp"

namespace hypmetric {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ArgumentError(std::string(what) + " must be a positive finite number");
}

void require_upper_half(const Point& x) {
  if (x.dim() < 2) throw ArgumentError("dimension must be at least 2");
  if (!(x.last() > 0.0)) throw DomainError("point (" + to_string(x) + ") is not in the half-space");
}

void require_plane_or_space(std::size_t dim) {
  if (dim != 2 && dim != 3) throw UnsupportedDimensionError("only dimensions 2 and 3 are supported");
}

/// Unit vector orthogonal to `u` built from the coordinate axis least aligned with it.
Point orthogonal_unit(const Point& u) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < u.dim(); ++i)
    if (std::abs(u[i]) < std::abs(u[k])) k = i;
  Point t = Point::basis(u.dim(), k);
  t -= u * dot(t, u);
  return t * (1.0 / norm(t));
}

/// Orthonormal frame whose first vector is the direction of x (e_1 at the origin).
std::vector<Point> frame_along(const Point& x) {
  const std::size_t n = x.dim();
  const double a = norm(x);
  Point axis = a > 0.0 ? x * (1.0 / a) : Point::basis(n, 0);
  std::vector<Point> frame{axis, orthogonal_unit(axis)};
  if (n == 3) {
    const Point& e = frame[0];
    const Point& f = frame[1];
    frame.push_back(Point{e[1] * f[2] - e[2] * f[1], e[2] * f[0] - e[0] * f[2], e[0] * f[1] - e[1] * f[0]});
  }
  return frame;
}

/// Golden-section search for the minimum of f on [a, b].
double golden_min(const std::function<double(double)>& f, double a, double b, double tol = 1e-13) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double h_unit_ball(double c, const Point& x, const Point& y) {
  const double nx = norm(x), ny = norm(y);
  return std::log1p(c * distance(x, y) / std::sqrt((1.0 - nx) * (1.0 - ny)));
}

double rho_for(const Domain& domain, const Point& x, const Point& y) {
  if (domain.kind() == DomainKind::HalfSpace) return rho_half_space(x, y);
  if (domain.kind() == DomainKind::UnitBall) return rho_unit_ball(x, y);
  throw ArgumentError("hyperbolic balls need the half-space or the unit ball");
}

EuclideanBall rho_ball_for(const Domain& domain, const Point& x, double R) {
  if (domain.kind() == DomainKind::HalfSpace) return rho_ball_half_space(x, R);
  if (domain.kind() == DomainKind::UnitBall) return rho_ball_unit_ball(x, R);
  throw ArgumentError("hyperbolic balls need the half-space or the unit ball");
}

}  // namespace

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::PaperFormula: return "paper";
    case Provenance::ProofDerived: return "derived";
    case Provenance::BruteForce: return "brute";
  }
  return "?";
}

HBallRepresentation h_ball_half_space(const Point& x, double r, double c) {
  require_upper_half(x);
  require_positive(r, "radius");
  require_positive(c, "constant c");
  const double em1 = std::expm1(r);
  const double xn = x.last();
  HBallRepresentation out;
  out.ball.center = x;
  out.ball.center.last() += xn * em1 * em1 / (2.0 * c * c);
  out.ball.radius = xn * em1 / (2.0 * c * c) * std::sqrt(em1 * em1 + 4.0 * c * c);
  out.rho_radius = 2.0 * std::asinh(em1 / (2.0 * c));
  return out;
}

EuclideanBall rho_ball_half_space(const Point& x, double R) {
  require_upper_half(x);
  require_positive(R, "hyperbolic radius");
  const double sh = std::sinh(0.5 * R);
  EuclideanBall b{x, x.last() * std::sinh(R)};
  b.center.last() += x.last() * 2.0 * sh * sh;  // cosh R - 1
  return b;
}

EuclideanBall rho_ball_unit_ball(const Point& x, double R) {
  const double a = norm(x);
  if (!(a < 1.0)) throw DomainError("point (" + to_string(x) + ") is not in the unit ball");
  require_positive(R, "hyperbolic radius");
  const double t = std::tanh(0.5 * R);
  const double den = 1.0 - a * a * t * t;
  return {x * ((1.0 - t) * (1.0 + t) / den), (1.0 - a) * (1.0 + a) * t / den};
}

InclusionRadii inclusion_radii_euclidean(const Domain& domain, const Point& x, double r, double c) {
  require_positive(c, "constant c");
  const double d = dist_to_boundary(domain, x);
  if (!(r > 0.0) || !(r < d)) throw ArgumentError("radius must satisfy 0 < r < d_G(x)");
  const double far = domain.kind() == DomainKind::UnitBall ? 1.0 - std::abs(norm(x) - r) : d + r;
  return {std::log1p(c * r / std::sqrt(d * far)), std::log1p(c * r / std::sqrt(d * (d - r))),
          Provenance::PaperFormula};
}

RhoInclusionRadii inclusion_radii_rho_unit_ball(const Point& x, double R, double c) {
  require_plane_or_space(x.dim());
  require_positive(c, "constant c");
  RhoInclusionRadii out;
  out.rho_ball = rho_ball_unit_ball(x, R);
  const double a = norm(x);
  const double t = std::tanh(0.5 * R);
  const double qn = norm(out.rho_ball.center);
  const double r = out.rho_ball.radius;

  out.paper = {std::log1p(c * t * (1.0 + a) * std::sqrt(1.0 - a) /
                          ((1.0 - a * t) * std::sqrt(1.0 - a * t - std::abs(a - t)))),
               std::log1p(c * t * (1.0 + a) / ((1.0 + a * t) * (1.0 - t))), Provenance::PaperFormula};
  out.derived = {std::log1p(c * r * (1.0 + a * t) / std::sqrt((1.0 - a) * (1.0 - std::abs(qn - r)))),
                 std::log1p(c * r * (1.0 - a * t) / std::sqrt((1.0 - a) * (1.0 - qn - r))),
                 Provenance::ProofDerived};

  // Brute force over the rho-sphere, parametrized by the polar angle theta
  // from the ray through x and (in 3D) an azimuth psi.
  const std::vector<Point> frame = frame_along(x);
  const Point& q = out.rho_ball.center;
  auto point_at = [&](double theta, double psi) {
    Point y = q + frame[0] * (r * std::cos(theta));
    if (x.dim() == 2) return y + frame[1] * (r * std::sin(theta));
    return y + frame[1] * (r * std::sin(theta) * std::cos(psi)) + frame[2] * (r * std::sin(theta) * std::sin(psi));
  };
  auto h_at = [&](double theta, double psi) { return h_unit_ball(c, x, point_at(theta, psi)); };

  std::size_t n_theta = kBruteSamples, n_psi = 1;
  double theta_span = 2.0 * kPi;  // full circle in 2D
  if (x.dim() == 3) {
    n_psi = 16;
    n_theta = kBruteSamples / n_psi;
    theta_span = kPi;
  }
  const double dtheta = theta_span / static_cast<double>(n_theta);
  double best_lo = INFINITY, best_hi = -INFINITY;
  double lo_theta = 0, lo_psi = 0, hi_theta = 0, hi_psi = 0;
  for (std::size_t j = 0; j < n_psi; ++j) {
    const double psi = 2.0 * kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n_psi);
    for (std::size_t i = 0; i < n_theta; ++i) {
      const double theta = (static_cast<double>(i) + 0.5) * dtheta;
      const double v = h_at(theta, psi);
      if (v < best_lo) best_lo = v, lo_theta = theta, lo_psi = psi;
      if (v > best_hi) best_hi = v, hi_theta = theta, hi_psi = psi;
    }
  }
  auto refine = [&](double theta, double psi, double sign) {
    double a0 = theta - dtheta, b0 = theta + dtheta;
    if (x.dim() == 3) a0 = std::max(0.0, a0), b0 = std::min(kPi, b0);
    return golden_min([&](double th) { return sign * h_at(th, psi); }, a0, b0);
  };
  lo_theta = refine(lo_theta, lo_psi, 1.0);
  hi_theta = refine(hi_theta, hi_psi, -1.0);
  out.argmin = point_at(lo_theta, lo_psi);
  out.argmax = point_at(hi_theta, hi_psi);
  out.brute = {std::min(best_lo, h_unit_ball(c, x, out.argmin)), std::max(best_hi, h_unit_ball(c, x, out.argmax)),
               Provenance::BruteForce};
  return out;
}

std::vector<double> rho_sphere_profile(const Point& x, double R, double c, std::size_t m) {
  require_positive(c, "constant c");
  if (m < 2) throw ArgumentError("profile needs at least 2 samples");
  const EuclideanBall ball = rho_ball_unit_ball(x, R);
  const std::vector<Point> frame = frame_along(x);
  std::vector<double> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double phi = kPi * static_cast<double>(k) / static_cast<double>(m - 1);
    const Point y = ball.center + frame[0] * (ball.radius * std::cos(phi)) + frame[1] * (ball.radius * std::sin(phi));
    out[k] = h_unit_ball(c, x, y);
  }
  return out;
}

std::vector<Point> sphere_directions(std::size_t dim, std::size_t m) {
  require_plane_or_space(dim);
  std::vector<Point> out;
  out.reserve(m);
  if (dim == 2) {
    for (std::size_t k = 0; k < m; ++k) {
      const double a = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
      out.push_back(Point{std::cos(a), std::sin(a)});
    }
    return out;
  }
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < m; ++k) {
    const double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(m);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = golden_angle * static_cast<double>(k);
    out.push_back(Point{rho * std::cos(a), rho * std::sin(a), z});
  }
  return out;
}

std::vector<SphereSample> sample_h_sphere(const Domain& domain, double c, const Point& x, double r, std::size_t m) {
  require_plane_or_space(domain.dim());
  require_positive(r, "radius");
  require_positive(c, "constant c");
  if (x.dim() != domain.dim()) throw ArgumentError("center dimension mismatch");
  const std::vector<Point> dirs = sphere_directions(domain.dim(), m);
  std::vector<SphereSample> out(m);

  parallel_for(m, [&](std::size_t k) {
    const Point& u = dirs[k];
    auto h_at = [&](double s) { return h_metric(domain, c, x, x + u * s); };
    auto step_at = [&](double s) { return 0.5 * dist_to_boundary(domain, x + u * s); };

    // March with half the boundary distance so every probe stays inside.
    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    for (int it = 0; it < 1000000; ++it) {
      const double step = step_at(lo);
      if (!(step > kBoundaryGuard)) break;
      hi = lo + step;
      if (h_at(hi) >= r) {
        bracketed = true;
        break;
      }
      lo = hi;
    }
    if (!bracketed) throw SearchError("no crossing of the h-sphere along direction " + std::to_string(k));

    const double first_lo = lo;
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (h_at(mid) >= r ? hi : lo) = mid;
    }
    const double h_lo = h_at(lo), h_hi = h_at(hi);
    const double s = std::abs(h_lo - r) <= std::abs(h_hi - r) ? lo : hi;

    bool multiple = false;
    for (int i = 1; i < 100 && !multiple; ++i)
      multiple = h_at(first_lo * static_cast<double>(i) / 100.0) >= r;
    double t = hi;
    for (int i = 0; i < 400 && !multiple && t < 3.0 * hi; ++i) {
      const double step = step_at(t);
      if (!(step > 1e-12 * (1.0 + t))) break;
      t += std::min(step, hi / 100.0);
      multiple = h_at(t) < r;
    }
    out[k] = {x + u * s, h_at(s), multiple};
  });
  return out;
}

InclusionReport verify_inclusion(const Domain& domain, double c, const Point& center, const BallSpec& inner,
                                 const BallSpec& outer, std::size_t m) {
  require_plane_or_space(domain.dim());
  require_positive(inner.radius, "inner radius");
  require_positive(outer.radius, "outer radius");
  if (m == 0) throw ArgumentError("sample count must be positive");

  std::vector<Point> boundary;
  switch (inner.kind) {
    case BallSpec::Kind::H:
      for (SphereSample& s : sample_h_sphere(domain, c, center, inner.radius, m)) boundary.push_back(std::move(s.point));
      break;
    case BallSpec::Kind::Rho: {
      const EuclideanBall b = rho_ball_for(domain, center, inner.radius);
      for (const Point& u : sphere_directions(domain.dim(), m)) boundary.push_back(b.center + u * b.radius);
      break;
    }
    case BallSpec::Kind::Euclidean:
      for (const Point& u : sphere_directions(domain.dim(), m)) boundary.push_back(center + u * inner.radius);
      break;
  }

  InclusionReport rep;
  rep.min_slack = INFINITY;
  rep.samples = boundary.size();
  for (const Point& y : boundary) {
    double dist = 0.0;
    switch (outer.kind) {
      case BallSpec::Kind::H: dist = h_metric(domain, c, center, y); break;
      case BallSpec::Kind::Rho: dist = rho_for(domain, center, y); break;
      case BallSpec::Kind::Euclidean: dist = distance(center, y); break;
    }
    const double slack = outer.radius - dist;
    if (slack < rep.min_slack) {
      rep.min_slack = slack;
      rep.argmin = y;
    }
  }
  rep.contained = rep.min_slack >= -1e-9;
  return rep;
}

}  // namespace hypmetric
