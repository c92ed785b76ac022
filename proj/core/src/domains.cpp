#include "hypmetric/domains.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypmetric/errors.hpp"

namespace hypmetric {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498948482;

void require_dim(const Domain& domain, const Point& x) {
  if (x.dim() != domain.dim())
    throw ArgumentError("point of dimension " + std::to_string(x.dim()) + " used with a domain of dimension " +
                        std::to_string(domain.dim()));
}

template <class T>
T norm_t(const Point& a) {
  T s = 0;
  for (double v : a.coords()) s += static_cast<T>(v) * static_cast<T>(v);
  return std::sqrt(s);
}

template <class T>
T distance_t(const Point& a, const Point& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const T d = static_cast<T>(a[i]) - static_cast<T>(b[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

/// Parameter in [0, 1] of the point of [u, v] closest to x.
double segment_parameter(const Point& x, const Point& u, const Point& v) {
  const Point d = v - u;
  const double t = dot(x - u, d) / squared_norm(d);
  return std::clamp(t, 0.0, 1.0);
}

template <class T>
T segment_distance_t(const Point& x, const Point& u, const Point& v) {
  return distance_t<T>(x, lerp(u, v, segment_parameter(x, u, v)));
}

template <class T>
T boundary_distance(const Domain& domain, const Point& x) {
  return std::visit(
      Overloaded{
          [&](const HalfSpace&) { return static_cast<T>(x.last()); },
          [&](const UnitBall&) { return T(1) - norm_t<T>(x); },
          [&](const PuncturedSpace& d) { return distance_t<T>(x, d.p); },
          [&](const TwicePunctured& d) { return std::min(distance_t<T>(x, d.u), distance_t<T>(x, d.v)); },
          [&](const SegmentComplement& d) { return segment_distance_t<T>(x, d.u, d.v); },
          [&](const Box& d) {
            T best = std::numeric_limits<T>::infinity();
            for (std::size_t i = 0; i < x.dim(); ++i) {
              best = std::min(best, static_cast<T>(x[i]) - static_cast<T>(d.lo[i]));
              best = std::min(best, static_cast<T>(d.hi[i]) - static_cast<T>(x[i]));
            }
            return best;
          },
      },
      domain.variant());
}

void require_inside(const Domain& domain, const Point& x) {
  if (!contains(domain, x)) throw DomainError("point (" + to_string(x) + ") is not inside " + to_literal(domain));
}

void require_low_dim(const Domain& domain) {
  if (domain.dim() > 3)
    throw UnsupportedDimensionError("path infimum on " + std::string(kind_name(domain.kind())) +
                                    " is only available for n = 2 or 3");
}

/// A unit vector orthogonal to w (w != 0).
Point orthogonal_unit(const Point& w) {
  std::size_t j = 0;
  for (std::size_t i = 1; i < w.dim(); ++i)
    if (std::abs(w[i]) < std::abs(w[j])) j = i;
  Point e = Point::basis(w.dim(), j);
  e -= w * (dot(e, w) / squared_norm(w));
  return e * (1.0 / norm(e));
}

/// Golden-section minimization of a unimodal function on [a, b]; returns the
/// smallest value seen.
template <class F>
double golden_min(F&& f, double a, double b, double* argmin = nullptr) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  double best = std::min(fc, fd);
  double best_t = fc <= fd ? c : d;
  for (int it = 0; it < 200 && std::abs(b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      if (fc < best) best = fc, best_t = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      if (fd < best) best = fd, best_t = d;
    }
  }
  if (argmin) *argmin = best_t;
  return best;
}

double broken_path(const Point& x, const Point& z, const Point& y) { return distance(x, z) + distance(z, y); }

/// min over z in [a, b] of |x - z| + |z - y|. Unfolding the plane through the
/// line about the line gives the unconstrained minimizer; convexity along the
/// line makes clamping exact.
double segment_path_min(const Point& x, const Point& y, const Point& a, const Point& b) {
  const Point d = b - a;
  const double len = norm(d);
  const Point e = d * (1.0 / len);
  const double tx = dot(x - a, e);
  const double ty = dot(y - a, e);
  const double rx = distance(x, a + e * tx);
  const double ry = distance(y, a + e * ty);
  auto at = [&](double t) { return broken_path(x, a + e * std::clamp(t, 0.0, len), y); };
  if (rx + ry > 0.0) return at((tx * ry + ty * rx) / (rx + ry));
  return std::min(at(tx), at(ty));
}

/// Path infimum over the closed face {z_axis = value} of a box.
double box_face_path_min(const Box& box, const Point& x, const Point& y, std::size_t axis, double value) {
  const std::size_t n = x.dim();
  if (n == 2) {
    const std::size_t other = 1 - axis;
    Point a(2), b(2);
    a[axis] = b[axis] = value;
    a[other] = box.lo[other];
    b[other] = box.hi[other];
    return segment_path_min(x, y, a, b);
  }
  // n == 3: reflect y through the face plane; the crossing point of [x, y*] is
  // the unconstrained minimizer over the plane.
  const double sx = std::abs(x[axis] - value);
  const double sy = std::abs(y[axis] - value);
  const double lambda = sx / (sx + sy);
  bool inside = true;
  double planar2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == axis) continue;
    const double zj = x[j] + lambda * (y[j] - x[j]);
    if (zj < box.lo[j] || zj > box.hi[j]) inside = false;
    planar2 += (x[j] - y[j]) * (x[j] - y[j]);
  }
  if (inside) return std::sqrt(planar2 + (sx + sy) * (sx + sy));
  // Otherwise the convex objective attains its face minimum on the face's rim.
  double best = std::numeric_limits<double>::infinity();
  std::array<std::size_t, 2> free{};
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (j != axis) free[k++] = j;
  for (int which = 0; which < 2; ++which) {
    const std::size_t fixed = free[which];
    const std::size_t moving = free[1 - which];
    for (double fixed_value : {box.lo[fixed], box.hi[fixed]}) {
      Point a(3), b(3);
      a[axis] = b[axis] = value;
      a[fixed] = b[fixed] = fixed_value;
      a[moving] = box.lo[moving];
      b[moving] = box.hi[moving];
      best = std::min(best, segment_path_min(x, y, a, b));
    }
  }
  return best;
}

/// min over theta of |a - e(theta)| + |b - e(theta)| for planar a, b inside the unit circle.
double circle_path_min(double ax, double ay, double bx, double by) {
  auto f = [&](double th) {
    const double c = std::cos(th), s = std::sin(th);
    return std::hypot(ax - c, ay - s) + std::hypot(bx - c, by - s);
  };
  std::vector<double> seeds;
  seeds.reserve(70);
  for (int k = 0; k < 64; ++k) seeds.push_back(kTwoPi * k / 64.0);
  for (auto [px, py] : {std::pair{ax, ay}, std::pair{bx, by}}) {
    if (px != 0.0 || py != 0.0) {
      double th = std::atan2(py, px);
      if (th < 0) th += kTwoPi;
      seeds.push_back(th);
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  const std::size_t m = seeds.size();
  std::vector<double> vals(m);
  for (std::size_t i = 0; i < m; ++i) vals[i] = f(seeds[i]);
  double best = *std::min_element(vals.begin(), vals.end());
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = (i + m - 1) % m, next = (i + 1) % m;
    if (vals[i] > vals[prev] || vals[i] > vals[next]) continue;
    double lo = seeds[prev], hi = seeds[next];
    if (lo > seeds[i]) lo -= kTwoPi;
    if (hi < seeds[i]) hi += kTwoPi;
    best = std::min(best, golden_min(f, lo, hi));
  }
  return best;
}

double ball_path_infimum(const Point& x, const Point& y) {
  // Every stationary point z satisfies (z-x)/|z-x| + (z-y)/|z-y| = lambda z,
  // so z lies in span{x, y}; when that span is degenerate any plane through it
  // is equivalent by rotational symmetry.
  const std::size_t n = x.dim();
  Point e1;
  if (norm(x) > 0.0)
    e1 = x * (1.0 / norm(x));
  else if (norm(y) > 0.0)
    e1 = y * (1.0 / norm(y));
  else
    e1 = Point::basis(n, 0);
  Point w = y - e1 * dot(y, e1);
  const Point e2 = norm(w) > 1e-14 * (1.0 + norm(y)) ? w * (1.0 / norm(w)) : orthogonal_unit(e1);
  return circle_path_min(dot(x, e1), dot(x, e2), dot(y, e1), dot(y, e2));
}

/// Nested golden-section minimization of a convex function over a rectangle.
template <class F>
double rectangle_min(F&& f, double a0, double a1, double b0, double b1) {
  return golden_min([&](double s) { return golden_min([&](double t) { return f(s, t); }, b0, b1); }, a0, a1);
}

/// Dense scan plus compass polish in (polar, azimuth) on S^2.
double sphere_min_numeric(const Point& x, const Point& y) {
  auto at = [&](double th, double ph) {
    const Point z{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
    return broken_path(x, z, y);
  };
  constexpr int kPolar = 128, kAzimuth = 256;
  struct Cell {
    double value, th, ph;
  };
  std::vector<Cell> cells;
  cells.reserve(kPolar * kAzimuth);
  for (int i = 0; i < kPolar; ++i) {
    const double th = std::numbers::pi * (i + 0.5) / kPolar;
    for (int j = 0; j < kAzimuth; ++j) {
      const double ph = kTwoPi * j / kAzimuth;
      cells.push_back({at(th, ph), th, ph});
    }
  }
  std::partial_sort(cells.begin(), cells.begin() + 8, cells.end(),
                    [](const Cell& a, const Cell& b) { return a.value < b.value; });
  double best = cells.front().value;
  for (int s = 0; s < 8; ++s) {
    double th = cells[s].th, ph = cells[s].ph, val = cells[s].value;
    double step = std::numbers::pi / kPolar;
    while (step > 1e-13) {
      bool moved = false;
      for (auto [dth, dph] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
        const double cand = at(th + dth * step, ph + dph * step);
        if (cand < val) {
          val = cand;
          th += dth * step;
          ph += dph * step;
          moved = true;
          break;
        }
      }
      if (!moved) step *= 0.5;
    }
    best = std::min(best, val);
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Domain Domain::half_space(std::size_t dim) {
  if (dim < 2) throw ArgumentError("domain dimension must be at least 2");
  return Domain(HalfSpace{}, dim);
}

Domain Domain::unit_ball(std::size_t dim) {
  if (dim < 2) throw ArgumentError("domain dimension must be at least 2");
  return Domain(UnitBall{}, dim);
}

Domain Domain::punctured(Point p) {
  if (p.dim() < 2) throw ArgumentError("domain dimension must be at least 2");
  if (!p.is_finite()) throw ArgumentError("puncture must be finite");
  const std::size_t n = p.dim();
  return Domain(PuncturedSpace{std::move(p)}, n);
}

Domain Domain::twice_punctured(Point u, Point v) {
  if (u.dim() < 2 || u.dim() != v.dim()) throw ArgumentError("punctures must share a dimension of at least 2");
  if (!u.is_finite() || !v.is_finite()) throw ArgumentError("punctures must be finite");
  if (u == v) throw ArgumentError("punctures must be distinct");
  const std::size_t n = u.dim();
  return Domain(TwicePunctured{std::move(u), std::move(v)}, n);
}

Domain Domain::segment_complement(Point u, Point v) {
  if (u.dim() < 2 || u.dim() != v.dim()) throw ArgumentError("segment endpoints must share a dimension of at least 2");
  if (!u.is_finite() || !v.is_finite()) throw ArgumentError("segment endpoints must be finite");
  if (u == v) throw ArgumentError("segment endpoints must be distinct");
  const std::size_t n = u.dim();
  return Domain(SegmentComplement{std::move(u), std::move(v)}, n);
}

Domain Domain::box(Point lo, Point hi) {
  if (lo.dim() < 2 || lo.dim() != hi.dim()) throw ArgumentError("box corners must share a dimension of at least 2");
  if (!lo.is_finite() || !hi.is_finite()) throw ArgumentError("box corners must be finite");
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (!(lo[i] < hi[i])) throw ArgumentError("box requires lo_i < hi_i in every coordinate");
  const std::size_t n = lo.dim();
  return Domain(Box{std::move(lo), std::move(hi)}, n);
}

bool Domain::is_convex() const noexcept {
  const DomainKind k = kind();
  return k == DomainKind::HalfSpace || k == DomainKind::UnitBall || k == DomainKind::Box;
}

bool Domain::is_bounded() const noexcept {
  const DomainKind k = kind();
  return k == DomainKind::UnitBall || k == DomainKind::Box;
}

std::string_view kind_name(DomainKind kind) {
  switch (kind) {
    case DomainKind::HalfSpace: return "halfspace";
    case DomainKind::UnitBall: return "ball";
    case DomainKind::PuncturedSpace: return "punctured";
    case DomainKind::TwicePunctured: return "twice";
    case DomainKind::SegmentComplement: return "segment";
    case DomainKind::Box: return "box";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Geometry

bool contains(const Domain& domain, const Point& x) {
  require_dim(domain, x);
  if (!x.is_finite()) return false;
  return std::visit(Overloaded{
                        [&](const HalfSpace&) { return x.last() > 0.0; },
                        [&](const UnitBall&) { return squared_norm(x) < 1.0; },
                        [&](const PuncturedSpace& d) { return x != d.p; },
                        [&](const TwicePunctured& d) { return x != d.u && x != d.v; },
                        [&](const SegmentComplement& d) { return segment_distance_t<double>(x, d.u, d.v) > 0.0; },
                        [&](const Box& d) {
                          for (std::size_t i = 0; i < x.dim(); ++i)
                            if (!(d.lo[i] < x[i] && x[i] < d.hi[i])) return false;
                          return true;
                        },
                    },
                    domain.variant());
}

double dist_to_boundary(const Domain& domain, const Point& x) {
  require_inside(domain, x);
  return boundary_distance<double>(domain, x);
}

long double dist_to_boundary_extended(const Domain& domain, const Point& x) {
  require_inside(domain, x);
  return boundary_distance<long double>(domain, x);
}

Point nearest_boundary_point(const Domain& domain, const Point& x) {
  require_inside(domain, x);
  return std::visit(Overloaded{
                        [&](const HalfSpace&) {
                          Point q = x;
                          q.last() = 0.0;
                          return q;
                        },
                        [&](const UnitBall&) {
                          const double r = norm(x);
                          return r > 0.0 ? x * (1.0 / r) : Point::basis(x.dim(), 0);
                        },
                        [&](const PuncturedSpace& d) { return d.p; },
                        [&](const TwicePunctured& d) { return distance(x, d.u) <= distance(x, d.v) ? d.u : d.v; },
                        [&](const SegmentComplement& d) { return lerp(d.u, d.v, segment_parameter(x, d.u, d.v)); },
                        [&](const Box& d) {
                          std::size_t best_axis = 0;
                          bool best_hi = false;
                          double best = std::numeric_limits<double>::infinity();
                          for (std::size_t i = 0; i < x.dim(); ++i) {
                            if (x[i] - d.lo[i] < best) best = x[i] - d.lo[i], best_axis = i, best_hi = false;
                            if (d.hi[i] - x[i] < best) best = d.hi[i] - x[i], best_axis = i, best_hi = true;
                          }
                          Point q = x;
                          q[best_axis] = best_hi ? d.hi[best_axis] : d.lo[best_axis];
                          return q;
                        },
                    },
                    domain.variant());
}

double path_infimum(const Domain& domain, const Point& x, const Point& y) {
  require_inside(domain, x);
  require_inside(domain, y);
  return std::visit(Overloaded{
                        [&](const HalfSpace&) {
                          Point reflected = y;
                          reflected.last() = -y.last();
                          return distance(x, reflected);
                        },
                        [&](const UnitBall&) {
                          require_low_dim(domain);
                          return ball_path_infimum(x, y);
                        },
                        [&](const PuncturedSpace& d) { return broken_path(x, d.p, y); },
                        [&](const TwicePunctured& d) { return std::min(broken_path(x, d.u, y), broken_path(x, d.v, y)); },
                        [&](const SegmentComplement& d) {
                          require_low_dim(domain);
                          return segment_path_min(x, y, d.u, d.v);
                        },
                        [&](const Box& d) {
                          require_low_dim(domain);
                          double best = std::numeric_limits<double>::infinity();
                          for (std::size_t i = 0; i < x.dim(); ++i) {
                            best = std::min(best, box_face_path_min(d, x, y, i, d.lo[i]));
                            best = std::min(best, box_face_path_min(d, x, y, i, d.hi[i]));
                          }
                          return best;
                        },
                    },
                    domain.variant());
}

double path_infimum_numeric(const Domain& domain, const Point& x, const Point& y) {
  require_inside(domain, x);
  require_inside(domain, y);
  require_low_dim(domain);
  const std::size_t n = domain.dim();
  return std::visit(
      Overloaded{
          [&](const HalfSpace&) {
            // The minimizer lies over the segment joining the projections of x and y.
            auto bracket = [&](std::size_t i) {
              return std::pair{std::min(x[i], y[i]) - 1.0, std::max(x[i], y[i]) + 1.0};
            };
            const auto [a0, a1] = bracket(0);
            if (n == 2) return golden_min([&](double s) { return broken_path(x, Point{s, 0.0}, y); }, a0, a1);
            const auto [b0, b1] = bracket(1);
            return rectangle_min([&](double s, double t) { return broken_path(x, Point{s, t, 0.0}, y); }, a0, a1,
                                 b0, b1);
          },
          [&](const UnitBall&) {
            if (n == 3) return sphere_min_numeric(x, y);
            constexpr int kCells = 4096;
            auto f = [&](double th) { return broken_path(x, Point{std::cos(th), std::sin(th)}, y); };
            std::vector<std::pair<double, int>> vals;
            vals.reserve(kCells);
            for (int k = 0; k < kCells; ++k) vals.emplace_back(f(kTwoPi * k / kCells), k);
            std::partial_sort(vals.begin(), vals.begin() + 8, vals.end());
            double best = vals.front().first;
            for (int s = 0; s < 8; ++s) {
              const double c = kTwoPi * vals[s].second / kCells;
              best = std::min(best, golden_min(f, c - kTwoPi / kCells, c + kTwoPi / kCells));
            }
            return best;
          },
          [&](const PuncturedSpace& d) { return broken_path(x, d.p, y); },
          [&](const TwicePunctured& d) { return std::min(broken_path(x, d.u, y), broken_path(x, d.v, y)); },
          [&](const SegmentComplement& d) {
            return golden_min([&](double t) { return broken_path(x, lerp(d.u, d.v, t), y); }, 0.0, 1.0);
          },
          [&](const Box& d) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t axis = 0; axis < n; ++axis) {
              for (double value : {d.lo[axis], d.hi[axis]}) {
                if (n == 2) {
                  const std::size_t other = 1 - axis;
                  best = std::min(best, golden_min(
                                            [&](double s) {
                                              Point z(2);
                                              z[axis] = value;
                                              z[other] = s;
                                              return broken_path(x, z, y);
                                            },
                                            d.lo[other], d.hi[other]));
                } else {
                  const std::size_t j = axis == 0 ? 1 : 0;
                  const std::size_t k = axis == 2 ? 1 : 2;
                  best = std::min(best, rectangle_min(
                                            [&](double s, double t) {
                                              Point z(3);
                                              z[axis] = value;
                                              z[j] = s;
                                              z[k] = t;
                                              return broken_path(x, z, y);
                                            },
                                            d.lo[j], d.hi[j], d.lo[k], d.hi[k]));
                }
              }
            }
            return best;
          },
      },
      domain.variant());
}

// ---------------------------------------------------------------------------
// Sampling and helpers

BoundingBox default_box(const Domain& domain) {
  const std::size_t n = domain.dim();
  auto cube = [n](double lo, double hi) {
    BoundingBox b{Point(n), Point(n)};
    for (std::size_t i = 0; i < n; ++i) b.lo[i] = lo, b.hi[i] = hi;
    return b;
  };
  switch (domain.kind()) {
    case DomainKind::HalfSpace: {
      BoundingBox b = cube(-10.0, 10.0);
      b.lo.last() = 0.0;
      return b;
    }
    case DomainKind::UnitBall: return cube(-1.0, 1.0);
    case DomainKind::Box: {
      const auto& b = std::get<Box>(domain.variant());
      return {b.lo, b.hi};
    }
    default: return cube(-10.0, 10.0);
  }
}

Point sample_interior(const Domain& domain, Rng& rng, const BoundingBox& box) {
  require_dim(domain, box.lo);
  require_dim(domain, box.hi);
  constexpr int kBudget = 100000;
  Point x(domain.dim());
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    for (std::size_t i = 0; i < x.dim(); ++i) x[i] = rng.uniform(box.lo[i], box.hi[i]);
    if (contains(domain, x) && boundary_distance<double>(domain, x) >= kInteriorMargin) return x;
  }
  throw SamplingError("no interior point of " + to_literal(domain) + " found in the sampling box");
}

Point sample_interior(const Domain& domain, std::uint64_t seed, const BoundingBox& box) {
  Rng rng(seed);
  return sample_interior(domain, rng, box);
}

bool on_boundary(const Domain& domain, const Point& p, double tol) {
  require_dim(domain, p);
  return std::visit(Overloaded{
                        [&](const HalfSpace&) { return std::abs(p.last()) <= tol; },
                        [&](const UnitBall&) { return std::abs(norm(p) - 1.0) <= tol; },
                        [&](const PuncturedSpace& d) { return distance(p, d.p) <= tol; },
                        [&](const TwicePunctured& d) { return distance(p, d.u) <= tol || distance(p, d.v) <= tol; },
                        [&](const SegmentComplement& d) { return segment_distance_t<double>(p, d.u, d.v) <= tol; },
                        [&](const Box& d) {
                          double slack = std::numeric_limits<double>::infinity();
                          for (std::size_t i = 0; i < p.dim(); ++i) {
                            if (p[i] < d.lo[i] - tol || p[i] > d.hi[i] + tol) return false;
                            slack = std::min({slack, std::abs(p[i] - d.lo[i]), std::abs(d.hi[i] - p[i])});
                          }
                          return slack <= tol;
                        },
                    },
                    domain.variant());
}

Point project_inside(const Domain& domain, const Point& p, double margin) {
  require_dim(domain, p);
  auto push_off = [&](Point x, const Point& q) {
    const double r = distance(x, q);
    if (r >= margin) return x;
    const Point dir = r > 0.0 ? (x - q) * (1.0 / r) : Point::basis(x.dim(), 0);
    return q + dir * margin;
  };
  return std::visit(Overloaded{
                        [&](const HalfSpace&) {
                          Point x = p;
                          x.last() = std::max(x.last(), margin);
                          return x;
                        },
                        [&](const UnitBall&) {
                          const double r = norm(p);
                          return r > 1.0 - margin ? p * ((1.0 - margin) / r) : p;
                        },
                        [&](const PuncturedSpace& d) { return push_off(p, d.p); },
                        [&](const TwicePunctured& d) { return push_off(push_off(p, d.u), d.v); },
                        [&](const SegmentComplement& d) {
                          const Point q = lerp(d.u, d.v, segment_parameter(p, d.u, d.v));
                          const double r = distance(p, q);
                          if (r >= margin) return p;
                          const Point dir = r > 0.0 ? (p - q) * (1.0 / r) : orthogonal_unit(d.v - d.u);
                          return q + dir * margin;
                        },
                        [&](const Box& d) {
                          Point x = p;
                          for (std::size_t i = 0; i < x.dim(); ++i) {
                            const double half = 0.5 * (d.hi[i] - d.lo[i]);
                            const double m = std::min(margin, half);
                            x[i] = std::clamp(x[i], d.lo[i] + m, d.hi[i] - m);
                          }
                          return x;
                        },
                    },
                    domain.variant());
}

Point canonical_interior_point(const Domain& domain) {
  const std::size_t n = domain.dim();
  return std::visit(Overloaded{
                        [&](const HalfSpace&) { return Point::basis(n, n - 1); },
                        [&](const UnitBall&) { return Point::basis(n, 0) * 0.5; },
                        [&](const PuncturedSpace& d) { return d.p + Point::basis(n, 0); },
                        [&](const TwicePunctured& d) {
                          const Point w = d.v - d.u;
                          return d.u + orthogonal_unit(w) * (0.25 * norm(w));
                        },
                        [&](const SegmentComplement& d) {
                          const Point w = d.v - d.u;
                          return lerp(d.u, d.v, 0.5) + orthogonal_unit(w) * (0.5 * norm(w));
                        },
                        [&](const Box& d) {
                          std::size_t thin = 0;
                          for (std::size_t i = 1; i < n; ++i)
                            if (d.hi[i] - d.lo[i] < d.hi[thin] - d.lo[thin]) thin = i;
                          Point x = lerp(d.lo, d.hi, 0.5);
                          x[thin] = d.lo[thin] + 0.25 * (d.hi[thin] - d.lo[thin]);
                          return x;
                        },
                    },
                    domain.variant());
}

std::vector<std::pair<Point, Point>> diameter_anchors(const Domain& domain) {
  const std::size_t n = domain.dim();
  std::vector<std::pair<Point, Point>> out;
  std::visit(Overloaded{
                 [&](const UnitBall&) {
                   for (std::size_t i = 0; i < n; ++i) out.emplace_back(Point::basis(n, i) * -1.0, Point::basis(n, i));
                 },
                 [&](const TwicePunctured& d) { out.emplace_back(d.u, d.v); },
                 [&](const Box& d) {
                   double thin = std::numeric_limits<double>::infinity();
                   for (std::size_t i = 0; i < n; ++i) thin = std::min(thin, d.hi[i] - d.lo[i]);
                   for (std::size_t i = 0; i < n; ++i) {
                     if (d.hi[i] - d.lo[i] != thin) continue;
                     Point u = lerp(d.lo, d.hi, 0.5), v = u;
                     u[i] = d.lo[i];
                     v[i] = d.hi[i];
                     out.emplace_back(std::move(u), std::move(v));
                   }
                 },
                 [](const auto&) {},
             },
             domain.variant());
  return out;
}

// ---------------------------------------------------------------------------
// Literals

Domain parse_domain(std::string_view literal) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = literal.find(':', start);
    parts.emplace_back(literal.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const std::string& kind = parts[0];
  std::size_t expected_points = 0;
  if (kind == "halfspace" || kind == "ball")
    expected_points = 0;
  else if (kind == "punctured")
    expected_points = 1;
  else if (kind == "twice" || kind == "segment" || kind == "box")
    expected_points = 2;
  else
    throw ParseError("unknown domain kind '" + kind + "'", kind);

  if (parts.size() < 2) throw ParseError("domain literal '" + std::string(literal) + "' lacks a dimension", std::string(literal));
  std::size_t dim = 0;
  {
    const std::string& tok = parts[1];
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), dim);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || dim < 2)
      throw ParseError("malformed dimension '" + tok + "' (need an integer >= 2)", tok);
  }
  if (parts.size() != 2 + expected_points)
    throw ParseError("domain '" + kind + "' expects " + std::to_string(expected_points) + " point(s) in '" +
                         std::string(literal) + "'",
                     std::string(literal));
  std::vector<Point> points;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    Point p = parse_point(parts[i]);
    if (p.dim() != dim)
      throw ParseError("point '" + parts[i] + "' has " + std::to_string(p.dim()) + " coordinates, expected " +
                           std::to_string(dim),
                       parts[i]);
    points.push_back(std::move(p));
  }
  try {
    if (kind == "halfspace") return Domain::half_space(dim);
    if (kind == "ball") return Domain::unit_ball(dim);
    if (kind == "punctured") return Domain::punctured(points[0]);
    if (kind == "twice") return Domain::twice_punctured(points[0], points[1]);
    if (kind == "segment") return Domain::segment_complement(points[0], points[1]);
    return Domain::box(points[0], points[1]);
  } catch (const ArgumentError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(literal) + "'", std::string(literal));
  }
}

std::string to_literal(const Domain& domain) {
  std::string out(kind_name(domain.kind()));
  out += ':' + std::to_string(domain.dim());
  std::visit(Overloaded{
                 [&](const PuncturedSpace& d) { out += ':' + to_string(d.p); },
                 [&](const TwicePunctured& d) { out += ':' + to_string(d.u) + ':' + to_string(d.v); },
                 [&](const SegmentComplement& d) { out += ':' + to_string(d.u) + ':' + to_string(d.v); },
                 [&](const Box& d) { out += ':' + to_string(d.lo) + ':' + to_string(d.hi); },
                 [](const auto&) {},
             },
             domain.variant());
  return out;
}

}  // namespace hypmetric
