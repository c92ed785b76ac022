#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hypmetric/domains.hpp"
#include "hypmetric/point.hpp"

namespace hypmetric {

struct EuclideanBall {
  Point center;
  double radius = 0.0;
};

/// Euclidean form of an h-ball on the half-space together with the radius of
/// the hyperbolic ball with the same point set.
struct HBallRepresentation {
  EuclideanBall ball;
  double rho_radius = 0.0;
};

enum class Provenance { PaperFormula, ProofDerived, BruteForce };
std::string_view provenance_name(Provenance p);

struct InclusionRadii {
  double r0 = 0.0;
  double r1 = 0.0;
  Provenance provenance = Provenance::PaperFormula;
};

/// Radii for B_h(x, r0) ⊆ B_rho(x, R) ⊆ B_h(x, r1) on the unit ball from three
/// sources. `argmin` / `argmax` are the brute-force extremal points of h on the
/// rho-sphere.
struct RhoInclusionRadii {
  InclusionRadii paper;
  InclusionRadii derived;
  InclusionRadii brute;
  Point argmin, argmax;
  /// The Euclidean ball equal to B_rho(x, R).
  EuclideanBall rho_ball;
};

/// B_h(x, r) on the half-space as a Euclidean ball; valid for every c > 0.
HBallRepresentation h_ball_half_space(const Point& x, double r, double c);

/// B_rho(x, R) on the half-space: center x + x_n (cosh R - 1) e_n, radius x_n sinh R.
EuclideanBall rho_ball_half_space(const Point& x, double R);

/// B_rho(x, R) on the unit ball with t = tanh(R/2):
/// center x (1-t^2)/(1-|x|^2 t^2), radius (1-|x|^2) t/(1-|x|^2 t^2).
EuclideanBall rho_ball_unit_ball(const Point& x, double R);

/// Radii r0 <= r1 with B_h(x, r0) ⊆ B^n(x, r) ⊆ B_h(x, r1). On the unit ball
/// r0 uses the exact maximum 1 - ||x| - r| of d(y) on the sphere. Requires
/// 0 < r < d_G(x).
InclusionRadii inclusion_radii_euclidean(const Domain& domain, const Point& x, double r, double c);

inline constexpr std::size_t kBruteSamples = 20000;

/// Unit-ball rho-ball inclusion radii: the displayed closed forms, the values at
/// the two axial points of the rho-sphere, and a dense brute-force scan of the
/// rho-sphere (dimension 2 or 3).
RhoInclusionRadii inclusion_radii_rho_unit_ball(const Point& x, double R, double c);

/// h(x, y) along the rho-sphere S_rho(x, R) in the unit ball, for y at angle
/// phi_k = pi k/(m-1) at the Euclidean center, measured from the ray through x.
std::vector<double> rho_sphere_profile(const Point& x, double R, double c, std::size_t m);

struct SphereSample {
  Point point;
  double h = 0.0;
  /// The ray re-enters the h-ball after the first crossing.
  bool multiple_crossings = false;
};

/// Deterministic directions: angles 2 pi k/m in 2D, a Fibonacci lattice in 3D.
std::vector<Point> sphere_directions(std::size_t dim, std::size_t m);

/// m points of S_h(x, r), one per direction, located at the first crossing of
/// h = r along each ray. Dimension 2 or 3.
std::vector<SphereSample> sample_h_sphere(const Domain& domain, double c, const Point& x, double r, std::size_t m);

struct BallSpec {
  enum class Kind { H, Rho, Euclidean };
  Kind kind = Kind::Euclidean;
  double radius = 0.0;
};

struct InclusionReport {
  /// Minimum over inner-boundary samples of (outer radius - outer distance).
  double min_slack = 0.0;
  Point argmin;
  std::size_t samples = 0;
  bool contained = false;
};

/// Samples m boundary points of the inner ball about `center` and measures how
/// far inside the outer ball they sit. Rho balls need the half-space or the
/// unit ball.
InclusionReport verify_inclusion(const Domain& domain, double c, const Point& center, const BallSpec& inner,
                                 const BallSpec& outer, std::size_t m);

}  // namespace hypmetric
