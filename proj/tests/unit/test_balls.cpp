#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "hypmetric/balls.hpp"
#include "hypmetric/errors.hpp"
#include "hypmetric/metrics.hpp"

using namespace hypmetric;

namespace {

constexpr double kHBallCenter = 2.7381231105031399;
constexpr double kHBallRadius = 1.8701118063558099;
constexpr double kInclHr0 = 0.34234658484830524;
constexpr double kInclHr1 = 0.53479999673957037;
constexpr double kInclBr0 = 0.38821155050870093;
constexpr double kInclBr1 = 0.66715391273504395;
// Unit-ball rho-sphere extrema (brute force at 50 digits) and the displayed closed forms.
constexpr double kCenterBrute = 0.53479999673957037;
constexpr double kCenterPaperR1 = 0.69314718055994531;
constexpr double kOffCenterPaperR0 = 0.596909690446534;
constexpr double kOffCenterPaperR1 = 0.78845736036427017;
constexpr double kOffCenterBruteMin = 0.53479999673957037;
constexpr double kOffCenterBruteMax = 0.66715391273504398;

const Domain kH2 = Domain::half_space(2);
const Domain kB2 = Domain::unit_ball(2);

double radius_for_t(double t) { return 2.0 * std::atanh(t); }

}  // namespace

TEST(HBallHalfSpace, Examples) {
  const HBallRepresentation a = h_ball_half_space({0, 1}, std::log(3.0), 1.0);
  EXPECT_NEAR(a.ball.center[0], 0.0, 1e-15);
  EXPECT_NEAR(a.ball.center[1], 3.0, 1e-14);
  EXPECT_NEAR(a.ball.radius, 2.0 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(a.rho_radius, 2.0 * std::asinh(1.0), 1e-14);

  const HBallRepresentation b = h_ball_half_space({5, 2}, 1.0, 2.0);
  EXPECT_NEAR(b.ball.center[0], 5.0, 1e-15);
  EXPECT_NEAR(b.ball.center[1], kHBallCenter, 1e-14);
  EXPECT_NEAR(b.ball.radius, kHBallRadius, 1e-14);
}

TEST(HBallHalfSpace, DegeneratesToPoint) {
  const HBallRepresentation a = h_ball_half_space({0, 2}, 1e-9, 1.5);
  EXPECT_NEAR(a.ball.radius, 2.0 * 1e-9 / 1.5, 1e-17);
  EXPECT_NEAR(a.ball.center[1], 2.0, 1e-15);
}

TEST(HBallHalfSpace, RadiusIncreasesWithR) {
  double prev = 0.0;
  for (double r = 0.1; r < 5.0; r += 0.1) {
    const double rad = h_ball_half_space({0, 1}, r, 1.3).ball.radius;
    EXPECT_GT(rad, prev);
    prev = rad;
  }
}

TEST(HBallHalfSpace, RejectsNonpositiveRadius) {
  EXPECT_THROW(h_ball_half_space({0, 1}, 0.0, 1.0), ArgumentError);
  EXPECT_THROW(h_ball_half_space({0, 0}, 1.0, 1.0), DomainError);
}

TEST(HBallHalfSpace, SphereSamplesMatchRepresentation) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Point x{rng.uniform(-2, 2), rng.uniform(0.2, 3)};
    const double r = rng.uniform(0.1, 3.0), c = rng.uniform(1.0, 4.0);
    const HBallRepresentation rep = h_ball_half_space(x, r, c);
    for (const SphereSample& s : sample_h_sphere(kH2, c, x, r, 200)) {
      EXPECT_NEAR(distance(s.point, rep.ball.center), rep.ball.radius, 1e-9 * std::max(1.0, rep.ball.radius));
      EXPECT_NEAR(rho_half_space(x, s.point), rep.rho_radius, 1e-9);
      EXPECT_FALSE(s.multiple_crossings);
    }
  }
}

TEST(RhoBallHalfSpace, Example) {
  const EuclideanBall b = rho_ball_half_space({0, 1}, std::log(2.0));
  EXPECT_NEAR(b.center[1], 1.25, 1e-15);
  EXPECT_NEAR(b.radius, 0.75, 1e-15);
  EXPECT_THROW(rho_ball_half_space({0, 1}, 0.0), ArgumentError);
}

TEST(RhoBallHalfSpace, BoundaryAtRadius) {
  const Point x{1, 0.5};
  const double R = 1.7;
  const EuclideanBall b = rho_ball_half_space(x, R);
  for (const Point& u : sphere_directions(2, 100)) EXPECT_NEAR(rho_half_space(x, b.center + u * b.radius), R, 1e-12);
}

TEST(RhoBallUnitBall, Examples) {
  const EuclideanBall a = rho_ball_unit_ball({0, 0}, radius_for_t(0.5));
  EXPECT_NEAR(norm(a.center), 0.0, 1e-15);
  EXPECT_NEAR(a.radius, 0.5, 1e-15);
  const EuclideanBall b = rho_ball_unit_ball({0.5, 0}, radius_for_t(0.5));
  EXPECT_NEAR(b.center[0], 0.4, 1e-15);
  EXPECT_NEAR(b.radius, 0.4, 1e-15);
  EXPECT_THROW(rho_ball_unit_ball({1, 0}, 1.0), DomainError);
}

TEST(RhoBallUnitBall, BoundaryAtRadiusAndCenterOffset) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Point x = rng.unit_vector(2) * rng.uniform(0.0, 0.9);
    const double R = rng.uniform(0.1, 3.0), t = std::tanh(0.5 * R);
    const EuclideanBall b = rho_ball_unit_ball(x, R);
    EXPECT_NEAR(distance(b.center, x), norm(x) * t * b.radius, 1e-14);
    for (const Point& u : sphere_directions(2, 64)) EXPECT_NEAR(rho_unit_ball(x, b.center + u * b.radius), R, 1e-12);
  }
}

TEST(InclusionEuclidean, Examples) {
  const InclusionRadii h = inclusion_radii_euclidean(kH2, {0, 1}, 0.5, 1.0);
  EXPECT_NEAR(h.r0, kInclHr0, 1e-14);
  EXPECT_NEAR(h.r1, kInclHr1, 1e-14);
  const InclusionRadii b = inclusion_radii_euclidean(kB2, {0.5, 0}, 0.3, 1.0);
  EXPECT_NEAR(b.r0, kInclBr0, 1e-14);
  EXPECT_NEAR(b.r1, kInclBr1, 1e-14);
  const InclusionRadii center = inclusion_radii_euclidean(kB2, {0, 0}, 0.4, 2.0);
  EXPECT_NEAR(center.r0, center.r1, 1e-15);
  EXPECT_NEAR(center.r0, std::log1p(0.8 / std::sqrt(0.6)), 1e-15);
}

TEST(InclusionEuclidean, RadiusMustFitInside) {
  EXPECT_THROW(inclusion_radii_euclidean(kH2, {0, 1}, 1.0, 1.0), ArgumentError);
  EXPECT_THROW(inclusion_radii_euclidean(kH2, {0, 1}, 0.0, 1.0), ArgumentError);
}

TEST(InclusionEuclidean, SphereValuesWithinRadii) {
  for (const Domain& d : {kH2, kB2, Domain::punctured({0, 0}), Domain::box({0, 0}, {2, 1})}) {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const Point x = sample_interior(d, rng, default_box(d));
      const double r = rng.uniform(0.05, 0.95) * dist_to_boundary(d, x), c = rng.uniform(0.5, 3.0);
      const InclusionRadii ir = inclusion_radii_euclidean(d, x, r, c);
      EXPECT_LE(ir.r0, ir.r1);
      for (const Point& u : sphere_directions(2, 128)) {
        const double h = h_metric(d, c, x, x + u * r);
        EXPECT_GE(h, ir.r0 - 1e-12) << to_literal(d);
        EXPECT_LE(h, ir.r1 + 1e-12) << to_literal(d);
      }
    }
  }
}

TEST(InclusionEuclidean, SharpSidesHaveVanishingSlack) {
  const Point x{0, 1};
  const InclusionRadii h = inclusion_radii_euclidean(kH2, x, 0.5, 1.0);
  const InclusionReport outer = verify_inclusion(kH2, 1.0, x, {BallSpec::Kind::Euclidean, 0.5},
                                                 {BallSpec::Kind::H, h.r1}, 2000);
  EXPECT_TRUE(outer.contained);
  EXPECT_LT(outer.min_slack, 1e-9);
  EXPECT_NEAR(outer.argmin[1], 0.5, 1e-9);

  const InclusionReport inner = verify_inclusion(kH2, 1.0, x, {BallSpec::Kind::H, h.r0},
                                                 {BallSpec::Kind::Euclidean, 0.5}, 2000);
  // Attained directly above x, where d(y) = d(x) + r.
  EXPECT_TRUE(inner.contained);
  EXPECT_LT(inner.min_slack, 1e-9);
  EXPECT_NEAR(inner.argmin[1], 1.5, 1e-9);

  const Domain punctured = Domain::punctured({0, 0});
  const InclusionRadii p = inclusion_radii_euclidean(punctured, {1, 0}, 0.5, 1.0);
  const InclusionReport away = verify_inclusion(punctured, 1.0, {1, 0}, {BallSpec::Kind::H, p.r0},
                                                {BallSpec::Kind::Euclidean, 0.5}, 2000);
  EXPECT_TRUE(away.contained);
  EXPECT_LT(away.min_slack, 1e-9);
  EXPECT_GT(away.argmin[0], 1.0);
}

TEST(InclusionRho, CenterExample) {
  const RhoInclusionRadii r = inclusion_radii_rho_unit_ball({0, 0}, radius_for_t(0.5), 1.0);
  EXPECT_NEAR(r.brute.r0, kCenterBrute, 1e-9);
  EXPECT_NEAR(r.brute.r1, kCenterBrute, 1e-9);
  EXPECT_NEAR(r.paper.r1, kCenterPaperR1, 1e-12);
  EXPECT_EQ(r.paper.provenance, Provenance::PaperFormula);
  EXPECT_EQ(r.derived.provenance, Provenance::ProofDerived);
  EXPECT_EQ(r.brute.provenance, Provenance::BruteForce);
}

TEST(InclusionRho, OffCenterExample) {
  const RhoInclusionRadii r = inclusion_radii_rho_unit_ball({0.5, 0}, radius_for_t(0.5), 1.0);
  EXPECT_NEAR(r.brute.r0, kOffCenterBruteMin, 1e-9);
  EXPECT_NEAR(r.brute.r1, kOffCenterBruteMax, 1e-9);
  EXPECT_NEAR(r.derived.r0, kOffCenterBruteMin, 1e-12);
  EXPECT_NEAR(r.derived.r1, kOffCenterBruteMax, 1e-12);
  EXPECT_NEAR(r.paper.r0, kOffCenterPaperR0, 1e-12);
  EXPECT_NEAR(r.paper.r1, kOffCenterPaperR1, 1e-12);
  EXPECT_NEAR(r.argmax[0], 0.8, 1e-6);
  EXPECT_NEAR(norm(r.argmin), 0.0, 1e-6);
}

TEST(InclusionRho, DerivedMatchesBruteAcrossGrid) {
  for (int ia = 0; ia <= 9; ++ia) {
    for (int it = 1; it <= 9; ++it) {
      for (double c : {1.0, 2.0}) {
        const RhoInclusionRadii r = inclusion_radii_rho_unit_ball({0.1 * ia, 0}, radius_for_t(0.1 * it), c);
        EXPECT_NEAR(r.derived.r0, r.brute.r0, 1e-6) << ia << " " << it << " " << c;
        EXPECT_NEAR(r.derived.r1, r.brute.r1, 1e-6) << ia << " " << it << " " << c;
        EXPECT_LE(r.brute.r0, r.brute.r1);
      }
    }
  }
}

TEST(InclusionRho, ThreeDimensionalAgrees) {
  const RhoInclusionRadii a = inclusion_radii_rho_unit_ball({0.3, 0}, 1.2, 1.5);
  const RhoInclusionRadii b = inclusion_radii_rho_unit_ball({0.3, 0, 0}, 1.2, 1.5);
  EXPECT_NEAR(a.brute.r0, b.brute.r0, 1e-8);
  EXPECT_NEAR(a.brute.r1, b.brute.r1, 1e-8);
}

TEST(InclusionRho, ProfileIsMonotone) {
  for (double ax : {0.1, 0.5, 0.9}) {
    const std::vector<double> prof = rho_sphere_profile({ax, 0}, 1.0, 1.0, 2001);
    for (std::size_t i = 1; i < prof.size(); ++i) EXPECT_LE(prof[i], prof[i - 1] + 1e-12) << ax << " " << i;
  }
}

TEST(SphereDirections, UnitLengthAndCount) {
  for (std::size_t dim : {2u, 3u}) {
    const auto dirs = sphere_directions(dim, 500);
    ASSERT_EQ(dirs.size(), 500u);
    for (const Point& u : dirs) EXPECT_NEAR(norm(u), 1.0, 1e-15);
  }
  EXPECT_THROW(sphere_directions(4, 10), UnsupportedDimensionError);
}

TEST(SampleHSphere, HitsTargetLevel) {
  for (const Domain& d : {kH2, kB2, Domain::punctured({0, 0}), Domain::segment_complement({-1, 0}, {1, 0}),
                          Domain::half_space(3), Domain::unit_ball(3)}) {
    const Point x = canonical_interior_point(d);
    for (const SphereSample& s : sample_h_sphere(d, 1.3, x, 0.8, 100))
      EXPECT_NEAR(s.h, 0.8, 1e-10) << to_literal(d);
  }
}

TEST(SampleHSphere, CenteredBallIsRound) {
  const auto pts = sample_h_sphere(kB2, 2.0, {0, 0}, 1.0, 200);
  const double r0 = norm(pts.front().point);
  for (const SphereSample& s : pts) EXPECT_NEAR(norm(s.point), r0, 1e-12);
}

TEST(SampleHSphere, SmallBallInBoxIsNearlyRound) {
  const Domain box = Domain::box({0, 0}, {2, 2});
  const Point x{1, 1};
  const double r = 1e-6, c = 1.5;
  for (const SphereSample& s : sample_h_sphere(box, c, x, r, 100))
    EXPECT_NEAR(distance(s.point, x), r / c, 1e-11);
}

TEST(SampleHSphere, RejectsBadInput) {
  EXPECT_THROW(sample_h_sphere(kH2, 1.0, {0, 1}, 0.0, 10), ArgumentError);
  EXPECT_THROW(sample_h_sphere(Domain::half_space(4), 1.0, {0, 0, 0, 1}, 1.0, 10), UnsupportedDimensionError);
}

TEST(Provenance, Names) {
  EXPECT_EQ(provenance_name(Provenance::PaperFormula), "paper");
  EXPECT_EQ(provenance_name(Provenance::ProofDerived), "derived");
  EXPECT_EQ(provenance_name(Provenance::BruteForce), "brute");
}
