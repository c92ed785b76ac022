#include <gtest/gtest.h>

#include <cmath>

#include "hypmetric/errors.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/verify.hpp"

using namespace hypmetric;

namespace {

// Closed forms of the collapse families at 50 digits (compute_oracles.py).
constexpr double kFam31Half1e6 = -0.68915517124057925;
constexpr double kFam31Half1e8 = -0.69274726055061338;
constexpr double kFam31Two1e2 = 0.76670057279373194;
constexpr double kFam36OneAndHalf1e6 = -0.28580000560128509;
constexpr double kFam36OneAndHalf1e8 = -0.28749354619469084;
constexpr double kFam36One1e2 = -0.4539029471268596;

const Domain kH2 = Domain::half_space(2);
const Domain kB2 = Domain::unit_ball(2);
const Domain kPunctured = Domain::punctured({0, 0});

}  // namespace

TEST(TriangleDefect, Examples) {
  EXPECT_GE(triangle_defect(kH2, 1.0, {0, 1}, {0, 4}, {0, 2}).defect, 0.0);
  const double k = 1e-6;
  EXPECT_NEAR(triangle_defect(kPunctured, 0.5, {1, 0}, {k * k, 0}, {k, 0}).defect, kFam31Half1e6, 1e-9);
  EXPECT_EQ(triangle_defect(kB2, 1.0, {0.1, 0.2}, {-0.3, 0.1}, {0.1, 0.2}).defect, 0.0);
}

TEST(TriangleDefect, PolynomialFormSharesSign) {
  Rng rng(3);
  for (const Domain& d : {kH2, kB2, kPunctured}) {
    for (int i = 0; i < 500; ++i) {
      const Point x = sample_interior(d, rng, default_box(d));
      const Point y = sample_interior(d, rng, default_box(d));
      const Point z = sample_interior(d, rng, default_box(d));
      const DefectRecord r = triangle_defect(d, rng.uniform(0.25, 3.0), x, y, z);
      if (std::abs(r.defect) > 1e-9) EXPECT_EQ(std::signbit(r.defect), std::signbit(r.polynomial_form));
    }
  }
}

TEST(TriangleDefect, NonnegativeOnHalfSpaceForUnitConstant) {
  Rng rng(5);
  for (int i = 0; i < 5000; ++i) {
    const Point x = sample_interior(kH2, rng, default_box(kH2));
    const Point y = sample_interior(kH2, rng, default_box(kH2));
    const Point z = sample_interior(kH2, rng, default_box(kH2));
    EXPECT_GE(triangle_defect(kH2, 1.0, x, y, z).defect, -1e-12);
  }
}

TEST(TriangleDefect, BoundaryPointThrows) {
  EXPECT_THROW(triangle_defect(kH2, 1.0, {0, 1}, {0, 0}, {0, 2}), DomainError);
}

TEST(CollapseFamily, MatchesClosedForm) {
  EXPECT_NEAR(family_defect_lemma31(kPunctured, {1, 0}, 0.5, 1e-6).defect, kFam31Half1e6, 1e-9);
  EXPECT_NEAR(family_defect_lemma31(kPunctured, {1, 0}, 0.5, 1e-8).defect, kFam31Half1e8, 1e-9);
  EXPECT_NEAR(family_defect_lemma31(kPunctured, {1, 0}, 2.0, 1e-2).defect, kFam31Two1e2, 1e-12);
  EXPECT_EQ(family_defect_lemma31(kPunctured, {1, 0}, 0.5, 1e-6).k, 1e-6);
}

TEST(CollapseFamily, SameClosedFormOnEveryDomain) {
  // The collapse runs along the normal at the nearest boundary point, so the
  // defect depends only on (c, k). On curved boundaries the rounding of y next
  // to the sphere limits agreement to about 1e-7 at k = 1e-6.
  const auto closed_form = [](double c, double k) {
    return std::log(std::pow(std::sqrt(k) + c * (1 - k), 2) / (k + c * (1 - k * k)));
  };
  for (const Domain& d : {kH2, kB2, kPunctured, Domain::box({0, 0}, {1, 1}),
                          Domain::segment_complement({-1, 0}, {1, 0}), Domain::half_space(3)}) {
    const Point x = canonical_interior_point(d);
    for (double c : {0.3, 0.5, 0.9, 1.5})
      for (double k : {1e-2, 1e-4, 1e-6})
        EXPECT_NEAR(family_defect_lemma31(d, x, c, k).defect, closed_form(c, k), 1e-6) << to_literal(d);
  }
}

TEST(CollapseFamily, ApproachesZeroFromAboveAtUnitConstant) {
  double prev = INFINITY;
  for (double k : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const double v = family_defect_lemma31(kPunctured, {1, 0}, 1.0, k).defect;
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(prev, 1e-2);
}

TEST(CollapseFamily, RejectsParameterOutsideUnitInterval) {
  EXPECT_THROW(family_defect_lemma31(kPunctured, {1, 0}, 0.5, 0.0), ArgumentError);
  EXPECT_THROW(family_defect_lemma31(kPunctured, {1, 0}, 0.5, 1.0), ArgumentError);
}

TEST(DiameterFamily, MatchesClosedForm) {
  EXPECT_NEAR(family_defect_lemma36(kB2, {-1, 0}, {1, 0}, 1.5, 1e-6).defect, kFam36OneAndHalf1e6, 1e-9);
  EXPECT_NEAR(family_defect_lemma36(kB2, {-1, 0}, {1, 0}, 1.5, 1e-8).defect, kFam36OneAndHalf1e8, 1e-9);
  const Domain twice = Domain::twice_punctured({-1, 0}, {1, 0});
  EXPECT_NEAR(family_defect_lemma36(twice, {-1, 0}, {1, 0}, 1.0, 1e-2).defect, kFam36One1e2, 1e-12);
}

TEST(DiameterFamily, LimitIsLogOfHalfConstant) {
  EXPECT_NEAR(family_defect_lemma36(kB2, {-1, 0}, {1, 0}, 1.5, 1e-8).defect, std::log(0.75), 1e-3);
  EXPECT_NEAR(family_defect_lemma36(kB2, {-1, 0}, {1, 0}, 2.0, 1e-10).defect, 0.0, 1e-4);
  EXPECT_NEAR(family_defect_lemma36(Domain::box({0, 0}, {1, 1}), {0, 0.5}, {1, 0.5}, 1.0, 1e-8).defect,
              std::log(0.5), 1e-3);
}

TEST(DiameterFamily, RejectsBadAnchorsAndParameters) {
  EXPECT_THROW(family_defect_lemma36(kB2, {-0.5, 0}, {1, 0}, 1.5, 1e-3), ArgumentError);
  // Diametral ball leaves the box.
  EXPECT_THROW(family_defect_lemma36(Domain::box({0, 0}, {2, 1}), {0, 0.5}, {2, 0.5}, 1.5, 1e-3), ArgumentError);
  EXPECT_NO_THROW(family_defect_lemma36(Domain::box({0, 0}, {2, 1}), {1, 0}, {1, 1}, 1.5, 1e-3));
  EXPECT_THROW(family_defect_lemma36(kB2, {-1, 0}, {1, 0}, 1.5, 0.5), ArgumentError);
  EXPECT_THROW(family_defect_lemma36(kB2, {-1, 0}, {1, 0}, 1.5, -0.1), ArgumentError);
}

TEST(DefectSearch, FindsCollapseViolationBelowUnitConstant) {
  const SearchResult r = min_defect_search(kH2, 0.9, {});
  EXPECT_LE(r.best.defect, std::log(0.9) + 0.02);
  EXPECT_LE(r.evaluations, SearchConfig{}.budget);
}

TEST(DefectSearch, NoSpuriousViolationAboveCritical) {
  EXPECT_GE(min_defect_search(kH2, 1.05, {}).best.defect, -1e-4);
  EXPECT_GE(min_defect_search(kB2, 2.05, {}).best.defect, -1e-4);
}

TEST(DefectSearch, FindsDiameterViolationInBall) {
  EXPECT_LE(min_defect_search(kB2, 1.5, {}).best.defect, std::log(0.75) + 0.02);
}

TEST(DefectSearch, ReportedTripleReproducesDefect) {
  const SearchResult r = min_defect_search(kPunctured, 0.7, {});
  const DefectRecord again = triangle_defect(kPunctured, 0.7, r.best.x, r.best.y, r.best.z);
  EXPECT_DOUBLE_EQ(again.defect, r.best.defect);
}

TEST(DefectSearch, DeterministicPerSeed) {
  SearchConfig cfg;
  cfg.seed = 9;
  cfg.budget = 20000;
  const SearchResult a = min_defect_search(Domain::segment_complement({-1, 0}, {1, 0}), 1.2, cfg);
  const SearchResult b = min_defect_search(Domain::segment_complement({-1, 0}, {1, 0}), 1.2, cfg);
  EXPECT_EQ(a.best.defect, b.best.defect);
  EXPECT_EQ(a.best.x, b.best.x);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(CriticalC, HalfSpaceBracketsOne) {
  const CriticalCInterval iv = critical_c(kH2, {});
  EXPECT_GE(iv.lo, 0.95);
  EXPECT_LE(iv.hi, 1.05);
  EXPECT_LE(iv.hi - iv.lo, 0.01);
  EXPECT_LE(iv.budget, 1000000);
  EXPECT_LT(iv.witness.defect, -iv.epsilon);
}

TEST(CriticalC, BallBracketsTwo) {
  const CriticalCInterval iv = critical_c(kB2, {});
  EXPECT_GE(iv.lo, 1.90);
  EXPECT_LE(iv.hi, 2.10);
}

TEST(CriticalC, InconsistentBracketThrows) {
  CriticalCConfig above;
  above.lo = 1.2;
  above.hi = 3.0;
  EXPECT_THROW(critical_c(kH2, above), SearchError);
  CriticalCConfig below;
  below.lo = 0.25;
  below.hi = 0.5;
  EXPECT_THROW(critical_c(kH2, below), SearchError);
}

TEST(CriticalC, RejectsTooFineWidth) {
  CriticalCConfig cfg;
  cfg.width = 1e-4;
  EXPECT_THROW(critical_c(kH2, cfg), ArgumentError);
}

TEST(Bounds, LabelsRoundTrip) {
  for (LemmaId id : kAllLemmas) EXPECT_EQ(parse_lemma_id(lemma_label(id)), id);
  EXPECT_THROW(parse_lemma_id("L9.9"), ArgumentError);
}

TEST(Bounds, DistanceRatioLemmaIsSharpOnHalfSpace) {
  const BoundReport r = quotient_bounds_check(LemmaId::L41, kH2, {1.0, 1.0, 2.0}, 20000, 0);
  EXPECT_EQ(r.violation_count, 0);
  EXPECT_GE(r.empirical_min, 0.5 - 1e-12);
  EXPECT_LE(r.empirical_max, 1.0 + 1e-12);
  EXPECT_NEAR(r.empirical_min, 0.5, 0.02);
  EXPECT_NEAR(r.empirical_max, 1.0, 0.02);
}

TEST(Bounds, HyperbolicComparisonOnHalfSpace) {
  const BoundReport r = quotient_bounds_check(LemmaId::L48, kH2, {1.0, 1.0, 2.0}, 20000, 0);
  EXPECT_EQ(r.violation_count, 0);
  EXPECT_NEAR(r.empirical_min, 1.0, 1e-3);
  EXPECT_NEAR(r.empirical_max, 2.0, 1e-3);
}

TEST(Bounds, HyperbolicComparisonNeedsHalfSpace) {
  EXPECT_THROW(quotient_bounds_check(LemmaId::L48, kB2, {}, 100, 0), ArgumentError);
  EXPECT_THROW(quotient_bounds_check(LemmaId::L48, kH2, {0.5, 1.0, 2.0}, 100, 0), ArgumentError);
}

TEST(Bounds, ConvexVariantNeedsConvexDomain) {
  EXPECT_THROW(quotient_bounds_check(LemmaId::C47Convex, kPunctured, {}, 100, 0), ArgumentError);
}

TEST(Bounds, NoViolationsAcrossDomains) {
  for (const Domain& d : {kH2, kB2, kPunctured, Domain::twice_punctured({-1, 0}, {1, 0}),
                          Domain::segment_complement({-1, 0}, {1, 0}), Domain::box({0, 0}, {1, 1})}) {
    for (LemmaId id : {LemmaId::L41, LemmaId::C42, LemmaId::L43, LemmaId::L45, LemmaId::L46, LemmaId::C47}) {
      const BoundReport r = quotient_bounds_check(id, d, {1.5, 1.0, 2.0}, 5000, 1);
      EXPECT_EQ(r.violation_count, 0) << lemma_label(id) << " on " << to_literal(d);
      EXPECT_LE(r.theoretical_lo, r.empirical_min + kBoundSlack);
      EXPECT_GE(r.theoretical_hi, r.empirical_max - kBoundSlack);
    }
  }
}

TEST(Bounds, RetractedUpperBoundHasWitness) {
  const BoundReport r = quotient_bounds_check(LemmaId::R44, kH2, {0.5, 1.0, 2.0}, 10000, 0);
  EXPECT_TRUE(r.retracted);
  ASSERT_GT(r.violation_count, 0);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_LE(r.violations.size(), kMaxWitnesses);
  const Witness& w = r.violations.front();
  EXPECT_NEAR(dist_to_boundary(kH2, w.x), dist_to_boundary(kH2, w.y), 1e-12);
  EXPECT_GT(h_metric(kH2, 0.5, w.x, w.y), 0.5 * j_metric(kH2, w.x, w.y));
}

TEST(Bounds, SweepIsDeterministic) {
  const BoundReport a = quotient_bounds_check(LemmaId::L46, kB2, {1.0, 1.0, 2.0}, 5000, 3);
  const BoundReport b = quotient_bounds_check(LemmaId::L46, kB2, {1.0, 1.0, 2.0}, 5000, 3);
  EXPECT_EQ(a.empirical_min, b.empirical_min);
  EXPECT_EQ(a.empirical_max, b.empirical_max);
}

TEST(ExtremalConfig, JStarQuotient) {
  for (double c : {0.5, 1.0, 2.0, 5.0, 100.0}) {
    const auto [x, y] = extremal_config_jstar(c);
    const double q = j_star(kH2, x, y) / th_half_h(kH2, c, x, y);
    EXPECT_NEAR(q, std::sqrt(1.0 + 1.0 / (c * c)), 1e-12) << c;
  }
  EXPECT_NEAR(extremal_config_jstar(1.0).second[1], 5.8284271247461901, 1e-12);
  EXPECT_NEAR(extremal_config_jstar(100.0).second[1], 40001.99997500125, 1e-8);
}

TEST(ExtremalConfig, PointPairQuotient) {
  for (double c : {0.5, 1.0, 2.0, 5.0}) {
    const auto [x, y] = extremal_config_p(c);
    const double q = p_metric(kH2, x, y) / th_half_h(kH2, c, x, y);
    EXPECT_NEAR(q, std::sqrt(1.0 + 1.0 / (c * c)), 1e-12) << c;
  }
  const auto [x, y] = extremal_config_p(1.0);
  EXPECT_EQ(y, (Point{2, 1}));
  EXPECT_NEAR(p_metric(kH2, x, y), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(th_half_h(kH2, 1.0, x, y), 0.5, 1e-15);
}

TEST(ExtremalConfig, ThreeDimensional) {
  const Domain h3 = Domain::half_space(3);
  const auto [x, y] = extremal_config_jstar(2.0, 3);
  EXPECT_NEAR(j_star(h3, x, y) / th_half_h(h3, 2.0, x, y), std::sqrt(1.25), 1e-12);
}

TEST(Mobius, InvariantWithinSlack) {
  for (std::size_t n : {2u, 3u}) {
    const BoundReport r = mobius_invariance_check(1.5, 1000, 0, n);
    EXPECT_EQ(r.violation_count, 0);
    EXPECT_NEAR(r.empirical_min, 1.0, 1e-12);
    EXPECT_NEAR(r.empirical_max, 1.0, 1e-12);
  }
}
