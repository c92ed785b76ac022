#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypmetric/domains.hpp"
#include "hypmetric/point.hpp"

namespace hypmetric {

// ---------------------------------------------------------------------------
// Triangle defects

/// A triple with its triangle-inequality defect under h_{G,c}. A negative
/// defect certifies that h_{G,c} violates the triangle inequality.
struct DefectRecord {
  Point x, y, z;
  double c = 0.0;
  /// h(x,z) + h(z,y) - h(x,y), evaluated in extended precision.
  double defect = 0.0;
  /// |x-z| sqrt(d(z) d(y)) + |y-z| sqrt(d(x) d(z)) + c |x-z||z-y| - |x-y| d(z).
  /// Has the sign of `defect`; reported for cross-checking.
  double polynomial_form = 0.0;
  /// Family parameter k when the triple comes from a family generator.
  std::optional<double> k;
};

DefectRecord triangle_defect(const Domain& domain, double c, const Point& x, const Point& y, const Point& z);

/// Collapse toward the nearest boundary point q of x:
/// z = x + (1-k)(q-x), y = x + (1-k^2)(q-x). The defect tends to log(c) as
/// k -> 0+ on every domain, so h_{G,c} fails for c < 1. Requires 0 < k < 1.
DefectRecord family_defect_lemma31(const Domain& domain, const Point& x, double c, double k);

/// x = u + k(v-u), y = v + k(u-v), z = (u+v)/2 for boundary points u, v whose
/// diametral ball lies in the domain. The defect tends to log(c/2) as k -> 0+.
/// Requires 0 < k < 1/2; throws ArgumentError when u, v do not qualify.
DefectRecord family_defect_lemma36(const Domain& domain, const Point& u, const Point& v, double c, double k);

/// Family parameters used to seed the defect search.
inline constexpr double kFamilyKs[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7};

struct SearchConfig {
  int restarts = 32;
  /// Total defect evaluations allowed for one search.
  std::int64_t budget = 60000;
  /// Sampling box for random restarts; default_box(domain) when empty.
  std::optional<BoundingBox> box;
  std::uint64_t seed = 0;
  /// Skip the random restarts once the family phase has reached this value.
  double stop_below = -std::numeric_limits<double>::infinity();
};

struct SearchResult {
  DefectRecord best;
  std::int64_t evaluations = 0;
};

/// Most negative triangle defect found by compass-search polishing of family
/// seeds (k in kFamilyKs) and random triples. Deterministic in (seed, budget,
/// restarts) regardless of thread count.
SearchResult min_defect_search(const Domain& domain, double c, const SearchConfig& cfg = {});

struct CriticalCConfig {
  double lo = 0.25;
  double hi = 4.0;
  /// Bisection stops once hi - lo <= width. Must be >= 1e-3.
  double width = 0.01;
  double epsilon = 1e-4;
  SearchConfig search{};
};

/// Bracket of the empirical critical constant: a defect below -epsilon was
/// found at c = lo and none within budget at c = hi.
struct CriticalCInterval {
  double lo = 0.0;
  double hi = 0.0;
  double epsilon = 0.0;
  /// Defect evaluations spent over the whole bisection.
  std::int64_t budget = 0;
  int steps = 0;
  DefectRecord witness;
};

CriticalCInterval critical_c(const Domain& domain, const CriticalCConfig& cfg = {});

// ---------------------------------------------------------------------------
// Quotient bounds

enum class LemmaId { L41, C42, L43, L45, L46, C47, C47Convex, L48, R44 };

/// "L4.1", "C4.2", "L4.3", "L4.5", "L4.6", "C4.7", "C4.7-convex", "L4.8", "R4.4".
LemmaId parse_lemma_id(std::string_view label);
std::string_view lemma_label(LemmaId id);
inline constexpr LemmaId kAllLemmas[] = {LemmaId::L41, LemmaId::C42, LemmaId::L43, LemmaId::L45, LemmaId::L46,
                                         LemmaId::C47, LemmaId::C47Convex, LemmaId::L48, LemmaId::R44};

struct BoundParams {
  double c = 1.0;
  double c0 = 1.0;
  double c1 = 2.0;
};

struct Witness {
  Point x, y;
  std::optional<Point> z;
  double quotient = 0.0;
};

struct BoundReport {
  std::string lemma_id;
  std::string quotient;
  std::int64_t sample_count = 0;
  /// Extremes over random samples and deterministic limit probes together.
  double empirical_min = 0.0;
  double empirical_max = 0.0;
  double theoretical_lo = 0.0;
  double theoretical_hi = 0.0;
  /// Whether the lemma claims the constant is best possible.
  bool lo_sharp = false;
  bool hi_sharp = false;
  /// Quotients outside [lo - 1e-12, hi + 1e-12]; at most kMaxWitnesses kept.
  std::vector<Witness> violations;
  std::int64_t violation_count = 0;
  /// For retracted bounds (R4.4) a violation is the expected refutation.
  bool retracted = false;

  double sweep_min = 0.0, sweep_max = 0.0;
  std::int64_t probe_count = 0;
  double probe_min = 0.0, probe_max = 0.0;
  std::optional<Witness> argmin, argmax;
  /// hi minus the quotient at the exact extremal configuration (L4.5, L4.6 on
  /// the half-space).
  std::optional<double> attainment_gap;
};

inline constexpr double kBoundSlack = 1e-12;
inline constexpr std::size_t kMaxWitnesses = 8;

/// Sweeps `sample_count` seeded pairs (triples for C4.2) with log-uniform
/// separations |x-y| in [1e-6, 1e3] d_G(x), adds deterministic limit probes,
/// and compares the quotient's extremes to the lemma's constants.
BoundReport quotient_bounds_check(LemmaId lemma, const Domain& domain, const BoundParams& params,
                                  std::int64_t sample_count, std::uint64_t seed);

/// x = e_n, y = (1 + 2c(c + sqrt(c^2+1))) e_n in H^dim: j* / th(h/2) = sqrt(1 + 1/c^2).
std::pair<Point, Point> extremal_config_jstar(double c, std::size_t dim = 2);

/// x = e_n, y = e_n + 2c e_1 in H^dim: p / th(h/2) = sqrt(1 + 1/c^2).
std::pair<Point, Point> extremal_config_p(double c, std::size_t dim = 2);

/// Ratio h(f(x), f(y)) / h(x, y) on H^dim for f a dilation (factor 3), a
/// horizontal translation and the inversion x -> x/|x|^2. Bounds are [1, 1]
/// with kBoundSlack.
BoundReport mobius_invariance_check(double c, std::int64_t sample_count, std::uint64_t seed, std::size_t dim = 2);

}  // namespace hypmetric
