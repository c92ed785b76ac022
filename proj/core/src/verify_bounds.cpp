#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hypmetric/errors.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/parallel.hpp"
#include "hypmetric/random.hpp"
#include "hypmetric/verify.hpp"

namespace hypmetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kChunks = 64;

struct Bounds {
  double lo = 0.0, hi = 0.0;
  bool lo_sharp = false, hi_sharp = false;
  bool retracted = false;
  const char* quotient = "";
};

Bounds theoretical_bounds(LemmaId lemma, const Domain& domain, const BoundParams& p) {
  const double c = p.c;
  auto need_c = [&] {
    if (!(c > 0.0) || !std::isfinite(c)) throw ArgumentError("constant c must be a positive finite number");
  };
  const double th_hi = std::sqrt(1.0 + 1.0 / (c * c));
  switch (lemma) {
    case LemmaId::L41:
      if (!(p.c0 > 0.0) || !(p.c1 >= p.c0) || !std::isfinite(p.c1))
        throw ArgumentError("constants must satisfy 0 < c0 <= c1");
      return {p.c0 / p.c1, 1.0, true, true, false, "h_c0(x,y) / h_c1(x,y)"};
    case LemmaId::C42:
      need_c();
      if (!(c < 2.0)) throw ArgumentError("the relaxed triangle inequality needs 0 < c < 2");
      return {0.0, 2.0 / c, false, false, false, "h(x,y) / (h(x,z) + h(z,y))"};
    case LemmaId::L43:
      need_c();
      return {0.5 * std::min(c, 1.0), std::max(c, 1.0), false, true, false, "h(x,y) / j(x,y)"};
    case LemmaId::L45:
      need_c();
      return {std::min(1.0, 1.0 / c), std::sqrt(1.0 + 1.0 / (c * c)), true, true, false, "j*(x,y) / th(h(x,y)/2)"};
    case LemmaId::L46:
      need_c();
      return {std::min(1.0, 1.0 / c), th_hi, true, true, false, "p(x,y) / th(h(x,y)/2)"};
    case LemmaId::C47:
      need_c();
      return {std::min(1.0, 1.0 / c), std::sqrt(2.0 + 2.0 / (c * c)), false, false, false, "s(x,y) / th(h(x,y)/2)"};
    case LemmaId::C47Convex:
      need_c();
      if (!domain.is_convex()) throw ArgumentError("the convex-domain bound needs a convex domain");
      return {std::min(1.0, 1.0 / c), th_hi, false, false, false, "s(x,y) / th(h(x,y)/2)"};
    case LemmaId::L48:
      need_c();
      if (domain.kind() != DomainKind::HalfSpace) throw ArgumentError("the rho/h bound is stated on the half-space");
      if (!(c >= 1.0)) throw ArgumentError("the rho/h bound needs c >= 1");
      return {1.0 / c, 2.0, true, true, false, "rho(x,y) / h(x,y)"};
    case LemmaId::R44:
      need_c();
      return {c / (2.0 * (1.0 + c)), c, false, false, true, "h(x,y) / j(x,y)"};
  }
  throw ArgumentError("unknown lemma id");
}

double pair_quotient(LemmaId lemma, const Domain& d, const BoundParams& p, const Point& x, const Point& y) {
  switch (lemma) {
    case LemmaId::L41: return h_metric(d, p.c0, x, y) / h_metric(d, p.c1, x, y);
    case LemmaId::L43:
    case LemmaId::R44: return h_metric(d, p.c, x, y) / j_metric(d, x, y);
    case LemmaId::L45: return j_star(d, x, y) / th_half_h(d, p.c, x, y);
    case LemmaId::L46: return p_metric(d, x, y) / th_half_h(d, p.c, x, y);
    case LemmaId::C47:
    case LemmaId::C47Convex: return s_metric(d, x, y) / th_half_h(d, p.c, x, y);
    case LemmaId::L48: return rho_half_space(x, y) / h_metric(d, p.c, x, y);
    case LemmaId::C42: break;
  }
  throw ArgumentError("lemma needs a triple");
}

double triple_quotient(const Domain& d, double c, const Point& x, const Point& y, const Point& z) {
  return h_metric(d, c, x, y) / (h_metric(d, c, x, z) + h_metric(d, c, z, y));
}

bool usable(const Domain& d, const Point& y) {
  return y.is_finite() && contains(d, y) && dist_to_boundary(d, y) > 1e-12;
}

/// y at log-uniform distance |x-y| in [1e-6, 1e3] d(x) in a random direction;
/// the separation is halved until y lies inside.
Point separated_point(const Domain& d, Rng& rng, const Point& x) {
  const double dx = dist_to_boundary(d, x);
  double sep = dx * std::pow(10.0, rng.uniform(-6.0, 3.0));
  const Point dir = rng.unit_vector(d.dim());
  while (true) {
    Point y = x + dir * sep;
    if (usable(d, y) && !(y == x)) return y;
    sep *= 0.5;
  }
}

/// Partner with d(y) = d(x) where the domain makes that easy, generic otherwise.
Point equidistant_point(const Domain& d, Rng& rng, const Point& x) {
  const std::size_t n = d.dim();
  switch (d.kind()) {
    case DomainKind::HalfSpace: {
      Point dir = rng.unit_vector(n);
      dir.last() = 0.0;
      const double len = norm(dir);
      if (len < 1e-12) return separated_point(d, rng, x);
      const double sep = x.last() * std::pow(10.0, rng.uniform(-6.0, 3.0));
      return x + dir * (sep / len);
    }
    case DomainKind::UnitBall: {
      Point y = rng.unit_vector(n) * norm(x);
      return usable(d, y) && !(y == x) ? y : separated_point(d, rng, x);
    }
    case DomainKind::PuncturedSpace: {
      const Point& p = std::get<PuncturedSpace>(d.variant()).p;
      Point y = p + rng.unit_vector(n) * distance(x, p);
      return usable(d, y) && !(y == x) ? y : separated_point(d, rng, x);
    }
    default: return separated_point(d, rng, x);
  }
}

Point unit_tangent(const Point& normal) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < normal.dim(); ++i)
    if (std::abs(normal[i]) < std::abs(normal[k])) k = i;
  Point t = Point::basis(normal.dim(), k);
  t -= normal * dot(t, normal);
  return t * (1.0 / norm(t));
}

struct Sample {
  Point x, y;
  std::optional<Point> z;
};

/// Deterministic pairs that push the quotients to their limits: near and far
/// tangential partners, partners approaching the nearest boundary point, and
/// partners far along the normal.
std::vector<Sample> limit_probes(const Domain& d) {
  const Point x0 = canonical_interior_point(d);
  const Point q = nearest_boundary_point(d, x0);
  const double dist = distance(x0, q);
  const Point normal = (x0 - q) * (1.0 / dist);
  const Point tangent = unit_tangent(normal);
  std::vector<Sample> out;
  auto push = [&](Point y) {
    if (usable(d, y) && !(y == x0)) out.push_back({x0, std::move(y), std::nullopt});
  };
  for (int m = 1; m <= 9; ++m) push(x0 + tangent * (std::pow(10.0, -m) * dist));
  for (int m = 1; m <= 15; ++m) push(q + (x0 - q) * std::pow(10.0, -m));
  for (int m = 0; m <= 40; ++m) {
    push(x0 + normal * (std::pow(10.0, m) * dist));
    push(x0 + tangent * (std::pow(10.0, m) * dist));
  }
  return out;
}

std::vector<Sample> triple_probes(const Domain& d, double c) {
  std::vector<Sample> out;
  const Point x0 = canonical_interior_point(d);
  for (int m = 1; m <= 7; ++m) {
    const DefectRecord r = family_defect_lemma31(d, x0, c, std::pow(10.0, -m));
    out.push_back({r.x, r.y, r.z});
  }
  for (const auto& [u, v] : diameter_anchors(d)) {
    for (int m = 1; m <= 7; ++m) {
      const DefectRecord r = family_defect_lemma36(d, u, v, c, std::pow(10.0, -m));
      out.push_back({r.x, r.y, r.z});
    }
  }
  return out;
}

struct Extremes {
  double min = kInf, max = -kInf;
  std::optional<Witness> argmin, argmax;
  std::int64_t count = 0;
  std::int64_t violation_count = 0;
  std::vector<Witness> violations;

  void add(const Sample& s, double q, const Bounds& b) {
    ++count;
    const auto witness = [&] { return Witness{s.x, s.y, s.z, q}; };
    if (q < min) {
      min = q;
      argmin = witness();
    }
    if (q > max) {
      max = q;
      argmax = witness();
    }
    if (q < b.lo - kBoundSlack || q > b.hi + kBoundSlack) {
      ++violation_count;
      if (violations.size() < kMaxWitnesses) violations.push_back(witness());
    }
  }

  // Merging in a fixed order with strict comparisons reproduces a serial scan.
  void merge(const Extremes& o) {
    count += o.count;
    if (o.min < min) {
      min = o.min;
      argmin = o.argmin;
    }
    if (o.max > max) {
      max = o.max;
      argmax = o.argmax;
    }
    violation_count += o.violation_count;
    for (const Witness& w : o.violations)
      if (violations.size() < kMaxWitnesses) violations.push_back(w);
  }
};

double evaluate_sample(LemmaId lemma, const Domain& d, const BoundParams& p, const Sample& s) {
  return s.z ? triple_quotient(d, p.c, s.x, s.y, *s.z) : pair_quotient(lemma, d, p, s.x, s.y);
}

BoundReport make_report(std::string id, const Bounds& b, const Extremes& sweep, const Extremes& probes) {
  Extremes all = sweep;
  all.merge(probes);
  BoundReport r;
  r.lemma_id = std::move(id);
  r.quotient = b.quotient;
  r.sample_count = sweep.count;
  r.empirical_min = all.min;
  r.empirical_max = all.max;
  r.theoretical_lo = b.lo;
  r.theoretical_hi = b.hi;
  r.lo_sharp = b.lo_sharp;
  r.hi_sharp = b.hi_sharp;
  r.retracted = b.retracted;
  r.violations = all.violations;
  r.violation_count = all.violation_count;
  r.sweep_min = sweep.min;
  r.sweep_max = sweep.max;
  r.probe_count = probes.count;
  r.probe_min = probes.min;
  r.probe_max = probes.max;
  r.argmin = all.argmin;
  r.argmax = all.argmax;
  return r;
}

/// Runs `draw` for every sample index in fixed chunks, each chunk with its own
/// RNG stream, and merges chunk results in chunk order.
template <class Draw>
Extremes chunked_sweep(std::int64_t sample_count, std::uint64_t seed, const Bounds& b, Draw draw) {
  const std::size_t total = static_cast<std::size_t>(std::max<std::int64_t>(0, sample_count));
  const std::size_t chunks = std::min(kChunks, std::max<std::size_t>(1, total));
  std::vector<Extremes> parts(chunks);
  parallel_for(chunks, [&](std::size_t k) {
    Rng rng(Rng::stream(seed, k));
    const std::size_t begin = total * k / chunks, end = total * (k + 1) / chunks;
    for (std::size_t i = begin; i < end; ++i) {
      const auto [sample, q] = draw(rng);
      if (std::isfinite(q)) parts[k].add(sample, q, b);
    }
  });
  Extremes out;
  for (const Extremes& e : parts) out.merge(e);
  return out;
}

}  // namespace

LemmaId parse_lemma_id(std::string_view label) {
  for (LemmaId id : kAllLemmas)
    if (lemma_label(id) == label) return id;
  throw ArgumentError("unknown lemma id '" + std::string(label) + "'");
}

std::string_view lemma_label(LemmaId id) {
  switch (id) {
    case LemmaId::L41: return "L4.1";
    case LemmaId::C42: return "C4.2";
    case LemmaId::L43: return "L4.3";
    case LemmaId::L45: return "L4.5";
    case LemmaId::L46: return "L4.6";
    case LemmaId::C47: return "C4.7";
    case LemmaId::C47Convex: return "C4.7-convex";
    case LemmaId::L48: return "L4.8";
    case LemmaId::R44: return "R4.4";
  }
  return "?";
}

std::pair<Point, Point> extremal_config_jstar(double c, std::size_t dim) {
  if (!(c > 0.0)) throw ArgumentError("constant c must be positive");
  if (dim < 2) throw ArgumentError("dimension must be at least 2");
  const Point x = Point::basis(dim, dim - 1);
  Point y = x;
  y.last() = 1.0 + 2.0 * c * (c + std::sqrt(c * c + 1.0));
  return {x, y};
}

std::pair<Point, Point> extremal_config_p(double c, std::size_t dim) {
  if (!(c > 0.0)) throw ArgumentError("constant c must be positive");
  if (dim < 2) throw ArgumentError("dimension must be at least 2");
  const Point x = Point::basis(dim, dim - 1);
  Point y = x;
  y[0] = 2.0 * c;
  return {x, y};
}

BoundReport quotient_bounds_check(LemmaId lemma, const Domain& domain, const BoundParams& params,
                                  std::int64_t sample_count, std::uint64_t seed) {
  if (sample_count < 0) throw ArgumentError("sample count must be nonnegative");
  const Bounds b = theoretical_bounds(lemma, domain, params);
  const BoundingBox box = default_box(domain);

  const Extremes sweep = chunked_sweep(sample_count, seed, b, [&](Rng& rng) {
    Sample s;
    s.x = sample_interior(domain, rng, box);
    if (lemma == LemmaId::C42) {
      s.y = separated_point(domain, rng, s.x);
      s.z = separated_point(domain, rng, s.x);
    } else if (lemma == LemmaId::R44) {
      s.y = equidistant_point(domain, rng, s.x);
    } else {
      s.y = separated_point(domain, rng, s.x);
    }
    const double q = evaluate_sample(lemma, domain, params, s);
    return std::pair{std::move(s), q};
  });

  std::vector<Sample> probes = lemma == LemmaId::C42 ? triple_probes(domain, params.c) : limit_probes(domain);
  std::optional<double> gap;
  if (domain.kind() == DomainKind::HalfSpace && (lemma == LemmaId::L45 || lemma == LemmaId::L46)) {
    auto [x, y] = lemma == LemmaId::L45 ? extremal_config_jstar(params.c, domain.dim())
                                        : extremal_config_p(params.c, domain.dim());
    gap = b.hi - pair_quotient(lemma, domain, params, x, y);
    probes.push_back({std::move(x), std::move(y), std::nullopt});
  }
  Extremes probe_extremes;
  for (const Sample& s : probes) {
    const double q = evaluate_sample(lemma, domain, params, s);
    if (std::isfinite(q)) probe_extremes.add(s, q, b);
  }

  BoundReport r = make_report(std::string(lemma_label(lemma)), b, sweep, probe_extremes);
  r.attainment_gap = gap;
  return r;
}

BoundReport mobius_invariance_check(double c, std::int64_t sample_count, std::uint64_t seed, std::size_t dim) {
  if (!(c > 0.0)) throw ArgumentError("constant c must be positive");
  if (dim != 2 && dim != 3) throw UnsupportedDimensionError("invariance check supports dimensions 2 and 3");
  if (sample_count < 0) throw ArgumentError("sample count must be nonnegative");
  const Domain h = Domain::half_space(dim);
  const Bounds b{1.0, 1.0, false, false, false, "h(f(x),f(y)) / h(x,y)"};

  auto draw_point = [&](Rng& rng) {
    Point p(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) p[i] = rng.uniform(-5.0, 5.0);
    p.last() = 5.0 - rng.uniform(0.0, 4.99);
    return p;
  };
  Point shift(dim);
  shift[0] = 5.0;
  const std::array<Point (*)(const Point&, const Point&), 3> maps{
      [](const Point& p, const Point&) { return p * 3.0; },
      [](const Point& p, const Point& b) { return p + b; },
      [](const Point& p, const Point&) { return p * (1.0 / squared_norm(p)); },
  };

  // Each sample contributes three ratios; the worst deviation from 1 is kept.
  const Extremes sweep = chunked_sweep(sample_count, seed, b, [&](Rng& rng) {
    Sample s{draw_point(rng), draw_point(rng), std::nullopt};
    const double base = h_metric(h, c, s.x, s.y);
    double worst = 1.0;
    for (const auto& f : maps) {
      const double q = h_metric(h, c, f(s.x, shift), f(s.y, shift)) / base;
      if (std::abs(q - 1.0) > std::abs(worst - 1.0)) worst = q;
    }
    return std::pair{std::move(s), worst};
  });
  return make_report("mobius", b, sweep, Extremes{});
}

}  // namespace hypmetric
