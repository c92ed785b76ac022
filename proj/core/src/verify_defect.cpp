#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "hypmetric/errors.hpp"
#include "hypmetric/metrics.hpp"
#include "hypmetric/parallel.hpp"
#include "hypmetric/random.hpp"
#include "hypmetric/verify.hpp"

namespace hypmetric {

namespace {

constexpr double kSearchMargin = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Triple = std::array<Point, 3>;  // x, y, z

/// Double-precision defect used inside the search loop; +inf for triples that
/// leave the margin band.
class DefectEvaluator {
 public:
  DefectEvaluator(const Domain& domain, double c) : domain_(domain), c_(c) {}

  double operator()(const Triple& t) {
    ++count_;
    double d[3];
    for (int i = 0; i < 3; ++i) {
      if (!contains(domain_, t[i])) return kInf;
      d[i] = dist_to_boundary(domain_, t[i]);
      if (d[i] < kSearchMargin) return kInf;
    }
    const double hxz = std::log1p(c_ * distance(t[0], t[2]) / std::sqrt(d[0] * d[2]));
    const double hzy = std::log1p(c_ * distance(t[2], t[1]) / std::sqrt(d[2] * d[1]));
    const double hxy = std::log1p(c_ * distance(t[0], t[1]) / std::sqrt(d[0] * d[1]));
    return hxz + hzy - hxy;
  }

  std::int64_t count() const noexcept { return count_; }

 private:
  const Domain& domain_;
  double c_;
  std::int64_t count_ = 0;
};

/// Compass search over the 3n coordinates of a triple. Steps are relative to
/// each point's boundary distance so the search can follow minimizers that
/// collapse onto the boundary.
double polish(const Domain& domain, DefectEvaluator& eval, Triple& t, double value, std::int64_t budget) {
  const std::int64_t stop = eval.count() + budget;
  const std::size_t n = domain.dim();
  double step = 0.25;
  while (step > 1e-7 && eval.count() < stop) {
    bool improved = false;
    for (int i = 0; i < 3 && eval.count() < stop; ++i) {
      for (std::size_t j = 0; j < n && eval.count() < stop; ++j) {
        const double scale = dist_to_boundary(domain, t[i]);
        for (double sign : {1.0, -1.0}) {
          if (eval.count() >= stop) break;
          Triple cand = t;
          cand[i][j] += sign * step * scale;
          if (!contains(domain, cand[i]) || dist_to_boundary(domain, cand[i]) < kSearchMargin)
            cand[i] = project_inside(domain, cand[i], kSearchMargin);
          const double v = eval(cand);
          if (v < value) {
            value = v;
            t = std::move(cand);
            improved = true;
            break;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return value;
}

struct Candidate {
  Triple triple;
  double value = kInf;
};

Triple to_triple(const DefectRecord& r) { return {r.x, r.y, r.z}; }

}  // namespace

DefectRecord triangle_defect(const Domain& domain, double c, const Point& x, const Point& y, const Point& z) {
  const long double hxz = h_metric_extended(domain, c, x, z);
  const long double hzy = h_metric_extended(domain, c, z, y);
  const long double hxy = h_metric_extended(domain, c, x, y);

  const double dx = dist_to_boundary(domain, x);
  const double dy = dist_to_boundary(domain, y);
  const double dz = dist_to_boundary(domain, z);
  const double xz = distance(x, z), zy = distance(z, y), xy = distance(x, y);

  DefectRecord r;
  r.x = x;
  r.y = y;
  r.z = z;
  r.c = c;
  r.defect = static_cast<double>(hxz + hzy - hxy);
  r.polynomial_form = xz * std::sqrt(dz * dy) + zy * std::sqrt(dx * dz) + c * xz * zy - xy * dz;
  return r;
}

DefectRecord family_defect_lemma31(const Domain& domain, const Point& x, double c, double k) {
  if (!(k > 0.0 && k < 1.0)) throw ArgumentError("family parameter k must lie in (0, 1)");
  const Point q = nearest_boundary_point(domain, x);
  // q + k(x - q) == x + (1 - k)(q - x), written to keep tiny k exact.
  const Point z = q + (x - q) * k;
  const Point y = q + (x - q) * (k * k);
  DefectRecord r = triangle_defect(domain, c, x, y, z);
  r.k = k;
  return r;
}

DefectRecord family_defect_lemma36(const Domain& domain, const Point& u, const Point& v, double c, double k) {
  if (!(k > 0.0 && k < 0.5)) throw ArgumentError("family parameter k must lie in (0, 1/2)");
  if (u.dim() != domain.dim() || v.dim() != domain.dim()) throw ArgumentError("anchor dimension mismatch");
  const double half = 0.5 * distance(u, v);
  const double tol = 1e-9 * std::max(1.0, half);
  if (!(half > 0.0) || !on_boundary(domain, u, tol) || !on_boundary(domain, v, tol))
    throw ArgumentError("family anchors u, v must be distinct boundary points");
  const Point z = lerp(u, v, 0.5);
  if (!contains(domain, z) || dist_to_boundary(domain, z) < half - tol)
    throw ArgumentError("the ball with diameter [u, v] is not contained in the domain");
  DefectRecord r = triangle_defect(domain, c, lerp(u, v, k), lerp(v, u, k), z);
  r.k = k;
  return r;
}

SearchResult min_defect_search(const Domain& domain, double c, const SearchConfig& cfg) {
  if (!(c > 0.0)) throw ArgumentError("constant c must be positive");
  if (cfg.budget < 1) throw ArgumentError("search budget must be at least 1");
  if (cfg.restarts < 0) throw ArgumentError("restart count must be nonnegative");
  const BoundingBox box = cfg.box.value_or(default_box(domain));

  // Family phase: the infimum is approached only as the family parameter
  // tends to zero, so these seeds carry the search near critical c.
  DefectEvaluator eval(domain, c);
  std::vector<Candidate> seeds;
  std::vector<Point> anchors{canonical_interior_point(domain)};
  Rng anchor_rng(Rng::stream(cfg.seed, 0xA11CE));
  for (int i = 0; i < 3; ++i) anchors.push_back(sample_interior(domain, anchor_rng, box));
  for (const Point& x : anchors) {
    for (double k : kFamilyKs) {
      const DefectRecord r = family_defect_lemma31(domain, x, c, k);
      Triple t = to_triple(r);
      const double v = eval(t);
      seeds.push_back({std::move(t), v});
    }
  }
  for (const auto& [u, v] : diameter_anchors(domain)) {
    for (double k : kFamilyKs) {
      const DefectRecord r = family_defect_lemma36(domain, u, v, c, k);
      Triple t = to_triple(r);
      const double val = eval(t);
      seeds.push_back({std::move(t), val});
    }
  }
  std::stable_sort(seeds.begin(), seeds.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  const std::int64_t family_budget = std::max<std::int64_t>(0, cfg.budget / 4 - eval.count());
  constexpr std::size_t kPolished = 4;
  const std::size_t polished = std::min(kPolished, seeds.size());
  Candidate best = seeds.front();
  for (std::size_t i = 0; i < polished && eval.count() < cfg.budget; ++i) {
    Candidate cand = seeds[i];
    cand.value = polish(domain, eval, cand.triple, cand.value,
                        std::min<std::int64_t>(family_budget / static_cast<std::int64_t>(polished),
                                               cfg.budget - eval.count()));
    if (cand.value < best.value) best = std::move(cand);
  }
  std::int64_t evaluations = eval.count();

  // Random phase: independent restarts, each with its own RNG stream and budget.
  if (best.value >= cfg.stop_below && cfg.restarts > 0 && evaluations < cfg.budget) {
    const std::int64_t per_restart = (cfg.budget - evaluations) / cfg.restarts;
    std::vector<Candidate> results(static_cast<std::size_t>(cfg.restarts));
    std::vector<std::int64_t> used(results.size(), 0);
    if (per_restart > 0) {
      parallel_for(results.size(), [&](std::size_t r) {
        Rng rng(Rng::stream(cfg.seed, r + 1));
        DefectEvaluator local(domain, c);
        Triple t{sample_interior(domain, rng, box), sample_interior(domain, rng, box),
                 sample_interior(domain, rng, box)};
        double v = local(t);
        v = polish(domain, local, t, v, per_restart - 1);
        results[r] = {std::move(t), v};
        used[r] = local.count();
      });
    }
    for (std::size_t r = 0; r < results.size(); ++r) {
      evaluations += used[r];
      if (results[r].value < best.value) best = results[r];
    }
  }

  SearchResult out;
  out.best = triangle_defect(domain, c, best.triple[0], best.triple[1], best.triple[2]);
  out.evaluations = evaluations;
  return out;
}

CriticalCInterval critical_c(const Domain& domain, const CriticalCConfig& cfg) {
  if (!(cfg.width >= 1e-3)) throw ArgumentError("bisection width must be at least 1e-3");
  if (!(cfg.lo > 0.0 && cfg.lo < cfg.hi)) throw ArgumentError("critical-c search needs 0 < lo < hi");
  if (!(cfg.epsilon > 0.0)) throw ArgumentError("defect tolerance must be positive");

  CriticalCInterval out;
  out.epsilon = cfg.epsilon;
  SearchConfig search = cfg.search;
  search.stop_below = -cfg.epsilon;
  auto probe = [&](double c) -> std::optional<DefectRecord> {
    const SearchResult r = min_defect_search(domain, c, search);
    out.budget += r.evaluations;
    ++out.steps;
    if (r.best.defect < -cfg.epsilon) return r.best;
    return std::nullopt;
  };

  double lo = cfg.lo, hi = cfg.hi;
  auto low_witness = probe(lo);
  if (!low_witness)
    throw SearchError("no defect below -epsilon at c = " + std::to_string(lo) + "; the bracket is inconsistent");
  if (probe(hi))
    throw SearchError("defect below -epsilon at c = " + std::to_string(hi) + "; the bracket is inconsistent");
  out.witness = *low_witness;
  while (hi - lo > cfg.width) {
    const double mid = 0.5 * (lo + hi);
    if (auto w = probe(mid)) {
      lo = mid;
      out.witness = *w;
    } else {
      hi = mid;
    }
  }
  out.lo = lo;
  out.hi = hi;
  return out;
}

}  // namespace hypmetric
