#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hypmetric/point.hpp"
#include "hypmetric/random.hpp"

namespace hypmetric {

/// {x : x_n > 0}
struct HalfSpace {};
/// B^n(0, 1)
struct UnitBall {};
/// R^n \ {p}
struct PuncturedSpace {
  Point p;
};
/// R^n \ {u, v}
struct TwicePunctured {
  Point u, v;
};
/// R^n \ [u, v]
struct SegmentComplement {
  Point u, v;
};
/// Open box prod_i (lo_i, hi_i).
struct Box {
  Point lo, hi;
};

enum class DomainKind { HalfSpace, UnitBall, PuncturedSpace, TwicePunctured, SegmentComplement, Box };

using DomainVariant =
    std::variant<HalfSpace, UnitBall, PuncturedSpace, TwicePunctured, SegmentComplement, Box>;

/// One of the six canonical proper subdomains of R^n (n >= 2).
class Domain {
 public:
  static Domain half_space(std::size_t dim);
  static Domain unit_ball(std::size_t dim);
  static Domain punctured(Point p);
  static Domain twice_punctured(Point u, Point v);
  static Domain segment_complement(Point u, Point v);
  static Domain box(Point lo, Point hi);

  std::size_t dim() const noexcept { return dim_; }
  DomainKind kind() const noexcept { return static_cast<DomainKind>(variant_.index()); }
  const DomainVariant& variant() const noexcept { return variant_; }

  bool is_convex() const noexcept;
  bool is_bounded() const noexcept;

 private:
  Domain(DomainVariant v, std::size_t dim) : variant_(std::move(v)), dim_(dim) {}

  DomainVariant variant_;
  std::size_t dim_;
};

struct BoundingBox {
  Point lo, hi;
};

std::string_view kind_name(DomainKind kind);

/// Strict membership in the open domain. Throws ArgumentError on dimension mismatch.
bool contains(const Domain& domain, const Point& x);

/// d_G(x) = inf over the boundary of |x - z|. Throws DomainError if x is not inside.
double dist_to_boundary(const Domain& domain, const Point& x);

/// Same quantity in extended precision; used to certify defects whose points
/// sit within ~1e-9 of the boundary.
long double dist_to_boundary_extended(const Domain& domain, const Point& x);

/// A boundary point q with |x - q| = d_G(x). Ties resolve to the lowest
/// internal index (Box faces lo_1, hi_1, lo_2, ...; puncture u before v);
/// the unit-ball center maps to e_1.
Point nearest_boundary_point(const Domain& domain, const Point& x);

/// inf over boundary z of |x - z| + |z - y|, the triangular-ratio denominator.
///
/// HalfSpace, punctured variants, SegmentComplement and Box are closed form
/// (reflection, or unfolding along a line followed by clamping, since the
/// objective is convex on each flat boundary piece). UnitBall is reduced to
/// the circle in span{x, y} that carries every stationary point and then
/// minimized by a 64-seed scan with golden-section refinement.
/// Throws UnsupportedDimensionError for n > 3 on UnitBall, Box and
/// SegmentComplement.
double path_infimum(const Domain& domain, const Point& x, const Point& y);

/// Brute-force route to the same infimum: nested golden-section over each
/// boundary parametrization (convex pieces) and a dense angular grid plus
/// compass polish on spheres. Slow; meant as an independent cross-check.
double path_infimum_numeric(const Domain& domain, const Point& x, const Point& y);

/// Default sampling box: [-1,1]^n for the ball, the box itself, upper part of
/// [-10,10]^n for the half-space, [-10,10]^n otherwise.
BoundingBox default_box(const Domain& domain);

inline constexpr double kInteriorMargin = 1e-6;

/// Rejection sample in `box` with d_G(x) >= kInteriorMargin. Deterministic for
/// a seed; throws SamplingError when the acceptance budget is exhausted.
Point sample_interior(const Domain& domain, std::uint64_t seed, const BoundingBox& box);
Point sample_interior(const Domain& domain, Rng& rng, const BoundingBox& box);

/// |p - boundary| <= tol for points in the closure of the domain.
bool on_boundary(const Domain& domain, const Point& p, double tol = 1e-12);

/// Moves p (inside or not) to a point with d_G >= margin, changing as little as
/// is convenient for the variant.
Point project_inside(const Domain& domain, const Point& p, double margin);

/// A fixed interior point with a well-defined nearest boundary point, used as
/// the anchor of deterministic probe families.
Point canonical_interior_point(const Domain& domain);

/// Pairs (u, v) of boundary points whose diametral ball lies in the domain:
/// antipodes of the ball, the two punctures, or opposite face centers across
/// the thinnest axis of a box. Empty for the other variants.
std::vector<std::pair<Point, Point>> diameter_anchors(const Domain& domain);

/// "halfspace:2", "ball:3", "punctured:2:0,0", "twice:2:-1,0:1,0",
/// "segment:2:-1,0:1,0", "box:2:0,0:1,1".
Domain parse_domain(std::string_view literal);
std::string to_literal(const Domain& domain);

}  // namespace hypmetric
