#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypmetric/balls.hpp"
#include "hypmetric/domains.hpp"

namespace hypmetric::cli {

/// Fixed-viewport SVG of a 2D h-sphere sample: domain boundary, sample points,
/// the exact Euclidean form where one is known, and the inner and outer
/// Euclidean circles about the center.
std::string render_sphere_svg(const Domain& domain, const Point& center, const std::vector<SphereSample>& samples,
                              const std::optional<EuclideanBall>& exact,
                              const std::vector<EuclideanBall>& guides);

}  // namespace hypmetric::cli
