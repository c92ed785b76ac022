#pragma once

#include <nlohmann/json.hpp>

#include "hypmetric/balls.hpp"
#include "hypmetric/domains.hpp"
#include "hypmetric/point.hpp"
#include "hypmetric/verify.hpp"

namespace hypmetric {

/// Insertion-ordered JSON so every report has a fixed field order.
using Json = nlohmann::ordered_json;

/// Finite doubles as numbers, non-finite ones as null.
Json number(double v);

Json to_json(const Point& p);
Json to_json(const DefectRecord& r);
Json to_json(const SearchResult& r);
Json to_json(const CriticalCInterval& r);
Json to_json(const Witness& w);
Json to_json(const BoundReport& r);
Json to_json(const EuclideanBall& b);
Json to_json(const HBallRepresentation& b);
Json to_json(const InclusionRadii& r);
Json to_json(const RhoInclusionRadii& r);
Json to_json(const InclusionReport& r);

}  // namespace hypmetric
