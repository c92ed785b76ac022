#include "hypmetric/json.hpp"

#include <cmath>

namespace hypmetric {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const Point& p) {
  Json a = Json::array();
  for (double v : p.coords()) a.push_back(number(v));
  return a;
}

Json to_json(const DefectRecord& r) {
  Json j;
  j["x"] = to_json(r.x);
  j["y"] = to_json(r.y);
  j["z"] = to_json(r.z);
  j["c"] = number(r.c);
  j["defect"] = number(r.defect);
  j["polynomial_form"] = number(r.polynomial_form);
  j["k"] = r.k ? number(*r.k) : Json(nullptr);
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["best"] = to_json(r.best);
  j["evaluations"] = r.evaluations;
  return j;
}

Json to_json(const CriticalCInterval& r) {
  Json j;
  j["lo"] = number(r.lo);
  j["hi"] = number(r.hi);
  j["epsilon"] = number(r.epsilon);
  j["budget"] = r.budget;
  j["steps"] = r.steps;
  j["witness"] = to_json(r.witness);
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["x"] = to_json(w.x);
  j["y"] = to_json(w.y);
  if (w.z) j["z"] = to_json(*w.z);
  j["quotient"] = number(w.quotient);
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["lemma_id"] = r.lemma_id;
  j["quotient"] = r.quotient;
  j["sample_count"] = r.sample_count;
  j["empirical_min"] = number(r.empirical_min);
  j["empirical_max"] = number(r.empirical_max);
  j["theoretical_lo"] = number(r.theoretical_lo);
  j["theoretical_hi"] = number(r.theoretical_hi);
  j["lo_sharp"] = r.lo_sharp;
  j["hi_sharp"] = r.hi_sharp;
  j["retracted"] = r.retracted;
  j["violation_count"] = r.violation_count;
  Json v = Json::array();
  for (const Witness& w : r.violations) v.push_back(to_json(w));
  j["violations"] = std::move(v);
  j["sweep"] = {{"min", number(r.sweep_min)}, {"max", number(r.sweep_max)}};
  j["probes"] = {{"count", r.probe_count}, {"min", number(r.probe_min)}, {"max", number(r.probe_max)}};
  j["argmin"] = r.argmin ? to_json(*r.argmin) : Json(nullptr);
  j["argmax"] = r.argmax ? to_json(*r.argmax) : Json(nullptr);
  j["attainment_gap"] = r.attainment_gap ? number(*r.attainment_gap) : Json(nullptr);
  return j;
}

Json to_json(const EuclideanBall& b) {
  Json j;
  j["center"] = to_json(b.center);
  j["radius"] = number(b.radius);
  return j;
}

Json to_json(const HBallRepresentation& b) {
  Json j;
  j["euclidean"] = to_json(b.ball);
  j["rho_radius"] = number(b.rho_radius);
  return j;
}

Json to_json(const InclusionRadii& r) {
  Json j;
  j["r0"] = number(r.r0);
  j["r1"] = number(r.r1);
  j["provenance"] = std::string(provenance_name(r.provenance));
  return j;
}

Json to_json(const RhoInclusionRadii& r) {
  Json j;
  j["rho_ball"] = to_json(r.rho_ball);
  j["paper"] = to_json(r.paper);
  j["derived"] = to_json(r.derived);
  j["brute"] = to_json(r.brute);
  j["argmin"] = to_json(r.argmin);
  j["argmax"] = to_json(r.argmax);
  return j;
}

Json to_json(const InclusionReport& r) {
  Json j;
  j["min_slack"] = number(r.min_slack);
  j["argmin"] = to_json(r.argmin);
  j["samples"] = r.samples;
  j["contained"] = r.contained;
  return j;
}

}  // namespace hypmetric
