#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypmetric/json.hpp"
#include "hypmetric/verify.hpp"

namespace hypmetric {

/// One machine-checkable statement about the library's numbers.
struct Claim {
  std::string id;
  bool pass = false;
  Json expected;
  Json observed;
  /// "exact", "numeric" or "evidence" (search-based support for an open question).
  std::string grade = "numeric";
  std::string note;
};

Json to_json(const Claim& c);

struct ReportOptions {
  std::uint64_t seed = 0;
  std::int64_t bound_samples = 100000;
  std::int64_t identity_samples = 10000;
  std::size_t sphere_samples = 1000;
  CriticalCConfig critical{};
};

Json to_json(const ReportOptions& o);

/// A domain whose critical constant is checked by bisection.
struct CriticalCase {
  std::string literal;
  double lo = 0.0, hi = 0.0;
  std::string grade;
};

const std::vector<CriticalCase>& critical_cases();

/// Claim for one bisection run against its expected enclosure.
Claim critical_claim(const CriticalCase& cs, const CriticalCInterval& interval, std::int64_t max_budget);

inline constexpr int kCriterionCount = 10;

/// Runs acceptance criterion `n` (1..10), appending its claims and storing the
/// supporting data under results[key].
std::vector<Claim> check_criterion(int n, const ReportOptions& opts, Json& results);

/// Checks that do not belong to a numbered criterion (invariance, inclusion
/// sharpness, monotone profiles).
std::vector<Claim> check_supplementary(const ReportOptions& opts, Json& results);

struct Report {
  Json config;
  Json results;
  std::vector<Claim> claims;
  bool pass() const;
};

Report run_report(const ReportOptions& opts);

/// {command, config, results, claims}; results carries the overall pass flag.
Json to_json(const Report& r);

/// Criterion number encoded in a claim id ("AC4.ball" -> 4), 0 otherwise.
int criterion_of(const Claim& c);

}  // namespace hypmetric
