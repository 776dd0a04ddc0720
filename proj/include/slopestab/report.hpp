#pragma once

/**
 * @file report.hpp
 * @brief Verification suites and serialization of windows, cones and slope reports.
 *
 * Rationals are always emitted as strings in lowest terms ("n" or "n/d").
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "slopestab/kodaira.hpp"
#include "slopestab/positivity.hpp"
#include "slopestab/stability.hpp"

namespace slopestab {

using Json = nlohmann::ordered_json;

/// Where an expected value comes from: a published value, a triviality, or an independent derivation.
enum class Provenance { Reference, Trivial, Derived };

std::string_view to_string(Provenance p);

struct Check {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
  Provenance provenance = Provenance::Derived;
  std::string anchor;
};

struct VerificationSuiteResult {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> info;

  bool passed() const;
};

VerificationSuiteResult verify_product(const ProductSurfaceParams& params, const Rational& tol = default_tolerance());
VerificationSuiteResult verify_kodaira(const KodairaParams& params, const Rational& tol = default_tolerance());
/// Without `s` only the threshold checks run. Throws NotAmplePolarization for s <= q.
VerificationSuiteResult verify_jflow(long q, const std::optional<Rational>& s,
                                     const Rational& tol = default_tolerance());

Json to_json(const Check& check);
Json to_json(const VerificationSuiteResult& result);
Json to_json(const RealPoint& point);
Json to_json(const Endpoint& endpoint);
Json to_json(const Interval& interval);
Json to_json(const IntervalSet& set);
Json to_json(const StabilityWindow& window);
Json to_json(const SeshadriBound& bound);
Json to_json(const SlopeReport& report);
Json to_json(const KodairaInvariants& inv);

std::string window_csv(const StabilityWindow& window);
/// One schema for both row types: "ray" rows fill the threshold columns, "grid" rows the coefficient columns.
std::string cone_csv(const ConeSection& cone);

/// Full dump for (C x C, s f + delta') against the diagonal at c.
Json product_report(const ProductSurfaceParams& params, const Rational& s, const Rational& c,
                    const Rational& tol = default_tolerance());
/// Invariants plus the D2 test on (X2, s f2 + delta2' + eps K) at c, and the Z2 test
/// on t f2 - delta2' + eps K at c = 1 when t is given.
Json kodaira_report(const KodairaParams& params, const Rational& s, const Rational& eps, const Rational& c,
                    const std::optional<Rational>& t = std::nullopt, const Rational& tol = default_tolerance());

std::string to_markdown(const VerificationSuiteResult& result);
/// Renders a report produced by product_report or kodaira_report.
std::string report_markdown(const Json& report);

}  // namespace slopestab
