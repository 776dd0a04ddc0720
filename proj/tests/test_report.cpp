#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "slopestab/error.hpp"
#include "slopestab/report.hpp"

using namespace slopestab;

namespace {

const Check* find_check(const VerificationSuiteResult& r, const std::string& id) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.id == id; });
  return it == r.checks.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("product suite") {
  ProductSurfaceParams p;
  p.q = 2;
  const VerificationSuiteResult r = verify_product(p);
  CHECK(r.passed());
  const Check* mu = find_check(r, "mu at s=q equals -2");
  REQUIRE(mu != nullptr);
  CHECK(mu->pass);
  CHECK(mu->provenance == Provenance::Reference);

  ProductSurfaceParams b;
  b.q = 9;
  b.sc_mode = BranchedCover{3};
  const VerificationSuiteResult rb = verify_product(b);
  CHECK(rb.passed());
  CHECK(find_check(rb, "ample_Lt threshold equals q/(k-1)") != nullptr);
}

TEST_CASE("kodaira suite") {
  const VerificationSuiteResult r = verify_kodaira(KodairaParams{});
  const Check* tau = find_check(r, "tau == 256");
  REQUIRE(tau != nullptr);
  CHECK(tau->pass);
  const Check* derived = find_check(r, "x2 c-window equals (0, 3q/(4rq+2(r-1)(|G|-1)))");
  REQUIRE(derived != nullptr);
  CHECK(derived->pass);
  // The published right endpoint 3q/(4q+...) disagrees with the lattice computation.
  const Check* published = find_check(r, "x2 c-window equals (0, 3q/(4q+2(r-1)(|G|-1)))");
  REQUIRE(published != nullptr);
  CHECK_FALSE(published->pass);
  CHECK(published->expected == "(0, 9/14)");
  CHECK(published->computed == "(0, 9/26)");
}

TEST_CASE("jflow suite") {
  const VerificationSuiteResult r = verify_jflow(2, Rational(3));
  CHECK(r.passed());
  const auto verdict = std::find_if(r.info.begin(), r.info.end(), [](const auto& kv) { return kv.first == "verdict"; });
  REQUIRE(verdict != r.info.end());
  CHECK(verdict->second == "NotAmple");
  CHECK(verify_jflow(5, std::nullopt).passed());
  CHECK_THROWS_AS(verify_jflow(2, Rational(2)), Error);
}

TEST_CASE("json rendering") {
  ProductSurfaceParams p;
  p.q = 5;
  const Json w = to_json(product_window_c(p, Rational(5)));
  CHECK(w["variable"] == "c");
  CHECK(w["text"] == "(0, 3/4)");
  CHECK(w["intervals"][0]["hi"]["value"] == "3/4");
  CHECK(w["intervals"][0]["hi"]["closed"] == false);
  CHECK(w["boundary_limit"] == true);

  ProductSurfaceParams two;
  two.q = 2;
  const Json report = product_report(two, Rational(201, 100), Rational(1, 2));
  CHECK(report["verdict"]["destabilized"] == true);
  for (const auto& q : report["intersection_numbers"]) {
    CHECK(q["value"].is_string());
    CHECK_FALSE(q["anchor"].get<std::string>().empty());
  }
  CHECK(report.dump() == product_report(two, Rational(201, 100), Rational(1, 2)).dump());

  const Json k = kodaira_report(KodairaParams{}, Rational(3), Rational(0), Rational(1, 4));
  CHECK(k["invariants"]["signature"] == "256");
  CHECK(k["c_window"]["text"] == "(0, 9/26)");
  CHECK(report_markdown(k).find("## Invariants") != std::string::npos);
}

TEST_CASE("csv rendering") {
  ProductSurfaceParams p;
  p.q = 9;
  p.sc_mode = BranchedCover{3};
  const std::string cone = cone_csv(cone_section(p, Rational(18), 2));
  CHECK(cone ==
        "row_type,family,threshold_lo,threshold_hi,exact,s_coeff,delta_coeff,is_ample,status\n"
        "ray,l_s,9,9,true,,,,\n"
        "ray,L_t,9/2,9/2,true,,,,\n"
        "grid,,,,,0,-1,0,NotAmple\n"
        "grid,,,,,0,1,0,NotAmple\n"
        "grid,,,,,18,-1,1,Ample\n"
        "grid,,,,,18,1,1,Ample\n");
  const std::string w = window_csv(product_window_c(p, Rational(9)));
  CHECK(w ==
        "variable,index,lo_kind,lo_lower,lo_upper,lo_closed,hi_kind,hi_lower,hi_upper,hi_closed\n"
        "c,0,exact,0,0,false,exact,3/4,3/4,false\n");
}

TEST_CASE("markdown rendering") {
  ProductSurfaceParams p;
  p.q = 2;
  const std::string md = to_markdown(verify_product(p));
  CHECK(md.find("| mu at s=q equals -2 | -2 | -2 | PASS | reference |") != std::string::npos);
  CHECK(md.find("Overall: PASS") != std::string::npos);
}
