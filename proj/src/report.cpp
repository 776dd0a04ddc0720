#include "slopestab/report.hpp"

#include <sstream>

#include "slopestab/error.hpp"

namespace slopestab {

namespace {

Check make_check(std::string id, const std::string& expected, const std::string& computed, bool pass,
                 Provenance provenance, std::string anchor) {
  return {std::move(id), expected, computed, pass, provenance, std::move(anchor)};
}

Check equal_check(std::string id, const Rational& expected, const Rational& computed, Provenance provenance,
                  std::string anchor) {
  return make_check(std::move(id), expected.str(), computed.str(), expected == computed, provenance,
                    std::move(anchor));
}

Check equal_check(std::string id, const BigInt& expected, const BigInt& computed, Provenance provenance,
                  std::string anchor) {
  return make_check(std::move(id), expected.get_str(), computed.get_str(), expected == computed, provenance,
                    std::move(anchor));
}

bool is_open_window(const IntervalSet& set, const Rational& right) {
  if (set.size() != 1) return false;
  const Interval& part = set.intervals().front();
  return part.lo.is_exact() && part.lo.point->value().is_zero() && !part.lo.closed && part.hi.is_exact() &&
         part.hi.point->value() == right && !part.hi.closed;
}

std::string open_window_text(const Rational& right) { return Interval::open(Rational(0), right).str(); }

Json quantity(const std::string& name, const Rational& value, const std::string& anchor) {
  return Json{{"name", name}, {"value", value.str()}, {"anchor", anchor}};
}

Json context_json(const std::vector<std::pair<std::string, std::string>>& context) {
  Json out = Json::object();
  for (const auto& [key, value] : context) out[key] = value;
  return out;
}

std::string csv_point(const std::optional<RealPoint>& p, bool upper) {
  if (!p) return "";
  return (upper ? p->upper() : p->lower()).str();
}

std::string endpoint_kind(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::NegInfinity: return "neg_infinity";
    case Endpoint::Kind::PosInfinity: return "pos_infinity";
    case Endpoint::Kind::Finite: return e.point->is_exact() ? "exact" : "enclosed";
  }
  return "exact";
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Reference: return "reference";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

bool VerificationSuiteResult::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

// ---------------------------------------------------------------- suites

VerificationSuiteResult verify_product(const ProductSurfaceParams& params, const Rational& tol) {
  params.validate();
  VerificationSuiteResult out;
  out.suite = "product";
  const Rational q(params.q);
  out.info = {{"q", q.str()}, {"sc_mode", params.mode_name()}};

  const SurfaceModel X = product_surface(params);
  const DivisorClass lq = q * X.named("f") + X.named("delta_prime");
  out.checks.push_back(equal_check("mu at s=q equals -2", Rational(-2), slope(X, lq), Provenance::Reference,
                                   "slope of l_q on C x C"));

  const StabilityWindow boundary = product_window_c(params, q, tol);
  const Rational three_quarters(3, 4);
  out.checks.push_back(make_check("c-window at s=q equals (0, 3/4)", open_window_text(three_quarters),
                                  boundary.intervals.str(), is_open_window(boundary.intervals, three_quarters),
                                  Provenance::Reference, "diagonal on (C x C, l_q), 0 < c < 3/4"));

  const Rational nudge(1, 1000000);
  const bool below = !ample_ls(params.q, q - nudge).ample();
  const bool at = !ample_ls(params.q, q).ample();
  const bool above = ample_ls(params.q, q + nudge).ample();
  out.checks.push_back(make_check("ample_ls flips at s=q", "not ample at q-1/10^6 and q, ample at q+1/10^6",
                                  std::string(below ? "not ample" : "ample") + ", " + (at ? "not ample" : "ample") +
                                      ", " + (above ? "ample" : "not ample"),
                                  below && at && above, Provenance::Reference, "l_s ample iff s > q"));

  if (auto k = params.k()) {
    const Rational threshold = q / Rational(*k - 1);
    const KouvidakisBounds sc = kouvidakis_bounds(params, tol);
    const bool flips = !ample_Lt(params, threshold).ample() && ample_Lt(params, threshold + nudge).ample();
    out.checks.push_back(make_check("ample_Lt threshold equals q/(k-1)", threshold.str(),
                                    sc.exact() ? sc.lo.value().str() : sc.lo.str(),
                                    sc.exact() && sc.lo.value() == threshold && flips, Provenance::Reference,
                                    "Kouvidakis constant of a branched cover"));
  }

  // Witnesses in s for fixed c, and absence of one past 3/4.
  const Rational extent(1);
  for (const Rational& c : {Rational(1, 4), Rational(1, 2), Rational(7, 10)}) {
    const StabilityWindow w = instability_window_s(params, c, extent, tol);
    std::string computed = "no witness";
    bool pass = false;
    if (!w.intervals.empty()) {
      const Rational s = w.intervals.intervals().front().sample();
      const SlopeReport r = destabilizes(X, X.named("D"), s * X.named("f") + X.named("delta_prime"), c,
                                         seshadri_diagonal(params, s, Evaluation::Strict));
      pass = r.destabilized && s > q;
      computed = "s = " + s.str() + (r.destabilized ? " destabilized" : " not destabilized");
    }
    out.checks.push_back(make_check("witness s > q destabilizes at c=" + c.str(), "destabilized", computed, pass,
                                    Provenance::Derived, "s-window search for l_s"));
  }
  const StabilityWindow none = instability_window_s(params, Rational(4, 5), extent, tol);
  out.checks.push_back(make_check("no destabilization at c=4/5", "{}", none.intervals.str(), none.intervals.empty(),
                                  Provenance::Derived, "s-window search for l_s"));
  return out;
}

VerificationSuiteResult verify_kodaira(const KodairaParams& params, const Rational& tol) {
  params.validate();
  VerificationSuiteResult out;
  out.suite = "kodaira";
  const Rational q(params.q);
  const Rational r(params.r);
  const Rational g(params.group_order);
  out.info = {{"q", q.str()}, {"r", r.str()}, {"G", g.str()}, {"d", params.d().get_str()}};

  const KodairaInvariants inv = invariants(params);
  if (inv.note) out.info.emplace_back("note", *inv.note);
  const bool worked_example = params.q == 3 && params.r == 2 && params.group_order == 2 && !params.d_override;
  if (worked_example) {
    const std::string anchor = "worked example q=3, r=2, |G|=2";
    out.checks.push_back(equal_check("d == 64", BigInt(64), inv.d, Provenance::Reference, anchor));
    out.checks.push_back(equal_check("p == 129", BigInt(129), inv.p, Provenance::Reference, anchor));
    out.checks.push_back(equal_check("fiber_genus == 6", BigInt(6), inv.fiber_genus, Provenance::Reference, anchor));
    out.checks.push_back(equal_check("tau == 256", BigInt(256), inv.signature, Provenance::Reference, anchor));
    out.checks.push_back(equal_check("chi == 2560", BigInt(2560), inv.euler, Provenance::Derived, anchor));
    out.checks.push_back(equal_check("K^2 == 5888", BigInt(5888), inv.K_squared, Provenance::Derived, anchor));
  }
  out.checks.push_back(equal_check("K^2 closed form equals lattice", inv.K_squared, invariants_from_lattice(params),
                                   Provenance::Derived, "K_X2 = pullback of K_BxC plus R"));
  const Rational tau_closed =
      Rational(2) * (r * r - Rational(1)) * (q - Rational(1)) * Rational(inv.d) * g / (Rational(3) * r);
  out.checks.push_back(equal_check("tau == 2(r^2-1)(q-1)d|G|/(3r)", tau_closed, Rational(inv.signature),
                                   Provenance::Derived, "signature (K^2 - 2 chi)/3"));
  out.checks.push_back(make_check("chi > 0 and K^2 > 0 and tau > 0", "positive",
                                  inv.euler.get_str() + ", " + inv.K_squared.get_str() + ", " +
                                      inv.signature.get_str(),
                                  inv.euler > 0 && inv.K_squared > 0 && inv.signature > 0, Provenance::Trivial,
                                  "Kodaira fibration invariants"));

  // c-window for D2 at s = q, eps = 0.
  const StabilityWindow w = x2_window_c(params, q, Rational(0), tol);
  const Rational published = Rational(3) * q / (Rational(4) * q + Rational(2) * (r - Rational(1)) * (g - Rational(1)));
  const Rational lattice_bound = x2_window_bound(params);
  out.checks.push_back(make_check("x2 c-window equals (0, 3q/(4q+2(r-1)(|G|-1)))", open_window_text(published),
                                  w.intervals.str(), is_open_window(w.intervals, published), Provenance::Reference,
                                  "published D2 window at s=q, eps=0"));
  out.checks.push_back(make_check("x2 c-window equals (0, 3q/(4rq+2(r-1)(|G|-1)))", open_window_text(lattice_bound),
                                  w.intervals.str(), is_open_window(w.intervals, lattice_bound), Provenance::Derived,
                                  "mu_c(D2) = -3/(2cr) against mu at s=q, eps=0"));
  out.checks.push_back(make_check("x2 window right end < 3/4", "< 3/4", lattice_bound.str(),
                                  lattice_bound < Rational(3, 4), Provenance::Reference, "D2 window below 3/4"));

  // Leading-order closed forms against the lattice.
  const Rational s = q + Rational(1);
  out.checks.push_back(equal_check("l_s slope closed form equals lattice at s=q+1",
                                   x2_slope_leading_order(params, X2Family::l_s, s),
                                   x2_slope_exact(params, X2Family::l_s, s, Rational(0)), Provenance::Derived,
                                   "slope of s f2 + delta2' at eps=0"));
  out.checks.push_back(equal_check("D2 quotient slope closed form equals lattice at s=q+1, c=1/2",
                                   x2_quotient_slope_leading_order(params, X2Family::l_s, s, Rational(1, 2)),
                                   x2_quotient_slope_exact(params, X2Family::l_s, s, Rational(0), Rational(1, 2)),
                                   Provenance::Derived, "quotient slope of D2 at eps=0"));

  // O(eps) behaviour: difference quotients at three scales stay within 10%.
  {
    const Rational base = x2_slope_exact(params, X2Family::l_s, s, Rational(0));
    std::vector<Rational> ratios;
    for (const Rational& eps : {Rational(1, 1000), Rational(1, 10000), Rational(1, 100000)}) {
      ratios.push_back((x2_slope_exact(params, X2Family::l_s, s, eps) - base).abs() / eps);
    }
    const Rational lo = min(min(ratios[0], ratios[1]), ratios[2]);
    const Rational hi = max(max(ratios[0], ratios[1]), ratios[2]);
    const bool pass = lo.sign() > 0 && (hi - lo) < Rational(1, 10) * lo;
    out.checks.push_back(make_check("slope is linear in eps to 10%", "relative spread < 1/10",
                                    ((hi - lo) / (lo.is_zero() ? Rational(1) : lo)).str(), pass, Provenance::Derived,
                                    "first-order expansion in eps"));
  }

  if (params.has_valid_k()) {
    const long k = *params.k;
    const ResidualInequality ri = residual_inequality(params.q, k, params.group_order);
    out.checks.push_back(make_check("residual inequality holds", "lhs < rhs", ri.lhs.str() + " < " + ri.rhs.str(),
                                    ri.holds, Provenance::Reference, "Z2 residual inequality at t=q/(k-1)"));
    out.checks.push_back(make_check("margin exceeds k|G|+q-1", "> " + ri.chain_bound.str(), ri.margin.str(),
                                    ri.margin == ri.margin_expanded && ri.margin > ri.chain_bound,
                                    Provenance::Reference, "Z2 residual inequality chain"));
    const Rational t = q / Rational(k - 1);
    const Rational mu = x2_slope_exact(params, X2Family::L_t, t, Rational(0));
    const Rational mu_c = x2_quotient_slope_exact(params, X2Family::L_t, t, Rational(0), Rational(1));
    out.checks.push_back(make_check("Z2 destabilizes at t=q/(k-1), c=1, eps=0", "mu_c < mu",
                                    mu_c.str() + " vs " + mu.str(), mu_c < mu, Provenance::Derived,
                                    "Z2 against t f2 - delta2'"));
    out.checks.push_back(equal_check("L_t slope closed form equals lattice at t=q/(k-1)",
                                     x2_slope_leading_order(params, X2Family::L_t, t), mu, Provenance::Derived,
                                     "slope of t f2 - delta2' at eps=0"));
    out.checks.push_back(equal_check("Z2 quotient slope closed form equals lattice at t=q/(k-1)",
                                     x2_quotient_slope_leading_order(params, X2Family::L_t, t, Rational(1)), mu_c,
                                     Provenance::Derived, "quotient slope of Z2 at eps=0"));
  }
  return out;
}

VerificationSuiteResult verify_jflow(long q, const std::optional<Rational>& s, const Rational& tol) {
  if (q < 2) throw Error(ErrorCode::ParamError, "genus q must be at least 2");
  VerificationSuiteResult out;
  out.suite = "jflow";
  const Rational qr(q);
  out.info = {{"q", qr.str()}};

  // Larger root of s^2 - 2qs + q, which lies in (q, 2q).
  const Polynomial poly = Polynomial::quadratic(Rational(1), Rational(-2) * qr, qr);
  const RealPoint root = RealPoint::enclosed(poly, qr, Rational(2) * qr).refined(tol);
  const bool flips = !weinkove_threshold(q, root.lower()).ample() && weinkove_threshold(q, root.upper()).ample();
  out.info.emplace_back("threshold", root.str());
  out.checks.push_back(make_check("verdict flips across q+sqrt(q^2-q)", "not ample below, ample above",
                                  root.str() + " width " + root.width().str(), flips && root.width() <= tol,
                                  Provenance::Reference, "J-flow threshold s > q + sqrt(q^2-q)"));
  if (!s) return out;

  const AmpleVerdict verdict = weinkove_threshold(q, *s);
  out.info.emplace_back("s", s->str());
  out.info.emplace_back("verdict", std::string(to_string(verdict.status)));

  ProductSurfaceParams params;
  params.q = q;
  const SurfaceModel X = product_surface(params);
  const DivisorClass L = *s * X.named("f") + X.named("delta_prime");
  const DivisorClass alpha = weinkove_alpha(X, L);
  const Rational scale = Rational(2) * Rational(2 * q - 2);
  const DivisorClass expected = scale * ((*s * *s + qr) * X.named("f") + (Rational(2) * *s) * X.named("delta_prime"));
  out.checks.push_back(make_check("alpha equals 2(2q-2)((s^2+q)f + 2s delta')", expected.str(), alpha.str(),
                                  alpha == expected, Provenance::Derived, "2(K.L)L - (L^2)K on C x C"));
  const AmpleVerdict cone = ample_product_class(params, X, alpha);
  out.checks.push_back(make_check("verdict agrees with cone test", std::string(to_string(verdict.status)),
                                  std::string(to_string(cone.status)), verdict.ample() == cone.ample(),
                                  Provenance::Derived, "ample cone of C x C"));
  return out;
}

// ---------------------------------------------------------------- JSON

Json to_json(const Check& check) {
  return Json{{"id", check.id},
              {"expected", check.expected},
              {"computed", check.computed},
              {"pass", check.pass},
              {"provenance", to_string(check.provenance)},
              {"anchor", check.anchor}};
}

Json to_json(const VerificationSuiteResult& result) {
  Json checks = Json::array();
  for (const auto& c : result.checks) checks.push_back(to_json(c));
  return Json{{"suite", result.suite}, {"info", context_json(result.info)}, {"checks", checks},
              {"pass", result.passed()}};
}

Json to_json(const RealPoint& point) {
  if (point.is_exact()) return Json{{"kind", "exact"}, {"value", point.value().str()}};
  return Json{{"kind", "enclosed"},
              {"lower", point.lower().str()},
              {"upper", point.upper().str()},
              {"polynomial", point.polynomial().str("x")}};
}

Json to_json(const Endpoint& endpoint) {
  if (!endpoint.is_finite()) return Json{{"kind", endpoint_kind(endpoint)}};
  Json out = to_json(*endpoint.point);
  out["closed"] = endpoint.closed;
  return out;
}

Json to_json(const Interval& interval) {
  return Json{{"lo", to_json(interval.lo)}, {"hi", to_json(interval.hi)}, {"text", interval.str()}};
}

Json to_json(const IntervalSet& set) {
  Json out = Json::array();
  for (const auto& part : set.intervals()) out.push_back(to_json(part));
  return out;
}

Json to_json(const StabilityWindow& window) {
  return Json{{"variable", to_string(window.variable)},
              {"intervals", to_json(window.intervals)},
              {"text", window.intervals.str()},
              {"boundary_limit", window.boundary_limit},
              {"context", context_json(window.context)}};
}

Json to_json(const SeshadriBound& bound) {
  Json out{{"lower", bound.lower.str()}};
  out["upper"] = bound.upper ? Json(bound.upper->str()) : Json(nullptr);
  out["exact"] = bound.exact;
  out["certified"] = bound.certified;
  out["boundary_limit"] = bound.boundary_limit;
  out["note"] = bound.note;
  return out;
}

Json to_json(const SlopeReport& report) {
  return Json{{"surface", report.surface},
              {"polarization", report.polarization},
              {"subscheme", report.subscheme},
              {"c", report.c.str()},
              {"mu_X", report.mu_X.str()},
              {"mu_c_Z", report.mu_c_Z.str()},
              {"seshadri", to_json(report.seshadri)},
              {"admissible", report.admissible},
              {"destabilized", report.destabilized},
              {"flags", report.flags}};
}

Json to_json(const KodairaInvariants& inv) {
  Json out{{"d", inv.d.get_str()},
           {"p", inv.p.get_str()},
           {"fiber_genus", inv.fiber_genus.get_str()},
           {"euler", inv.euler.get_str()},
           {"K_squared", inv.K_squared.get_str()},
           {"signature", inv.signature.get_str()}};
  if (inv.note) out["note"] = *inv.note;
  return out;
}

// ---------------------------------------------------------------- CSV

std::string window_csv(const StabilityWindow& window) {
  std::ostringstream os;
  os << "variable,index,lo_kind,lo_lower,lo_upper,lo_closed,hi_kind,hi_lower,hi_upper,hi_closed\n";
  std::size_t i = 0;
  for (const auto& part : window.intervals.intervals()) {
    os << to_string(window.variable) << ',' << i++ << ',' << endpoint_kind(part.lo) << ','
       << csv_point(part.lo.point, false) << ',' << csv_point(part.lo.point, true) << ','
       << (part.lo.closed ? "true" : "false") << ',' << endpoint_kind(part.hi) << ','
       << csv_point(part.hi.point, false) << ',' << csv_point(part.hi.point, true) << ','
       << (part.hi.closed ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string cone_csv(const ConeSection& cone) {
  std::ostringstream os;
  os << "row_type,family,threshold_lo,threshold_hi,exact,s_coeff,delta_coeff,is_ample,status\n";
  for (const auto& ray : cone.rays) {
    os << "ray," << ray.family << ',' << ray.threshold_lo.str() << ',' << ray.threshold_hi.str() << ','
       << (ray.exact ? "true" : "false") << ",,,,\n";
  }
  for (const auto& cell : cone.grid) {
    const char* is_ample = "unknown";
    if (cell.status == AmpleStatus::Ample || cell.status == AmpleStatus::AmpleCertified) is_ample = "1";
    if (cell.status == AmpleStatus::NotAmple) is_ample = "0";
    os << "grid,,,,," << cell.s_coeff.str() << ',' << cell.delta_coeff.str() << ',' << is_ample << ','
       << to_string(cell.status) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- reports

Json product_report(const ProductSurfaceParams& params, const Rational& s, const Rational& c, const Rational& tol) {
  const SurfaceModel X = product_surface(params);
  const DivisorClass L = s * X.named("f") + X.named("delta_prime");
  const DivisorClass& Z = X.named("D");
  const DivisorClass& K = X.canonical();
  const SeshadriBound eps = seshadri_diagonal(params, s, Evaluation::BoundaryLimit);
  const SlopeReport sr = destabilizes(X, Z, L, c, eps);
  const AmpleVerdict verdict = ample_ls(params.q, s);

  Json numbers = Json::array();
  const std::string pairing = "intersection pairing on C x C";
  numbers.push_back(quantity("L^2", X.pair(L, L), pairing));
  numbers.push_back(quantity("K.L", X.pair(K, L), pairing));
  numbers.push_back(quantity("L.Z", X.pair(L, Z), pairing));
  numbers.push_back(quantity("K.Z", X.pair(K, Z), pairing));
  numbers.push_back(quantity("Z^2", X.pair(Z, Z), pairing));

  Json slopes = Json::array();
  slopes.push_back(quantity("mu", sr.mu_X, "slope -K.L/L^2"));
  slopes.push_back(quantity("mu_c", sr.mu_c_Z, "quotient slope of the diagonal"));

  return Json{{"kind", "product"},
              {"parameters", {{"q", Rational(params.q).str()}, {"sc_mode", params.mode_name()}, {"s", s.str()},
                              {"c", c.str()}}},
              {"surface", X.name()},
              {"polarization", L.str()},
              {"subscheme", Z.str()},
              {"intersection_numbers", numbers},
              {"slopes", slopes},
              {"seshadri", to_json(eps)},
              {"ampleness", {{"status", to_string(verdict.status)}, {"certificate", verdict.certificate},
                             {"anchor", "l_s ample iff s > q"}}},
              {"verdict", to_json(sr)},
              {"c_window", to_json(product_window_c(params, s, tol))}};
}

Json kodaira_report(const KodairaParams& params, const Rational& s, const Rational& eps, const Rational& c,
                    const std::optional<Rational>& t, const Rational& tol) {
  const SurfaceModel X = kodaira_surface(params);
  const DivisorClass L = x2_polarization(X, X2Family::l_s, s, eps);
  const DivisorClass& Z = X.named("D2");
  const DivisorClass& K = X.canonical();
  const SeshadriBound bound = seshadri_lower_bound_D2(params, s, eps, Evaluation::BoundaryLimit);
  const SlopeReport sr = destabilizes(X, Z, L, c, bound);
  const AmpleVerdict verdict = ample_l2(params, s, eps);

  Json numbers = Json::array();
  const std::string pairing = "intersection pairing on X2";
  numbers.push_back(quantity("L^2", X.pair(L, L), pairing));
  numbers.push_back(quantity("K.L", X.pair(K, L), pairing));
  numbers.push_back(quantity("L.Z", X.pair(L, Z), pairing));
  numbers.push_back(quantity("K.Z", X.pair(K, Z), pairing));
  numbers.push_back(quantity("Z^2", X.pair(Z, Z), pairing));
  numbers.push_back(quantity("K^2", X.pair(K, K), "K_X2 = pullback of K_BxC plus R"));

  Json slopes = Json::array();
  slopes.push_back(quantity("mu", sr.mu_X, "slope -K.L/L^2"));
  slopes.push_back(quantity("mu_c", sr.mu_c_Z, "quotient slope of D2"));
  slopes.push_back(quantity("mu_leading_order", x2_slope_leading_order(params, X2Family::l_s, s),
                            "slope of s f2 + delta2' at eps=0"));

  Json parameters{{"q", Rational(params.q).str()}, {"r", Rational(params.r).str()},
                  {"G", Rational(params.group_order).str()}, {"s", s.str()}, {"eps", eps.str()}, {"c", c.str()}};
  if (params.k) parameters["k"] = Rational(*params.k).str();

  Json out{{"kind", "kodaira"},
              {"parameters", parameters},
              {"surface", X.name()},
              {"invariants", to_json(invariants(params))},
              {"polarization", L.str()},
              {"subscheme", Z.str()},
              {"intersection_numbers", numbers},
              {"slopes", slopes},
              {"seshadri", to_json(bound)},
              {"ampleness", {{"status", to_string(verdict.status)}, {"certificate", verdict.certificate},
                             {"anchor", "nef pullback plus eps K_X2"}}},
              {"verdict", to_json(sr)},
              {"c_window", to_json(x2_window_c(params, s, eps, tol))}};
  if (t) {
    if (!params.has_valid_k()) throw Error(ErrorCode::ParamError, "the Z2 test needs --k");
    out["parameters"]["t"] = t->str();
    const DivisorClass Lt = x2_polarization(X, X2Family::L_t, *t, eps);
    SeshadriBound z2_bound;
    z2_bound.lower = Rational(0);
    z2_bound.certified = false;
    z2_bound.note = "eps = 0: no certified bound";
    if (eps.sign() > 0) z2_bound = seshadri_lower_bound_Z2(params, *t, eps);
    Json z2 = to_json(destabilizes(X, X.named("Z2"), Lt, Rational(1), z2_bound));
    z2["ampleness"] = {{"status", to_string(ample_L2(params, *t, eps).status)},
                       {"anchor", "nef pullback plus eps K_X2"}};
    z2["mu_leading_order"] = quantity("mu", x2_slope_leading_order(params, X2Family::L_t, *t),
                                      "slope of t f2 - delta2' at eps=0");
    z2["mu_c_leading_order"] = quantity("mu_c", x2_quotient_slope_leading_order(params, X2Family::L_t, *t, Rational(1)),
                                        "quotient slope of Z2 at eps=0");
    out["z2_test"] = z2;
  }
  return out;
}

// ---------------------------------------------------------------- markdown

std::string to_markdown(const VerificationSuiteResult& result) {
  std::ostringstream os;
  os << "# Verification suite: " << result.suite << "\n\n";
  for (const auto& [key, value] : result.info) os << "- " << key << ": " << value << '\n';
  os << "\n| check | expected | computed | result | provenance |\n|---|---|---|---|---|\n";
  for (const auto& c : result.checks) {
    os << "| " << c.id << " | " << c.expected << " | " << c.computed << " | " << (c.pass ? "PASS" : "FAIL") << " | "
       << to_string(c.provenance) << " |\n";
  }
  os << "\nOverall: " << (result.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string report_markdown(const Json& report) {
  std::ostringstream os;
  os << "# Slope report: " << report.at("surface").get<std::string>() << "\n\n";
  for (const auto& [key, value] : report.at("parameters").items()) {
    os << "- " << key << ": " << value.get<std::string>() << '\n';
  }
  os << "- polarization: " << report.at("polarization").get<std::string>() << '\n';
  os << "- subscheme: " << report.at("subscheme").get<std::string>() << '\n';
  if (report.contains("invariants")) {
    os << "\n## Invariants\n\n";
    for (const auto& [key, value] : report.at("invariants").items()) {
      os << "- " << key << ": " << value.get<std::string>() << '\n';
    }
  }
  for (const char* section : {"intersection_numbers", "slopes"}) {
    os << "\n## " << section << "\n\n| quantity | value | anchor |\n|---|---|---|\n";
    for (const auto& q : report.at(section)) {
      os << "| " << q.at("name").get<std::string>() << " | " << q.at("value").get<std::string>() << " | "
         << q.at("anchor").get<std::string>() << " |\n";
    }
  }
  const Json& ses = report.at("seshadri");
  os << "\n## Seshadri bound\n\n- lower: " << ses.at("lower").get<std::string>() << '\n';
  if (!ses.at("upper").is_null()) os << "- upper: " << ses.at("upper").get<std::string>() << '\n';
  os << "- certified: " << (ses.at("certified").get<bool>() ? "yes" : "no") << '\n';
  os << "- note: " << ses.at("note").get<std::string>() << '\n';
  const Json& amp = report.at("ampleness");
  os << "\n## Ampleness\n\n- status: " << amp.at("status").get<std::string>() << '\n'
     << "- certificate: " << amp.at("certificate").get<std::string>() << '\n';
  const Json& v = report.at("verdict");
  os << "\n## Verdict\n\n- c: " << v.at("c").get<std::string>() << '\n'
     << "- admissible: " << (v.at("admissible").get<bool>() ? "yes" : "no") << '\n'
     << "- destabilized: " << (v.at("destabilized").get<bool>() ? "yes" : "no") << '\n';
  for (const auto& flag : v.at("flags")) os << "- flag: " << flag.get<std::string>() << '\n';
  os << "\n## c-window\n\n" << report.at("c_window").at("text").get<std::string>() << '\n';
  if (report.contains("z2_test")) {
    const Json& z = report.at("z2_test");
    os << "\n## Z2 test\n\n- polarization: " << z.at("polarization").get<std::string>() << '\n'
       << "- mu: " << z.at("mu_X").get<std::string>() << '\n'
       << "- mu_c: " << z.at("mu_c_Z").get<std::string>() << '\n'
       << "- ampleness: " << z.at("ampleness").at("status").get<std::string>() << '\n'
       << "- destabilized: " << (z.at("destabilized").get<bool>() ? "yes" : "no") << '\n';
  }
  return os.str();
}

}  // namespace slopestab
