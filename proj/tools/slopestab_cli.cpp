// slopestab: verification suites, window scans, cone sections and slope reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slopestab/error.hpp"
#include "slopestab/report.hpp"

using namespace slopestab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::optional<long> q;
  std::optional<long> k;
  std::optional<long> r;
  std::optional<long> group_order;
  std::string s;
  std::string t;
  std::string c;
  std::string eps;
  bool general_moduli = false;
  std::vector<std::string> sc_bounds;
  std::string format;
  std::string out;
  std::string tol = "1/1000000000";
  std::string extent;
  int samples = 11;
  std::string suite = "all";
  std::string target;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError(std::string("invalid rational for ") + flag + ": '" + text + "'");
  }
}

/// "boundary" or empty means s = q.
Rational parse_s(const std::string& text, long q) {
  if (text.empty() || text == "boundary") return Rational(q);
  return parse_rational(text, "--s");
}

ProductSurfaceParams product_params(const Options& o, long default_q) {
  ProductSurfaceParams p;
  p.q = o.q.value_or(default_q);
  const int modes = (o.k ? 1 : 0) + (o.general_moduli ? 1 : 0) + (o.sc_bounds.empty() ? 0 : 1);
  if (modes > 1) throw UsageError("--k, --general-moduli and --sc-bounds are mutually exclusive");
  if (o.k) {
    p.sc_mode = BranchedCover{*o.k};
  } else if (!o.sc_bounds.empty()) {
    p.sc_mode = UserBounds{parse_rational(o.sc_bounds[0], "--sc-bounds"), parse_rational(o.sc_bounds[1], "--sc-bounds")};
  } else {
    p.sc_mode = GeneralModuli{};
  }
  return p;
}

KodairaParams kodaira_params(const Options& o) {
  KodairaParams p;
  p.q = o.q.value_or(3);
  p.r = o.r.value_or(2);
  p.group_order = o.group_order.value_or(2);
  p.k = o.k;
  return p;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::ios_base::failure("write to " + path + " failed");
}

int run_verify(const Options& o) {
  std::vector<VerificationSuiteResult> results;
  const Rational tol = parse_rational(o.tol, "--tol");
  const bool all = o.suite == "all";
  if (all || o.suite == "product") results.push_back(verify_product(product_params(o, 2), tol));
  if (all || o.suite == "kodaira") results.push_back(verify_kodaira(kodaira_params(o), tol));
  if (all || o.suite == "jflow") {
    const long q = o.q.value_or(2);
    std::optional<Rational> s;
    if (!o.s.empty()) s = parse_rational(o.s, "--s");
    results.push_back(verify_jflow(q, s, tol));
  }

  bool pass = true;
  for (const auto& r : results) pass = pass && r.passed();
  std::string text;
  if (o.format == "markdown") {
    for (const auto& r : results) text += to_markdown(r) + "\n";
  } else {
    Json doc = Json::array();
    for (const auto& r : results) doc.push_back(to_json(r));
    text = (results.size() == 1 ? doc.front() : Json{{"suites", doc}, {"pass", pass}}).dump(2) + "\n";
  }
  emit(text, o.out);
  return pass ? kExitPass : kExitFail;
}

int run_window(const Options& o) {
  const Rational tol = parse_rational(o.tol, "--tol");
  StabilityWindow w;
  if (o.target == "product_c") {
    const ProductSurfaceParams p = product_params(o, 2);
    w = product_window_c(p, parse_s(o.s, p.q), tol);
  } else if (o.target == "product_s") {
    const ProductSurfaceParams p = product_params(o, 2);
    const Rational c = parse_rational(o.c.empty() ? "1/2" : o.c, "--c");
    w = instability_window_s(p, c, parse_rational(o.extent.empty() ? "1" : o.extent, "--extent"), tol);
  } else {
    const KodairaParams p = kodaira_params(o);
    const Rational eps = parse_rational(o.eps.empty() ? "0" : o.eps, "--eps");
    w = x2_window_c(p, parse_s(o.s, p.q), eps, tol);
  }
  emit(o.format == "csv" ? window_csv(w) : to_json(w).dump(2) + "\n", o.out);
  return kExitPass;
}

int run_cone(const Options& o) {
  const ProductSurfaceParams p = product_params(o, 2);
  const Rational extent = o.extent.empty() ? Rational(2 * p.q) : parse_rational(o.extent, "--extent");
  emit(cone_csv(cone_section(p, extent, o.samples)), o.out);
  return kExitPass;
}

int run_report(const Options& o) {
  const Rational tol = parse_rational(o.tol, "--tol");
  Json doc;
  if (o.target == "kodaira") {
    const KodairaParams p = kodaira_params(o);
    const Rational eps = parse_rational(o.eps.empty() ? "0" : o.eps, "--eps");
    const Rational c = parse_rational(o.c.empty() ? "1/4" : o.c, "--c");
    std::optional<Rational> t;
    if (!o.t.empty()) t = parse_rational(o.t, "--t");
    doc = kodaira_report(p, parse_s(o.s, p.q), eps, c, t, tol);
  } else {
    const ProductSurfaceParams p = product_params(o, 2);
    const Rational s = o.s.empty() ? Rational(p.q + 1) : parse_s(o.s, p.q);
    const Rational c = parse_rational(o.c.empty() ? "1/2" : o.c, "--c");
    doc = product_report(p, s, c, tol);
  }
  emit(o.format == "markdown" ? report_markdown(doc) : doc.dump(2) + "\n", o.out);
  return kExitPass;
}

void add_common(CLI::App* cmd, Options& o, bool kodaira) {
  cmd->add_option("--q", o.q, "genus of C")->check(CLI::PositiveNumber);
  cmd->add_option("--k", o.k, "degree of C -> P^1 (sets s_C = q/(k-1))");
  if (kodaira) {
    cmd->add_option("--r", o.r, "degree of the cyclic cover");
    cmd->add_option("--G", o.group_order, "order of G");
  }
  cmd->add_flag("--general-moduli", o.general_moduli, "s_C bounds for general C");
  cmd->add_option("--sc-bounds", o.sc_bounds, "user bounds lo hi on s_C")->expected(2);
  cmd->add_option("--tol", o.tol, "enclosure width for irrational endpoints");
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope stability of products and Kodaira fibrations"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", o.suite, "product, kodaira, jflow or all")
      ->check(CLI::IsMember({"product", "kodaira", "jflow", "all"}));
  add_common(verify, o, true);
  verify->add_option("--s", o.s, "s for the jflow suite");
  verify->add_option("--format", o.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));

  auto* window = app.add_subcommand("window", "destabilizing parameter window");
  window->add_option("target", o.target, "product_c, product_s or x2_c")
      ->required()
      ->check(CLI::IsMember({"product_c", "product_s", "x2_c"}));
  add_common(window, o, true);
  window->add_option("--s", o.s, "s, a rational or 'boundary'");
  window->add_option("--c", o.c, "c for product_s");
  window->add_option("--eps", o.eps, "eps for x2_c");
  window->add_option("--extent", o.extent, "scan (q, q + extent] for product_s (default 1)");
  window->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* cone = app.add_subcommand("cone", "ample cone section in the (f, delta') plane as CSV");
  add_common(cone, o, false);
  cone->add_option("--extent", o.extent, "f-coefficient range [0, extent] (default 2q)");
  cone->add_option("--samples", o.samples, "grid points per axis")->check(CLI::Range(2, 10000));
  cone->add_option("--format", o.format, "csv")->check(CLI::IsMember({"csv"}));

  auto* report = app.add_subcommand("report", "slope report");
  report->add_option("target", o.target, "product or kodaira")->check(CLI::IsMember({"product", "kodaira"}));
  add_common(report, o, true);
  report->add_option("--s", o.s, "s, a rational or 'boundary'");
  report->add_option("--t", o.t, "t for the Z2 test on t f2 - delta2' (kodaira, needs --k)");
  report->add_option("--c", o.c, "c");
  report->add_option("--eps", o.eps, "eps for kodaira");
  report->add_option("--format", o.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(o);
    if (*window) return run_window(o);
    if (*cone) return run_cone(o);
    return run_report(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitFail;
  }
}
