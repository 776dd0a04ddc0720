#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slopestab/error.hpp"
#include "slopestab/stability.hpp"

using namespace slopestab;

namespace {

ProductSurfaceParams product(long q) {
  ProductSurfaceParams p;
  p.q = q;
  return p;
}

DivisorClass l_s(const SurfaceModel& X, const Rational& s) { return s * X.named("f") + X.named("delta_prime"); }

bool same_endpoint(const Endpoint& a, const Endpoint& b) {
  if (a.kind != b.kind || a.closed != b.closed) return false;
  return !a.is_finite() || compare(*a.point, *b.point) == 0;
}

bool same_set(const IntervalSet& a, const IntervalSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_endpoint(a.intervals()[i].lo, b.intervals()[i].lo)) return false;
    if (!same_endpoint(a.intervals()[i].hi, b.intervals()[i].hi)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("slope examples") {
  for (long q = 2; q <= 20; ++q) {
    const SurfaceModel X = product_surface(product(q));
    CHECK(slope(X, l_s(X, Rational(q))) == Rational(-2));
  }
  const SurfaceModel X = product_surface(product(2));
  CHECK(slope(X, l_s(X, Rational(3))) == Rational(-6, 7));
  CHECK(quotient_slope(X, X.named("D"), l_s(X, Rational(2)), Rational(1, 2)) == Rational(-3));
  CHECK(quotient_slope(X, X.named("D"), l_s(X, Rational(3)), Rational(1, 2)) == Rational(9, 7));
  CHECK_THROWS_AS(quotient_slope(X, X.named("D"), l_s(X, Rational(3)), Rational(0)), Error);
  // L.D = -1 at s = 3/2, so 3 L.D = c D^2 at c = 3/2.
  CHECK_THROWS_AS(quotient_slope(X, X.named("D"), l_s(X, Rational(3, 2)), Rational(3, 2)), Error);
  CHECK_THROWS_AS(slope(X, X.zero()), Error);
  CHECK(slope(X, X.named("f")) == Rational(-2));
}

TEST_CASE("closed forms on C x C") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> qs(2, 15);
  std::uniform_int_distribution<long> num(1, 400);
  for (int i = 0; i < 100; ++i) {
    const long q = qs(rng);
    const Rational qr(q);
    const Rational s = qr + Rational(num(rng), 37);
    const Rational c(num(rng), 401);
    const SurfaceModel X = product_surface(product(q));
    const DivisorClass L = l_s(X, s);
    CHECK(slope(X, L) == -s * (Rational(2) * qr - Rational(2)) / (s * s - qr));
    const Rational den = Rational(2) * c * (Rational(6) * s - Rational(6) * qr - Rational(2) * c + Rational(2) * c * qr);
    if (den.is_zero()) continue;
    const Rational expected = Rational(3) * (Rational(4) * s - Rational(4) * qr - c * (Rational(2) * qr - Rational(2))) / den;
    CHECK(quotient_slope(X, X.named("D"), L, c) == expected);
  }
}

TEST_CASE("destabilizes") {
  const ProductSurfaceParams p = product(2);
  const SurfaceModel X = product_surface(p);
  const Rational s(201, 100);
  const SlopeReport yes = destabilizes(X, X.named("D"), l_s(X, s), Rational(1, 2), seshadri_diagonal(p, s));
  CHECK(yes.admissible);
  CHECK(yes.destabilized);
  const SlopeReport no = destabilizes(X, X.named("D"), l_s(X, Rational(3)), Rational(1, 2), seshadri_diagonal(p, Rational(3)));
  CHECK_FALSE(no.destabilized);
  SeshadriBound bound;
  bound.lower = Rational(1, 4);
  const SlopeReport too_big = destabilizes(X, X.named("D"), l_s(X, s), Rational(1, 2), bound);
  CHECK_FALSE(too_big.destabilized);
  REQUIRE_FALSE(too_big.flags.empty());
  CHECK(too_big.flags.front() == "inadmissible c");
}

TEST_CASE("scale invariance") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(1, 300);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const long q = 2 + i % 9;
    const ProductSurfaceParams p = product(q);
    const SurfaceModel X = product_surface(p);
    const Rational s = Rational(q) + Rational(num(rng), 97);
    const Rational c(num(rng), 301);
    const DivisorClass L = l_s(X, s);
    const SeshadriBound eps = seshadri_diagonal(p, s);
    const SlopeReport base = destabilizes(X, X.named("D"), L, c, eps);
    for (long m : {2, 3, 5}) {
      const Rational mr(m);
      CHECK(slope(X, mr * L) == slope(X, L) / mr);
      CHECK(quotient_slope(X, X.named("D"), mr * L, mr * c) == quotient_slope(X, X.named("D"), L, c) / mr);
      const SlopeReport scaled = destabilizes(X, X.named("D"), mr * L, mr * c, eps.scaled(mr));
      CHECK(scaled.destabilized == base.destabilized);
      ++checked;
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("product c-window") {
  for (long q = 2; q <= 20; ++q) {
    const StabilityWindow w = product_window_c(product(q), Rational(q));
    CHECK(w.intervals.str() == "(0, 3/4)");
    CHECK(w.boundary_limit);
  }
}

TEST_CASE("c-window agrees with a direct sign computation") {
  // Second route: negativity of N(c) * den(c) as one cubic.
  const Rational tol(1, 1000000000);
  for (long q : {2, 5, 9}) {
    ProductSurfaceParams p;
    p.q = q;
    p.sc_mode = q == 9 ? KouvidakisMode{BranchedCover{3}} : KouvidakisMode{GeneralModuli{}};
    const SurfaceModel X = product_surface(p);
    for (const Rational& s : {Rational(q) + Rational(1, 50), Rational(q) + Rational(1, 3), Rational(q + 2)}) {
      const DivisorClass L = l_s(X, s);
      const SeshadriBound eps = seshadri_diagonal(p, s);
      const StabilityWindow w = instability_window_c(X, X.named("D"), L, eps, tol);
      const Rational a = X.pair(L, X.named("D"));
      const Rational b = X.pair(X.canonical(), X.named("D"));
      const Rational cz = X.pair(X.named("D"), X.named("D"));
      const Rational m = slope(X, L);
      const Polynomial n = Polynomial::quadratic(Rational(2) * m * cz, -(Rational(3) * (b + cz) + Rational(6) * m * a),
                                                 Rational(6) * a);
      const Polynomial den = Polynomial::quadratic(Rational(-2) * cz, Rational(6) * a, Rational(0));
      const IntervalSet direct =
          negativity_set(n * den, tol).intersect(Interval::half_open_right(Rational(0), eps.lower));
      CHECK(same_set(w.intervals, direct));
      // Interior samples destabilize; points just outside exact endpoints do not.
      for (const auto& part : w.intervals.intervals()) {
        CHECK(destabilizes(X, X.named("D"), L, part.sample(), eps).destabilized);
        if (part.hi.is_exact() && !part.hi.closed) {
          const Rational outside = part.hi.point->value() + Rational(1, 1000);
          if (outside <= eps.lower) CHECK_FALSE(destabilizes(X, X.named("D"), L, outside, eps).destabilized);
        }
      }
    }
  }
}

TEST_CASE("s-window") {
  const ProductSurfaceParams p = product(2);
  const StabilityWindow w = instability_window_s(p, Rational(1, 2), Rational(10));
  REQUIRE_FALSE(w.intervals.empty());
  const Interval& first = w.intervals.intervals().front();
  CHECK(first.lo.is_exact());
  CHECK(first.lo.point->value() == Rational(2));
  CHECK_FALSE(first.lo.closed);
  const SurfaceModel X = product_surface(p);
  for (const auto& part : w.intervals.intervals()) {
    const Rational s = part.sample();
    CHECK(destabilizes(X, X.named("D"), l_s(X, s), Rational(1, 2), seshadri_diagonal(p, s)).destabilized);
  }
  if (first.hi.is_finite()) {
    const Rational beyond = first.hi.point->upper() + Rational(1, 1000);
    CHECK_FALSE(destabilizes(X, X.named("D"), l_s(X, beyond), Rational(1, 2), seshadri_diagonal(p, beyond)).destabilized);
  }
  CHECK(instability_window_s(p, Rational(1, 2), Rational(0)).intervals.empty());
  CHECK(instability_window_s(p, Rational(4, 5), Rational(10)).intervals.empty());
  for (const Rational& c : {Rational(1, 4), Rational(7, 10)}) {
    CHECK_FALSE(instability_window_s(p, c, Rational(1)).intervals.empty());
  }
}

TEST_CASE("X2 slopes") {
  KodairaParams k;  // q=3, r=2, |G|=2
  CHECK(x2_slope_exact(k, X2Family::l_s, Rational(3), Rational(0)) == Rational(-13, 6));
  CHECK(x2_quotient_slope_exact(k, X2Family::l_s, Rational(3), Rational(0), Rational(1, 2)) == Rational(-3, 2));
  CHECK_THROWS_AS(x2_quotient_slope_exact(k, X2Family::l_s, Rational(3), Rational(0), Rational(0)), Error);
  for (long q = 2; q <= 6; ++q) {
    for (long r : {2, 3}) {
      for (long g : {r, 2 * r}) {
        KodairaParams kp;
        kp.q = q;
        kp.r = r;
        kp.group_order = g;
        const Rational qr(q);
        const Rational rr(r);
        const Rational gr(g);
        const Rational expected = Rational(-2) - (rr - Rational(1)) * (gr - Rational(1)) / (rr * qr);
        CHECK(x2_slope_exact(kp, X2Family::l_s, qr, Rational(0)) == expected);
        const Rational c(1, 3);
        CHECK(x2_quotient_slope_exact(kp, X2Family::l_s, qr, Rational(0), c) ==
              Rational(-3) / (Rational(2) * c) + Rational(3) * (rr - Rational(1)) / (Rational(2) * c * rr));
        const Rational s = qr + Rational(3, 2);
        CHECK(x2_slope_exact(kp, X2Family::l_s, s, Rational(0)) == x2_slope_leading_order(kp, X2Family::l_s, s));
        CHECK(x2_quotient_slope_exact(kp, X2Family::l_s, s, Rational(0), c) ==
              x2_quotient_slope_leading_order(kp, X2Family::l_s, s, c));
      }
    }
  }
}

TEST_CASE("X2 L family") {
  for (long q = 5; q <= 30; ++q) {
    for (long kk = 3; (kk - 1) * (kk - 1) < q; ++kk) {
      KodairaParams kp;
      kp.q = q;
      kp.k = kk;
      const Rational t = Rational(q) / Rational(kk - 1) + Rational(1, 5);
      CHECK(x2_slope_exact(kp, X2Family::L_t, t, Rational(0)) == x2_slope_leading_order(kp, X2Family::L_t, t));
      CHECK(x2_quotient_slope_exact(kp, X2Family::L_t, t, Rational(0), Rational(1)) ==
            x2_quotient_slope_leading_order(kp, X2Family::L_t, t, Rational(1)));
    }
  }
  KodairaParams no_k;
  CHECK_THROWS_AS(x2_quotient_slope_exact(no_k, X2Family::L_t, Rational(5), Rational(0), Rational(1)), Error);
  KodairaParams nine;
  nine.q = 9;
  nine.k = 3;
  CHECK_THROWS_AS(x2_quotient_slope_exact(nine, X2Family::L_t, Rational(5), Rational(0), Rational(1, 2)), Error);
}

TEST_CASE("X2 slope is linear in eps") {
  KodairaParams k;
  for (const Rational& s : {Rational(3), Rational(4), Rational(7, 2)}) {
    const Rational base = x2_slope_exact(k, X2Family::l_s, s, Rational(0));
    std::vector<Rational> ratios;
    for (const Rational& eps : {Rational(1, 1000), Rational(1, 10000), Rational(1, 100000)}) {
      ratios.push_back((x2_slope_exact(k, X2Family::l_s, s, eps) - base).abs() / eps);
    }
    CHECK((ratios[0] - ratios[2]).abs() < Rational(1, 10) * ratios[2]);
    CHECK((ratios[1] - ratios[2]).abs() < Rational(1, 100) * ratios[2]);
  }
}

TEST_CASE("X2 c-window at the boundary") {
  KodairaParams k;
  const StabilityWindow w = x2_window_c(k, Rational(3), Rational(0));
  CHECK(w.intervals.str() == "(0, 9/26)");
  CHECK(x2_window_bound(k) == Rational(9, 26));
  CHECK(w.boundary_limit);
  for (long q = 2; q <= 6; ++q) {
    for (long r : {2, 3}) {
      for (long g : {r, 2 * r}) {
        KodairaParams kp;
        kp.q = q;
        kp.r = r;
        kp.group_order = g;
        const Rational bound = x2_window_bound(kp);
        CHECK(x2_window_c(kp, Rational(q), Rational(0)).intervals.str() == Interval::open(Rational(0), bound).str());
        CHECK(bound < Rational(3, 4));
      }
    }
  }
}

TEST_CASE("residual inequality") {
  const ResidualInequality a = residual_inequality(9, 3, 2);
  CHECK(a.holds);
  CHECK(a.lhs == Rational(152, 9));
  CHECK(a.rhs == Rational(42));
  CHECK(a.margin == Rational(226, 9));
  CHECK(residual_inequality(5, 3, 2).holds);
  CHECK_THROWS_AS(residual_inequality(4, 3, 2), Error);
  CHECK_THROWS_AS(residual_inequality(9, 2, 2), Error);
  for (long q = 5; q <= 30; ++q) {
    for (long kk = 3; (kk - 1) * (kk - 1) < q; ++kk) {
      for (long g : {2, 4, 6}) {
        const ResidualInequality ri = residual_inequality(q, kk, g);
        CHECK(ri.holds);
        CHECK(ri.margin == ri.margin_expanded);
        CHECK(ri.margin > ri.chain_bound);
      }
    }
  }
}

TEST_CASE("weinkove") {
  CHECK(weinkove_threshold(2, Rational(4)).status == AmpleStatus::Ample);
  CHECK(weinkove_threshold(2, Rational(3)).status == AmpleStatus::NotAmple);
  CHECK_THROWS_AS(weinkove_threshold(2, Rational(2)), Error);
  const SurfaceModel X = product_surface(product(2));
  const DivisorClass alpha = weinkove_alpha(X, l_s(X, Rational(3)));
  CHECK(alpha == Rational(4) * (Rational(11) * X.named("f") + Rational(6) * X.named("delta_prime")));
  // K.L = 0 and L^2 = 1 leaves -K.
  using Gram = std::vector<std::vector<Rational>>;
  auto form = std::make_shared<const IntersectionForm>(
      "test", std::vector<std::string>{"a", "b"}, Gram{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}});
  const DivisorClass a = DivisorClass::basis(form, "a");
  const DivisorClass b = DivisorClass::basis(form, "b");
  const SurfaceModel T(form, b, {{"a", a}}, ModelParams{});
  CHECK(weinkove_alpha(T, a) == -b);
  for (long q = 2; q <= 20; ++q) {
    const Rational qr(q);
    const Polynomial poly = Polynomial::quadratic(Rational(1), Rational(-2) * qr, qr);
    const RealPoint root = RealPoint::enclosed(poly, qr, Rational(2) * qr).refined(Rational(1, 1000000000));
    CHECK(root.width() <= Rational(1, 1000000000));
    CHECK_FALSE(weinkove_threshold(q, root.lower()).ample());
    CHECK(weinkove_threshold(q, root.upper()).ample());
    ProductSurfaceParams p = product(q);
    const SurfaceModel Xq = product_surface(p);
    for (const Rational& s : {root.lower(), root.upper(), qr + Rational(1, 2), Rational(3) * qr}) {
      CHECK(ample_product_class(p, Xq, weinkove_alpha(Xq, l_s(Xq, s))).ample() == weinkove_threshold(q, s).ample());
    }
  }
}
