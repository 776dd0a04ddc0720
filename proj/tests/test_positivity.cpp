#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slopestab/error.hpp"
#include "slopestab/positivity.hpp"

using namespace slopestab;

namespace {

ProductSurfaceParams branched(long q, long k) {
  ProductSurfaceParams p;
  p.q = q;
  p.sc_mode = BranchedCover{k};
  return p;
}

KodairaParams nine_three() {
  KodairaParams k;
  k.q = 9;
  k.k = 3;
  return k;
}

}  // namespace

TEST_CASE("ample_ls") {
  CHECK(ample_ls(3, Rational(4)).status == AmpleStatus::Ample);
  CHECK(ample_ls(3, Rational(3)).status == AmpleStatus::NotAmple);
  CHECK(ample_ls(2, Rational(5, 2)).status == AmpleStatus::Ample);
}

TEST_CASE("ample_ls flips exactly at q") {
  for (long q = 2; q <= 50; ++q) {
    Rational lo(0);
    Rational hi(2 * q);
    for (int i = 0; i < 60; ++i) {
      const Rational mid = midpoint(lo, hi);
      if (ample_ls(q, mid).ample()) hi = mid;
      else lo = mid;
    }
    CHECK(lo <= Rational(q));
    CHECK(hi > Rational(q));
    CHECK(hi - lo < Rational(1, 1000000));
  }
}

TEST_CASE("ample_ls monotone") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(0, 4000);
  for (int i = 0; i < 200; ++i) {
    const Rational s(num(rng), 100);
    const Rational t = s + Rational(num(rng) + 1, 1000);
    if (ample_ls(7, s).ample()) CHECK(ample_ls(7, t).ample());
  }
}

TEST_CASE("ample_Lt") {
  CHECK(ample_Lt(branched(9, 3), Rational(5)).status == AmpleStatus::Ample);
  CHECK(ample_Lt(branched(9, 3), Rational(9, 2)).status == AmpleStatus::NotAmple);
  ProductSurfaceParams four;
  four.q = 4;
  CHECK(ample_Lt(four, Rational(2)).status == AmpleStatus::NotAmple);
  ProductSurfaceParams five;
  five.q = 5;
  five.sc_mode = UserBounds{Rational(9, 4), Rational(5, 2)};
  CHECK(ample_Lt(five, Rational(12, 5)).status == AmpleStatus::Unknown);
  for (auto [q, k] : {std::pair{9L, 3L}, {5L, 3L}, {10L, 4L}}) {
    const Rational threshold = Rational(q) / Rational(k - 1);
    CHECK_FALSE(ample_Lt(branched(q, k), threshold).ample());
    CHECK(ample_Lt(branched(q, k), threshold + Rational(1, 1000000)).ample());
  }
}

TEST_CASE("seshadri_diagonal") {
  const SeshadriBound b = seshadri_diagonal(branched(9, 3), Rational(10));
  CHECK(b.exact);
  CHECK(b.lower == Rational(29, 11));
  CHECK(*b.upper == Rational(29, 11));
  ProductSurfaceParams four;
  four.q = 4;
  CHECK(seshadri_diagonal(four, Rational(5)).lower == Rational(7, 3));
  CHECK_THROWS_AS(seshadri_diagonal(four, Rational(4)), Error);
  CHECK_THROWS_AS(seshadri_diagonal(four, Rational(3)), Error);
  CHECK(seshadri_diagonal(four, Rational(4), Evaluation::BoundaryLimit).boundary_limit);
  ProductSurfaceParams five;
  five.q = 5;
  const SeshadriBound r = seshadri_diagonal(five, Rational(6));
  CHECK_FALSE(r.exact);
  CHECK(r.lower <= *r.upper);
  for (long q = 2; q <= 12; ++q) {
    ProductSurfaceParams p;
    p.q = q;
    CHECK(seshadri_diagonal(p, Rational(q) + Rational(1, 7)).lower > Rational(1));
  }
}

TEST_CASE("seshadri flips the ampleness of l_s - cD") {
  const ProductSurfaceParams p = branched(9, 3);
  const Rational s(10);
  const Rational eps = seshadri_diagonal(p, s).lower;
  const auto ample_at = [&](const Rational& c) { return ample_product_class(p, s - c, Rational(1) - c).ample(); };
  CHECK(ample_at(eps - Rational(1, 1000000)));
  CHECK_FALSE(ample_at(eps));
  CHECK_FALSE(ample_at(eps + Rational(1, 1000000)));
}

TEST_CASE("X2 Seshadri bounds") {
  const KodairaParams k = nine_three();
  CHECK(seshadri_lower_bound_Z2(k, Rational(5), Rational(1, 100)).lower == Rational(1));
  CHECK(seshadri_lower_bound_Z2(k, Rational(9, 2), Rational(1, 100)).lower == Rational(1));
  CHECK_FALSE(seshadri_lower_bound_Z2(k, Rational(4), Rational(1, 100)).certified);
  CHECK_THROWS_AS(seshadri_lower_bound_Z2(k, Rational(5), Rational(0)), Error);
  CHECK(seshadri_lower_bound_D2(k, Rational(9), Rational(1, 100)).lower == Rational(1));
  CHECK_FALSE(seshadri_lower_bound_D2(k, Rational(9), Rational(0)).certified);
  CHECK(seshadri_lower_bound_D2(k, Rational(9), Rational(0), Evaluation::BoundaryLimit).boundary_limit);
}

TEST_CASE("X2 ampleness") {
  const KodairaParams k = nine_three();
  CHECK(ample_L2(k, Rational(9, 2), Rational(1, 1000)).status == AmpleStatus::AmpleCertified);
  CHECK(ample_L2(k, Rational(4), Rational(1, 1000)).status == AmpleStatus::Unknown);
  CHECK(ample_L2(k, Rational(5), Rational(0)).status == AmpleStatus::Unknown);
  CHECK(ample_l2(k, Rational(10), Rational(1, 1000)).status == AmpleStatus::AmpleCertified);
  CHECK(ample_l2(k, Rational(10), Rational(0)).status == AmpleStatus::Unknown);
}

TEST_CASE("cone section") {
  const ConeSection cone = cone_section(branched(9, 3), Rational(18), 5);
  REQUIRE(cone.rays.size() == 2);
  CHECK(cone.rays[0].threshold_lo == Rational(9));
  CHECK(cone.rays[1].threshold_lo == Rational(9, 2));
  CHECK(cone.grid.size() == 25);
  ProductSurfaceParams four;
  four.q = 4;
  const ConeSection c4 = cone_section(four, Rational(8), 2);
  CHECK(c4.rays[0].threshold_hi == Rational(4));
  CHECK(c4.rays[1].threshold_hi == Rational(2));
  REQUIRE(c4.grid.size() == 4);
  CHECK(c4.grid[0].status == AmpleStatus::NotAmple);
  CHECK(c4.grid[3].status == AmpleStatus::Ample);
  CHECK_THROWS_AS(cone_section(four, Rational(8), 1), Error);
}
