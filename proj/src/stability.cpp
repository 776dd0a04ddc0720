#include "slopestab/stability.hpp"

#include "slopestab/error.hpp"

namespace slopestab {

std::string_view to_string(WindowVariable v) {
  switch (v) {
    case WindowVariable::c: return "c";
    case WindowVariable::s: return "s";
    case WindowVariable::t: return "t";
  }
  return "?";
}

Rational slope(const SurfaceModel& X, const DivisorClass& L) {
  const Rational l2 = X.pair(L, L);
  if (l2.is_zero()) throw Error(ErrorCode::DegeneratePolarization, "L^2 = 0 for L = " + L.str());
  return -X.pair(X.canonical(), L) / l2;
}

Rational quotient_slope(const SurfaceModel& X, const DivisorClass& Z, const DivisorClass& L, const Rational& c) {
  if (c.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "c must be positive");
  const Rational lz = X.pair(L, Z);
  const Rational kz = X.pair(X.canonical(), Z);
  const Rational zz = X.pair(Z, Z);
  const Rational den = Rational(2) * c * (Rational(3) * lz - c * zz);
  if (den.is_zero()) {
    throw Error(ErrorCode::DegenerateQuotientSlope, "3 L.Z = c Z^2 at c = " + c.str());
  }
  return Rational(3) * (Rational(2) * lz - c * (kz + zz)) / den;
}

SlopeReport destabilizes(const SurfaceModel& X, const DivisorClass& Z, const DivisorClass& L, const Rational& c,
                         const SeshadriBound& seshadri) {
  SlopeReport out;
  out.c = c;
  out.mu_X = slope(X, L);
  out.mu_c_Z = quotient_slope(X, Z, L, c);
  out.seshadri = seshadri;
  out.surface = X.name();
  out.polarization = L.str();
  out.subscheme = Z.str();
  out.admissible = seshadri.certified && c <= seshadri.lower;
  out.destabilized = out.admissible && out.mu_c_Z < out.mu_X;
  if (!seshadri.certified) out.flags.emplace_back("uncertified Seshadri bound");
  else if (!out.admissible) out.flags.emplace_back("inadmissible c");
  if (seshadri.boundary_limit) out.flags.emplace_back("boundary limit");
  return out;
}

StabilityWindow instability_window_c(const SurfaceModel& X, const DivisorClass& Z, const DivisorClass& L,
                                     const SeshadriBound& seshadri, const Rational& tol) {
  const Rational a = X.pair(L, Z);
  const Rational b = X.pair(X.canonical(), Z);
  const Rational cz = X.pair(Z, Z);
  const Rational m = slope(X, L);
  if (a.is_zero() && cz.is_zero()) {
    throw Error(ErrorCode::DegenerateQuotientSlope, "denominator 2c(3 L.Z - c Z^2) vanishes identically");
  }

  StabilityWindow out;
  out.variable = WindowVariable::c;
  out.boundary_limit = seshadri.boundary_limit;
  out.context = {{"surface", X.name()}, {"polarization", L.str()}, {"subscheme", Z.str()}, {"mu", m.str()},
                 {"seshadri_lower", seshadri.lower.str()}};
  if (!seshadri.certified) {
    out.context.emplace_back("note", "no certified Seshadri bound; window empty");
    return out;
  }

  // mu_c - mu = N(c) / (2c(3A - cC)) with N(c) = 2mC c^2 - (3(B+C) + 6mA) c + 6A.
  const Rational n2 = Rational(2) * m * cz;
  const Rational n1 = -(Rational(3) * (b + cz) + Rational(6) * m * a);
  const Rational n0 = Rational(6) * a;
  const bool n_zero = n2.is_zero() && n1.is_zero() && n0.is_zero();

  // Split (0, inf) where the linear factor 3A - cC changes sign.
  std::vector<Interval> pieces;
  if (!cz.is_zero() && (Rational(3) * a / cz).sign() > 0) {
    const Rational c0 = Rational(3) * a / cz;
    pieces.push_back(Interval::open(Rational(0), c0));
    pieces.push_back({Endpoint::at(c0, false), Endpoint::pos_infinity()});
  } else {
    pieces.push_back(Interval::positive_reals());
  }

  IntervalSet negative;
  if (!n_zero) {
    for (const auto& piece : pieces) {
      const Rational sample = piece.sample();
      const int den_sign = (Rational(3) * a - sample * cz).sign();
      const QuadraticSignProfile profile = den_sign > 0 ? quadratic_negativity(n2, n1, n0, tol)
                                                        : quadratic_negativity(-n2, -n1, -n0, tol);
      negative = negative.disjoint_union(profile.negativity.intersect(piece));
    }
  }
  out.intervals = negative.intersect(Interval::half_open_right(Rational(0), seshadri.lower));
  return out;
}

StabilityWindow product_window_c(const ProductSurfaceParams& params, const Rational& s, const Rational& tol) {
  const SurfaceModel X = product_surface(params);
  const DivisorClass L = s * X.named("f") + X.named("delta_prime");
  const SeshadriBound eps = seshadri_diagonal(params, s, Evaluation::BoundaryLimit);
  StabilityWindow w = instability_window_c(X, X.named("D"), L, eps, tol);
  w.context.insert(w.context.begin(), {"s", s.str()});
  return w;
}

StabilityWindow instability_window_s(const ProductSurfaceParams& params, const Rational& c, const Rational& extent,
                                     const Rational& tol) {
  if (c.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "c must be positive");
  const SurfaceModel X = product_surface(params);
  const Rational q(params.q);
  StabilityWindow out;
  out.variable = WindowVariable::s;
  out.context = {{"surface", X.name()}, {"c", c.str()}, {"extent", extent.str()}};
  if (extent.sign() <= 0) return out;

  const DivisorClass& f = X.named("f");
  const DivisorClass& dp = X.named("delta_prime");
  const DivisorClass& D = X.named("D");
  const DivisorClass& K = X.canonical();
  // Intersection numbers of l_s = s f + delta' as polynomials in s.
  const Polynomial lz = Polynomial::linear(X.pair(f, D), X.pair(dp, D));
  const Polynomial ll = Polynomial::quadratic(X.pair(f, f), Rational(2) * X.pair(f, dp), X.pair(dp, dp));
  const Polynomial kl = Polynomial::linear(X.pair(K, f), X.pair(K, dp));
  const Rational kz = X.pair(K, D);
  const Rational zz = X.pair(D, D);

  // mu_c - mu = P / Q with
  //   P = 3(2A - c(B+C)) L^2 + 2c(3A - cC) K.L,   Q = 2c(3A - cC) L^2.
  const Polynomial two_a_minus = Rational(2) * lz - Polynomial::constant(c * (kz + zz));
  const Polynomial lin = Rational(3) * lz - Polynomial::constant(c * zz);
  const Polynomial P = Rational(3) * two_a_minus * ll + (Rational(2) * c) * lin * kl;
  const Polynomial Q = (Rational(2) * c) * lin * ll;

  IntervalSet window = negativity_set(P * Q, tol).intersect(Interval::half_open_right(q, q + extent));

  // Admissible iff c <= (s + h)/(1 + h) for the certified upper bound h on s_C.
  const Rational h = kouvidakis_bounds(params).hi.upper();
  const Rational s_min = c * (Rational(1) + h) - h;
  window = window.intersect({Endpoint::at(s_min, true), Endpoint::pos_infinity()});
  out.intervals = std::move(window);
  return out;
}

// ---------------------------------------------------------------- X2

DivisorClass x2_polarization(const SurfaceModel& x2, X2Family family, const Rational& value, const Rational& eps) {
  const DivisorClass& f2 = x2.named("f2");
  const DivisorClass& dp2 = x2.named("delta2_prime");
  const DivisorClass base = family == X2Family::L_t ? value * f2 - dp2 : value * f2 + dp2;
  return base + eps * x2.canonical();
}

Rational x2_slope_exact(const KodairaParams& params, X2Family family, const Rational& value, const Rational& eps) {
  if (eps.sign() < 0) throw Error(ErrorCode::InvalidArgument, "eps must be non-negative");
  const SurfaceModel x2 = kodaira_surface(params);
  return slope(x2, x2_polarization(x2, family, value, eps));
}

Rational x2_quotient_slope_exact(const KodairaParams& params, X2Family family, const Rational& value,
                                 const Rational& eps, const Rational& c) {
  if (eps.sign() < 0) throw Error(ErrorCode::InvalidArgument, "eps must be non-negative");
  const SurfaceModel x2 = kodaira_surface(params);
  const DivisorClass L = x2_polarization(x2, family, value, eps);
  if (family == X2Family::L_t) {
    if (c != Rational(1)) throw Error(ErrorCode::InvalidArgument, "Z2 quotient slope is only evaluated at c = 1");
    if (!x2.has_named("Z2")) throw Error(ErrorCode::ParamError, "Z2 needs k with 2 <= k-1 and (k-1)^2 < q");
    return quotient_slope(x2, x2.named("Z2"), L, c);
  }
  return quotient_slope(x2, x2.named("D2"), L, c);
}

Rational x2_slope_leading_order(const KodairaParams& params, X2Family family, const Rational& value) {
  params.validate();
  const Rational q(params.q);
  const Rational r(params.r);
  const Rational g(params.group_order);
  const Rational one(1);
  const Rational denom = value * value - q;
  if (denom.is_zero()) throw Error(ErrorCode::DegeneratePolarization, "value^2 = q");
  const Rational base = -value * (Rational(2) * q - Rational(2)) / denom;
  if (family == X2Family::L_t) {
    return base - (r - one) * ((value + one) * g + q - one) / (r * denom);
  }
  return base - (r - one) * ((value - one) * g - q + one) / (r * denom);
}

Rational x2_quotient_slope_leading_order(const KodairaParams& params, X2Family family, const Rational& value,
                                         const Rational& c) {
  params.validate();
  const Rational q(params.q);
  const Rational r(params.r);
  const Rational g(params.group_order);
  const Rational one(1);
  const Rational two(2);
  const Rational three(3);
  if (family == X2Family::L_t) {
    if (c != one) throw Error(ErrorCode::InvalidArgument, "Z2 quotient slope is only evaluated at c = 1");
    if (!params.has_valid_k()) throw Error(ErrorCode::ParamError, "Z2 needs k with 2 <= k-1 and (k-1)^2 < q");
    const Rational k(*params.k);
    const Rational m = k - one;
    // C x C numbers: L_t.Z, K.Z, Z^2 for Z = (k-1)f - delta'.
    const Rational lz = two * value * m - two * q;
    const Rational kz = two * (two * q - two) * m;
    const Rational zz = two * m * m - two * q;
    const Rational mu1 = three * (two * lz - (kz + zz)) / (two * (three * lz - zz));
    return mu1 - three * (r - one) * (k * g + q - one) / (two * r * (three * value * m - m * m - two * q));
  }
  const Rational s = value;
  const Rational product_part =
      three * (Rational(4) * s - Rational(4) * q - c * (two * q - two)) /
      (two * c * (Rational(6) * s - Rational(6) * q - two * c + two * c * q));
  return product_part - three * (r - one) * (one - q) / (two * r * (three * s - three * q - c * (one - q)));
}

StabilityWindow x2_window_c(const KodairaParams& params, const Rational& s, const Rational& eps,
                            const Rational& tol) {
  const SurfaceModel x2 = kodaira_surface(params);
  const DivisorClass L = x2_polarization(x2, X2Family::l_s, s, eps);
  const SeshadriBound bound = seshadri_lower_bound_D2(params, s, eps, Evaluation::BoundaryLimit);
  StabilityWindow w = instability_window_c(x2, x2.named("D2"), L, bound, tol);
  w.context.insert(w.context.begin(), {{"s", s.str()}, {"eps", eps.str()}});
  return w;
}

Rational x2_window_bound(const KodairaParams& params) {
  params.validate();
  const Rational q(params.q);
  const Rational r(params.r);
  const Rational g(params.group_order);
  return Rational(3) * q / (Rational(4) * r * q + Rational(2) * (r - Rational(1)) * (g - Rational(1)));
}

ResidualInequality residual_inequality(long q, long k, long group_order) {
  if (q < 2 || k - 1 < 2 || (k - 1) * (k - 1) >= q) {
    throw Error(ErrorCode::ParamError, "needs 2 <= k-1 and (k-1)^2 < q");
  }
  if (group_order < 1) throw Error(ErrorCode::ParamError, "group order must be positive");
  const Rational qr(q);
  const Rational kr(k);
  const Rational m(k - 1);
  const Rational g(group_order);
  const Rational one(1);
  ResidualInequality out;
  out.lhs = Rational(2) * m * m / qr * ((qr / m + one) * g + qr - one);
  out.rhs = Rational(3) * (kr * g + qr - one);
  out.margin = out.rhs - out.lhs;
  out.margin_expanded =
      Rational(3) * (kr * g + qr - one) - Rational(2) * ((m + m * m / qr) * g + m * m * (qr - one) / qr);
  out.chain_bound = kr * g + qr - one;
  out.holds = out.lhs < out.rhs;
  return out;
}

DivisorClass weinkove_alpha(const SurfaceModel& X, const DivisorClass& L) {
  const DivisorClass& K = X.canonical();
  return (Rational(2) * X.pair(K, L)) * L - X.pair(L, L) * K;
}

AmpleVerdict weinkove_threshold(long q, const Rational& s) {
  if (q < 2) throw Error(ErrorCode::ParamError, "genus q must be at least 2");
  const Rational qr(q);
  if (s <= qr) throw Error(ErrorCode::NotAmplePolarization, "l_s needs s > q, got s = " + s.str());
  const int sign = sign_of_quadratic_at(Rational(1), Rational(-2) * qr, qr, s);
  if (sign > 0) return {AmpleStatus::Ample, "s^2 + q > 2qs"};
  return {AmpleStatus::NotAmple, "s^2 + q <= 2qs"};
}

}  // namespace slopestab
