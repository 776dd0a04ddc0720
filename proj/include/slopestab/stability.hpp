#pragma once

/**
 * @file stability.hpp
 * @brief Slopes, quotient slopes and destabilization windows on polarized surfaces.
 *
 * For a surface X with canonical class K, polarization L and a curve Z:
 *
 *   mu(X, L)     = -K.L / L^2
 *   mu_c(O_Z, L) = 3(2 L.Z - c(K.Z + Z^2)) / (2c(3 L.Z - c Z^2))
 *
 * (X, L) is destabilized by Z at c when mu_c < mu and 0 < c <= epsilon(Z, L).
 * Windows are exact sets of parameters where that happens; irrational
 * endpoints are certified enclosures.
 */

#include <string>
#include <utility>
#include <vector>

#include "slopestab/lattice.hpp"
#include "slopestab/positivity.hpp"
#include "slopestab/roots.hpp"
#include "slopestab/surfaces.hpp"

namespace slopestab {

struct SlopeReport {
  Rational mu_X;
  Rational mu_c_Z;
  Rational c;
  SeshadriBound seshadri;
  bool admissible = false;
  bool destabilized = false;
  std::string surface;
  std::string polarization;
  std::string subscheme;
  std::vector<std::string> flags;
};

enum class WindowVariable { c, s, t };

std::string_view to_string(WindowVariable v);

struct StabilityWindow {
  WindowVariable variable = WindowVariable::c;
  IntervalSet intervals;
  std::vector<std::pair<std::string, std::string>> context;
  bool boundary_limit = false;
};

/// Throws DegeneratePolarization when L^2 = 0.
Rational slope(const SurfaceModel& X, const DivisorClass& L);

/// Throws InvalidArgument for c <= 0 and DegenerateQuotientSlope for a zero denominator.
Rational quotient_slope(const SurfaceModel& X, const DivisorClass& Z, const DivisorClass& L, const Rational& c);

SlopeReport destabilizes(const SurfaceModel& X, const DivisorClass& Z, const DivisorClass& L, const Rational& c,
                         const SeshadriBound& seshadri);

/// {c in (0, seshadri.lower] : mu_c(O_Z, L) < mu(X, L)}.
StabilityWindow instability_window_c(const SurfaceModel& X, const DivisorClass& Z, const DivisorClass& L,
                                     const SeshadriBound& seshadri, const Rational& tol = default_tolerance());

/// c-window for the diagonal on C x C with polarization l_s; s = q is evaluated as a boundary limit.
StabilityWindow product_window_c(const ProductSurfaceParams& params, const Rational& s,
                                 const Rational& tol = default_tolerance());

/// {s in (q, q + extent] : the diagonal destabilizes (C x C, l_s) at c}.
StabilityWindow instability_window_s(const ProductSurfaceParams& params, const Rational& c, const Rational& extent,
                                     const Rational& tol = default_tolerance());

// ---------------------------------------------------------------- X2

enum class X2Family {
  L_t,  // t f2 - delta2' + eps K_X2, tested against Z2 at c = 1
  l_s,  // s f2 + delta2' + eps K_X2, tested against D2
};

DivisorClass x2_polarization(const SurfaceModel& x2, X2Family family, const Rational& value, const Rational& eps);

/// Exact slope on the X2 lattice, eps kept exactly.
Rational x2_slope_exact(const KodairaParams& params, X2Family family, const Rational& value, const Rational& eps);

/// Exact quotient slope of Z2 (L_t family, c must be 1) or D2 (l_s family).
Rational x2_quotient_slope_exact(const KodairaParams& params, X2Family family, const Rational& value,
                                 const Rational& eps, const Rational& c);

/// Leading-order closed forms (eps -> 0) written out from the C x C intersection numbers.
Rational x2_slope_leading_order(const KodairaParams& params, X2Family family, const Rational& value);
Rational x2_quotient_slope_leading_order(const KodairaParams& params, X2Family family, const Rational& value,
                                         const Rational& c);

/// c-window for D2 on (X2, s f2 + delta2' + eps K); eps = 0 is evaluated as a boundary limit.
StabilityWindow x2_window_c(const KodairaParams& params, const Rational& s, const Rational& eps,
                            const Rational& tol = default_tolerance());

/// Closed-form c-window bound 3q/(4rq + 2(r-1)(|G|-1)) for D2 at s = q, eps = 0.
Rational x2_window_bound(const KodairaParams& params);

/// Residual inequality for Z2 at t = q/(k-1):
///   2(k-1)^2/q ((q/(k-1) + 1)|G| + q - 1) < 3(k|G| + q - 1).
struct ResidualInequality {
  bool holds = false;
  Rational lhs;
  Rational rhs;
  Rational margin;  // rhs - lhs
  /// Margin rewritten as 3(k|G|+q-1) - 2((k-1 + (k-1)^2/q)|G| + (k-1)^2(q-1)/q).
  Rational margin_expanded;
  /// k|G| + q - 1, which the margin strictly exceeds.
  Rational chain_bound;
};

ResidualInequality residual_inequality(long q, long k, long group_order);

// ---------------------------------------------------------------- J-flow

/// 2(K.L) L - (L^2) K.
DivisorClass weinkove_alpha(const SurfaceModel& X, const DivisorClass& L);

/// Ampleness of weinkove_alpha(C x C, l_s), decided by the sign of s^2 - 2qs + q.
AmpleVerdict weinkove_threshold(long q, const Rational& s);

}  // namespace slopestab
