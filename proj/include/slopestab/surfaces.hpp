#pragma once

/**
 * @file surfaces.hpp
 * @brief The three parameterized surfaces: C x C, its unbranched cover B x C,
 *        and the cyclic r-fold cover X2 of B x C branched along Sigma.
 *
 * Bases and Gram matrices:
 *   C x C    {f, delta_prime}             f^2 = 2, f.delta' = 0, delta'^2 = -2q
 *   B x C    {B0, C0, graph_h, Sigma}     see cover_surface()
 *   X2       {pb_B0, pb_C0, pb_graph_h, pb_Sigma}, Gram = r * (B x C Gram)
 */

#include <optional>
#include <string>
#include <variant>

#include "slopestab/lattice.hpp"
#include "slopestab/numerics.hpp"
#include "slopestab/roots.hpp"

namespace slopestab {

/// C is a simple branched cover of P^1 of degree k; s_C = q/(k-1).
struct BranchedCover {
  long k;
};

/// C has general moduli: sqrt(q) <= s_C <= q/floor(sqrt(q)); exact sqrt(q) when q is a perfect square.
struct GeneralModuli {};

/// Caller-supplied bounds lo <= s_C <= hi inside the general-moduli range.
struct UserBounds {
  Rational lo;
  Rational hi;
};

using KouvidakisMode = std::variant<BranchedCover, GeneralModuli, UserBounds>;

struct ProductSurfaceParams {
  long q = 2;
  KouvidakisMode sc_mode = GeneralModuli{};

  /// Throws ParamError.
  void validate() const;
  std::optional<long> k() const;
  std::string mode_name() const;
};

/// Certified range [lo, hi] for s_C = inf{t : t f - delta' ample}.
struct KouvidakisBounds {
  RealPoint lo;
  RealPoint hi;

  bool exact() const;
};

KouvidakisBounds kouvidakis_bounds(const ProductSurfaceParams& params, const Rational& tol = default_tolerance());

struct KodairaParams {
  long q = 3;
  long r = 2;
  long group_order = 2;
  /// Degree of C -> P^1; needed only for the t f - delta' family on X2.
  std::optional<long> k;
  /// Replaces d = r^(2q) for hypothetical covers.
  std::optional<BigInt> d_override;
  /// Sigma^2 uses disjoint graphs, i.e. a fixed-point-free G-action.
  bool fixed_point_free = true;

  /// Throws ParamError.
  void validate() const;
  /// Degree of h : B -> C, r^(2q) unless overridden.
  BigInt d() const;
  /// Genus of B from 2p - 2 = d(2q - 2).
  BigInt p() const;
  /// True when k is present with 2 <= k-1 and (k-1)^2 < q.
  bool has_valid_k() const;
};

SurfaceModel product_surface(const ProductSurfaceParams& params);
SurfaceModel cover_surface(const KodairaParams& params);
SurfaceModel kodaira_surface(const KodairaParams& params);

/// Self-intersection d * chi(N) of the graph of a degree-d map M -> N.
BigInt graph_self_intersection(const BigInt& d, const BigInt& euler_n);

/// pi_1^* : C x C -> B x C on the span of f, delta'.
DivisorClass pullback_to_cover(const SurfaceModel& product, const SurfaceModel& cover, const DivisorClass& cls);
/// pi_2^* : B x C -> X2, basis element to basis element.
DivisorClass pullback_to_kodaira(const SurfaceModel& cover, const SurfaceModel& kodaira, const DivisorClass& cls);

}  // namespace slopestab
