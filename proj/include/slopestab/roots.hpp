#pragma once

/**
 * @file roots.hpp
 * @brief Certified real roots and sets of reals described by sign conditions.
 *
 * A RealPoint is either an exact rational or an irrational real root of a
 * square-free rational polynomial, isolated in an open interval whose two
 * rational ends have nonzero values of opposite sign. Comparisons against
 * rationals are decided exactly by evaluating that polynomial; no radical
 * is ever materialized.
 */

#include <optional>
#include <string>
#include <vector>

#include "slopestab/numerics.hpp"
#include "slopestab/polynomial.hpp"

namespace slopestab {

class RealPoint {
 public:
  static RealPoint exact(Rational value);
  /// Precondition: `poly` is square-free with exactly one root in (lo, hi) and p(lo)·p(hi) < 0.
  static RealPoint enclosed(Polynomial poly, Rational lo, Rational hi);

  bool is_exact() const { return exact_; }
  /// Throws InvalidArgument for an enclosed point.
  const Rational& value() const;
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  RationalInterval enclosure() const { return {lo_, hi_}; }
  Rational width() const { return hi_ - lo_; }
  /// Defining polynomial; x - v for an exact point.
  const Polynomial& polynomial() const { return poly_; }

  /// Sign of (this - x), decided exactly.
  int compare(const Rational& x) const;

  /// Bisects until the enclosure is no wider than `tol` (exact points are returned unchanged).
  RealPoint refined(const Rational& tol) const;

  /// "v" when exact, "[lo;hi]" otherwise.
  std::string str() const;

 private:
  RealPoint() = default;
  bool exact_ = true;
  Rational lo_;
  Rational hi_;
  Polynomial poly_;
};

/// Sign of (a - b).
int compare(const RealPoint& a, const RealPoint& b);

struct Endpoint {
  enum class Kind { NegInfinity, Finite, PosInfinity };

  Kind kind = Kind::Finite;
  std::optional<RealPoint> point;
  bool closed = false;

  static Endpoint neg_infinity() { return {Kind::NegInfinity, std::nullopt, false}; }
  static Endpoint pos_infinity() { return {Kind::PosInfinity, std::nullopt, false}; }
  static Endpoint at(RealPoint p, bool closed) { return {Kind::Finite, std::move(p), closed}; }
  static Endpoint at(const Rational& v, bool closed) { return at(RealPoint::exact(v), closed); }

  bool is_finite() const { return kind == Kind::Finite; }
  /// True for a finite exact endpoint.
  bool is_exact() const { return is_finite() && point->is_exact(); }
  std::string str() const;
};

struct Interval {
  Endpoint lo;
  Endpoint hi;

  static Interval open(const Rational& a, const Rational& b);
  static Interval half_open_right(const Rational& a, const Rational& b);  // (a, b]
  static Interval positive_reals();

  bool contains(const Rational& x) const;
  bool is_empty() const;
  /// A rational strictly inside (or the point itself for a degenerate closed interval).
  Rational sample() const;
  Interval intersect(const Interval& other) const;
  std::string str() const;
};

/// Finite disjoint union of intervals, sorted left to right.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  bool contains(const Rational& x) const;
  IntervalSet intersect(const Interval& window) const;
  /// Union of two sets whose members are pairwise disjoint.
  IntervalSet disjoint_union(const IntervalSet& other) const;
  std::string str() const;

 private:
  std::vector<Interval> parts_;
};

/// All distinct real roots of p, sorted; rational roots are returned exactly,
/// irrational ones enclosed to width <= tol. Zero polynomial: throws DegenerateInequality.
std::vector<RealPoint> isolate_real_roots(const Polynomial& p, const Rational& tol);

/// {x real : p(x) < 0}. The zero polynomial yields the empty set.
IntervalSet negativity_set(const Polynomial& p, const Rational& tol);

struct QuadraticSignProfile {
  Rational a2;
  Rational a1;
  Rational a0;
  /// {x > 0 : a2 x^2 + a1 x + a0 < 0}
  IntervalSet negativity;
};

QuadraticSignProfile quadratic_negativity(const Rational& a2, const Rational& a1, const Rational& a0,
                                          const Rational& tol = default_tolerance());

int sign_of_quadratic_at(const Rational& a2, const Rational& a1, const Rational& a0, const Rational& x);

}  // namespace slopestab
