#include "slopestab/roots.hpp"

#include <algorithm>
#include <sstream>

#include "slopestab/error.hpp"

namespace slopestab {

// ---------------------------------------------------------------- RealPoint

RealPoint RealPoint::exact(Rational value) {
  RealPoint p;
  p.exact_ = true;
  p.lo_ = value;
  p.hi_ = value;
  p.poly_ = Polynomial::linear(Rational(1), -value);
  return p;
}

RealPoint RealPoint::enclosed(Polynomial poly, Rational lo, Rational hi) {
  if (!(lo < hi) || poly.sign_at(lo) * poly.sign_at(hi) >= 0) {
    throw Error(ErrorCode::InvalidArgument, "enclosure does not bracket a sign change");
  }
  RealPoint p;
  p.exact_ = false;
  p.lo_ = std::move(lo);
  p.hi_ = std::move(hi);
  p.poly_ = std::move(poly);
  return p;
}

const Rational& RealPoint::value() const {
  if (!exact_) throw Error(ErrorCode::InvalidArgument, "point is only known by enclosure " + str());
  return lo_;
}

int RealPoint::compare(const Rational& x) const {
  if (exact_) return (lo_ - x).sign();
  if (x <= lo_) return 1;
  if (x >= hi_) return -1;
  const int sx = poly_.sign_at(x);
  if (sx == 0) return 0;
  return sx == poly_.sign_at(lo_) ? 1 : -1;
}

RealPoint RealPoint::refined(const Rational& tol) const {
  if (tol.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (exact_) return *this;
  Rational lo = lo_;
  Rational hi = hi_;
  const int s_lo = poly_.sign_at(lo);
  while (hi - lo > tol) {
    Rational m = midpoint(lo, hi);
    const int sm = poly_.sign_at(m);
    if (sm == 0) return exact(m);
    if (sm == s_lo) lo = std::move(m);
    else hi = std::move(m);
  }
  return enclosed(poly_, lo, hi);
}

std::string RealPoint::str() const {
  if (exact_) return lo_.str();
  return "[" + lo_.str() + ";" + hi_.str() + "]";
}

namespace {

bool is_root_of(const Polynomial& g, const RealPoint& p) {
  if (p.is_exact()) return g(p.value()).is_zero();
  return g.sign_at(p.lower()) * g.sign_at(p.upper()) < 0;
}

}  // namespace

int compare(const RealPoint& a, const RealPoint& b) {
  if (a.is_exact()) return -b.compare(a.value());
  if (b.is_exact()) return a.compare(b.value());
  RealPoint x = a;
  RealPoint y = b;
  std::optional<Polynomial> common;
  for (int round = 0; round < 4096; ++round) {
    if (x.upper() <= y.lower()) return -1;
    if (y.upper() <= x.lower()) return 1;
    if (x.polynomial() == y.polynomial() && x.lower() == y.lower() && x.upper() == y.upper()) return 0;
    if (round == 32) {
      Polynomial g = gcd(x.polynomial(), y.polynomial());
      if (g.degree() >= 1 && is_root_of(g, x) && is_root_of(g, y)) common = std::move(g);
    }
    if (common) {
      // Both are roots of the square-free common factor; they coincide iff it has a single root on the hull.
      const Rational lo = min(x.lower(), y.lower());
      const Rational hi = max(x.upper(), y.upper());
      if (common->sign_at(lo) != 0 && common->sign_at(hi) != 0) {
        const auto seq = sturm_sequence(*common);
        if (sign_variations(seq, lo) - sign_variations(seq, hi) == 1) return 0;
      }
    }
    x = x.refined(x.width() / Rational(2));
    y = y.refined(y.width() / Rational(2));
    if (x.is_exact() || y.is_exact()) return compare(x, y);
  }
  throw Error(ErrorCode::InvalidArgument, "could not separate algebraic points");
}

// ---------------------------------------------------------------- Endpoint / Interval

std::string Endpoint::str() const {
  switch (kind) {
    case Kind::NegInfinity: return "-inf";
    case Kind::PosInfinity: return "inf";
    case Kind::Finite: break;
  }
  return point->str();
}

Interval Interval::open(const Rational& a, const Rational& b) {
  return {Endpoint::at(a, false), Endpoint::at(b, false)};
}

Interval Interval::half_open_right(const Rational& a, const Rational& b) {
  return {Endpoint::at(a, false), Endpoint::at(b, true)};
}

Interval Interval::positive_reals() { return {Endpoint::at(Rational(0), false), Endpoint::pos_infinity()}; }

bool Interval::contains(const Rational& x) const {
  if (lo.is_finite()) {
    const int c = lo.point->compare(x);
    if (c > 0 || (c == 0 && !lo.closed)) return false;
  } else if (lo.kind == Endpoint::Kind::PosInfinity) {
    return false;
  }
  if (hi.is_finite()) {
    const int c = hi.point->compare(x);
    if (c < 0 || (c == 0 && !hi.closed)) return false;
  } else if (hi.kind == Endpoint::Kind::NegInfinity) {
    return false;
  }
  return true;
}

bool Interval::is_empty() const {
  if (lo.kind == Endpoint::Kind::PosInfinity || hi.kind == Endpoint::Kind::NegInfinity) return true;
  if (!lo.is_finite() || !hi.is_finite()) return false;
  const int c = compare(*lo.point, *hi.point);
  if (c < 0) return false;
  if (c > 0) return true;
  return !(lo.closed && hi.closed);
}

Rational Interval::sample() const {
  if (is_empty()) throw Error(ErrorCode::InvalidArgument, "sample of empty interval");
  if (!lo.is_finite() && !hi.is_finite()) return Rational(0);
  if (!lo.is_finite()) return hi.point->lower() - Rational(1);
  if (!hi.is_finite()) return lo.point->upper() + Rational(1);
  RealPoint a = *lo.point;
  RealPoint b = *hi.point;
  if (compare(a, b) == 0) return a.value();
  while (!(a.upper() < b.lower())) {
    if (!a.is_exact()) a = a.refined(a.width() / Rational(2));
    if (!b.is_exact()) b = b.refined(b.width() / Rational(2));
  }
  return midpoint(a.upper(), b.lower());
}

namespace {

// Larger of two lower endpoints.
Endpoint max_lower(const Endpoint& a, const Endpoint& b) {
  if (a.kind == Endpoint::Kind::NegInfinity) return b;
  if (b.kind == Endpoint::Kind::NegInfinity) return a;
  if (a.kind == Endpoint::Kind::PosInfinity) return a;
  if (b.kind == Endpoint::Kind::PosInfinity) return b;
  const int c = compare(*a.point, *b.point);
  if (c > 0) return a;
  if (c < 0) return b;
  Endpoint out = a.point->is_exact() ? a : b;
  out.closed = a.closed && b.closed;
  return out;
}

// Smaller of two upper endpoints.
Endpoint min_upper(const Endpoint& a, const Endpoint& b) {
  if (a.kind == Endpoint::Kind::PosInfinity) return b;
  if (b.kind == Endpoint::Kind::PosInfinity) return a;
  if (a.kind == Endpoint::Kind::NegInfinity) return a;
  if (b.kind == Endpoint::Kind::NegInfinity) return b;
  const int c = compare(*a.point, *b.point);
  if (c < 0) return a;
  if (c > 0) return b;
  Endpoint out = a.point->is_exact() ? a : b;
  out.closed = a.closed && b.closed;
  return out;
}

}  // namespace

Interval Interval::intersect(const Interval& other) const {
  return {max_lower(lo, other.lo), min_upper(hi, other.hi)};
}

std::string Interval::str() const {
  return std::string(lo.closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi.closed ? "]" : ")");
}

// ---------------------------------------------------------------- IntervalSet

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  for (auto& p : parts) {
    if (!p.is_empty()) parts_.push_back(std::move(p));
  }
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
    if (a.lo.kind != b.lo.kind) return a.lo.kind < b.lo.kind;
    if (!a.lo.is_finite()) return false;
    return compare(*a.lo.point, *b.lo.point) < 0;
  });
}

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

IntervalSet IntervalSet::intersect(const Interval& window) const {
  std::vector<Interval> out;
  for (const auto& p : parts_) out.push_back(p.intersect(window));
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::disjoint_union(const IntervalSet& other) const {
  std::vector<Interval> out = parts_;
  out.insert(out.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(out));
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " U ";
    out += parts_[i].str();
  }
  return out;
}

// ---------------------------------------------------------------- root isolation

namespace {

class Isolator {
 public:
  Isolator(const Polynomial& sf, const Rational& tol)
      : sf_(sf), sturm_(sturm_sequence(sf)), tol_(tol), lead_(sf.primitive().leading().abs()) {}

  std::vector<RealPoint> run() {
    const Rational b = root_bound(sf_);
    split(-b, b);
    return std::move(out_);
  }

 private:
  int count(const Rational& a, const Rational& b) const {
    return sign_variations(sturm_, a) - sign_variations(sturm_, b);
  }

  // a and b are never roots of sf_.
  void split(const Rational& a, const Rational& b) {
    const int n = count(a, b);
    if (n == 0) return;
    if (n == 1) {
      out_.push_back(finalize(a, b));
      return;
    }
    const Rational m = midpoint(a, b);
    if (!sf_(m).is_zero()) {
      split(a, m);
      split(m, b);
      return;
    }
    Rational h = (b - a) / Rational(4);
    while (sf_(m - h).is_zero() || sf_(m + h).is_zero() || count(m - h, m + h) != 1) h /= Rational(2);
    split(a, m - h);
    out_.push_back(RealPoint::exact(m));
    split(m + h, b);
  }

  // Single simple root in (a, b). A rational root r of sf_ has r * lead_ integral,
  // so once the enclosure is narrower than 1/lead_ there is one candidate to test.
  RealPoint finalize(const Rational& a, const Rational& b) const {
    RealPoint p = RealPoint::enclosed(sf_, a, b);
    const Rational narrow = min(tol_, lead_.inverse() / Rational(2));
    p = p.refined(narrow);
    if (p.is_exact()) return p;
    const Rational candidate = Rational(Rational(p.lower() * lead_).ceil()) / lead_;
    if (candidate < p.upper() && sf_(candidate).is_zero()) return RealPoint::exact(candidate);
    return p.refined(tol_);
  }

  Polynomial sf_;
  std::vector<Polynomial> sturm_;
  Rational tol_;
  Rational lead_;
  std::vector<RealPoint> out_;
};

IntervalSet negativity_from_roots(const Polynomial& p, const std::vector<RealPoint>& roots) {
  std::vector<Interval> parts;
  Endpoint left = Endpoint::neg_infinity();
  for (std::size_t i = 0; i <= roots.size(); ++i) {
    Endpoint right = i < roots.size() ? Endpoint::at(roots[i], false) : Endpoint::pos_infinity();
    Interval gap{left, right};
    if (!gap.is_empty() && p.sign_at(gap.sample()) < 0) parts.push_back(gap);
    left = right;
  }
  return IntervalSet(std::move(parts));
}

}  // namespace

std::vector<RealPoint> isolate_real_roots(const Polynomial& p, const Rational& tol) {
  if (p.is_zero()) throw Error(ErrorCode::DegenerateInequality, "zero polynomial has no isolated roots");
  if (tol.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const Polynomial sf = p.squarefree();
  if (sf.degree() <= 0) return {};
  return Isolator(sf, tol).run();
}

IntervalSet negativity_set(const Polynomial& p, const Rational& tol) {
  if (p.is_zero()) return {};
  return negativity_from_roots(p, isolate_real_roots(p, tol));
}

QuadraticSignProfile quadratic_negativity(const Rational& a2, const Rational& a1, const Rational& a0,
                                          const Rational& tol) {
  if (a2.is_zero() && a1.is_zero() && a0.is_zero()) {
    throw Error(ErrorCode::DegenerateInequality, "all coefficients are zero");
  }
  if (tol.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const Polynomial q = Polynomial::quadratic(a2, a1, a0);
  std::vector<RealPoint> roots;
  if (a2.is_zero()) {
    if (!a1.is_zero()) roots.push_back(RealPoint::exact(-a0 / a1));
  } else {
    const Rational disc = a1 * a1 - Rational(4) * a2 * a0;
    const Rational vertex = -a1 / (Rational(2) * a2);
    Rational sqrt_disc;
    if (disc.is_zero()) {
      roots.push_back(RealPoint::exact(vertex));
    } else if (disc.sign() > 0 && rational_sqrt(disc, sqrt_disc)) {
      const Rational half = sqrt_disc / (Rational(2) * a2).abs();
      roots.push_back(RealPoint::exact(vertex - half));
      roots.push_back(RealPoint::exact(vertex + half));
    } else if (disc.sign() > 0) {
      // The vertex separates the two roots; bisect each side.
      const Rational bound = root_bound(q);
      roots.push_back(RealPoint::enclosed(q, -bound, vertex).refined(tol));
      roots.push_back(RealPoint::enclosed(q, vertex, bound).refined(tol));
    }
  }
  return {a2, a1, a0, negativity_from_roots(q, roots).intersect(Interval::positive_reals())};
}

int sign_of_quadratic_at(const Rational& a2, const Rational& a1, const Rational& a0, const Rational& x) {
  return (a2 * x * x + a1 * x + a0).sign();
}

}  // namespace slopestab
