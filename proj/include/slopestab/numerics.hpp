#pragma once

/**
 * @file numerics.hpp
 * @brief Exact rational scalars.
 *
 * Rational is a thin value type over GMP's mpq_class. Values are always
 * canonical: lowest terms, positive denominator, zero stored as 0/1.
 * Nothing in the computational core ever converts to floating point.
 */

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace slopestab {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const BigInt& n);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n, const BigInt& d);

  /// Accepts "n", "-n", "n/d" with arbitrary-size integers.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;
  Rational inverse() const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// n/d in lowest terms; throws DivisionByZero for d == 0.
Rational reduce(long n, long d);

Rational pow(const Rational& base, unsigned exponent);
Rational midpoint(const Rational& a, const Rational& b);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

/// Floor of the square root of a non-negative integer.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);
/// Exact rational square root when one exists.
bool rational_sqrt(const Rational& x, Rational& root);

/// 1/10^9, the default width for certified enclosures.
const Rational& default_tolerance();

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

}  // namespace slopestab
