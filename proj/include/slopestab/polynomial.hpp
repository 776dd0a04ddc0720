#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slopestab/numerics.hpp"

namespace slopestab {

/// Univariate polynomial with exact rational coefficients, stored low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> low_to_high);

  static Polynomial constant(const Rational& a0);
  static Polynomial linear(const Rational& a1, const Rational& a0);
  static Polynomial quadratic(const Rational& a2, const Rational& a1, const Rational& a0);
  static Polynomial x();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Positive rational multiple with coprime integer coefficients and positive leading term.
  Polynomial primitive() const;
  Polynomial squarefree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& k, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Upper bound B with every real root strictly inside (-B, B).
Rational root_bound(const Polynomial& p);

/// Sturm sequence of a square-free polynomial.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
int sign_variations(const std::vector<Polynomial>& sturm, const Rational& x);

}  // namespace slopestab
