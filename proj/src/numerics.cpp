#include "slopestab/numerics.hpp"

#include <cctype>
#include <ostream>

#include "slopestab/error.hpp"

namespace slopestab {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw Error(ErrorCode::InvalidArgument, "not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_.get_num() = n;
  v_.get_den() = d;
  v_.canonicalize();
}

Rational::Rational(const BigInt& n) : v_(n) {}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_.get_num() = n;
  v_.get_den() = d;
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(v_.get_den(), v_.get_num());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational reduce(long n, long d) { return Rational(n, d); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative integer");
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x.sign() < 0) return false;
  const BigInt n = x.numerator();
  const BigInt d = x.denominator();
  if (!is_perfect_square(n) || !is_perfect_square(d)) return false;
  root = Rational(isqrt(n), isqrt(d));
  return true;
}

const Rational& default_tolerance() {
  static const Rational tol(BigInt(1), BigInt(1000000000));
  return tol;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace slopestab
