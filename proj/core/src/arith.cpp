#include "coxeter/arith.hpp"

namespace coxeter {

namespace checked {

Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (a == INT64_MIN && b == -1) throw OverflowError("integer overflow in division");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (a == INT64_MIN && b == -1) throw OverflowError("integer overflow in division");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace checked

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = checked::neg(num);
    den = checked::neg(den);
  }
  Int g = checked::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return Rational(checked::neg(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  Int g = checked::gcd(den_, o.den_);
  Int lhs = checked::mul(num_, o.den_ / g);
  Int rhs = checked::mul(o.num_, den_ / g);
  *this = Rational(checked::add(lhs, rhs), checked::mul(den_, o.den_ / g));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // cross-cancel first to keep intermediates small
  Int g1 = checked::gcd(num_, o.den_);
  Int g2 = checked::gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = Rational(checked::mul(num_ / g1, o.num_ / g2), checked::mul(den_ / g2, o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

}  // namespace coxeter
