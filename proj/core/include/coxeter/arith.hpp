#pragma once

// Checked 64-bit integer arithmetic and an exact rational type.
//
// Every multiplication and addition in the lattice and group code goes
// through these helpers; an overflow throws OverflowError instead of
// wrapping.

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace coxeter {

using Int = std::int64_t;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

Int gcd(Int a, Int b);

// Floor division for any signs; b != 0.
Int floor_div(Int a, Int b);

// Ceiling division for any signs; b != 0.
Int ceil_div(Int a, Int b);

}  // namespace checked

class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p" or "p/q".
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace coxeter
