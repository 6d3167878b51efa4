#pragma once

// Exact rational numbers backed by GMP.
//
// Every coordinate in this library (breakpoints, images, slopes, displacement
// bounds) is a Rational. Values are always kept in lowest terms with a
// positive denominator, so == is structural equality.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace plm {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t n, std::int64_t d);
  Rational(const BigInt& n, const BigInt& d = 1);
  explicit Rational(const mpq_class& q);

  // Accepts "p", "-p", "p/q" with q > 0. Throws std::invalid_argument.
  static Rational parse(std::string_view text);
  // Exact value of a finite double.
  static Rational from_double(double value);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  // x - floor(x), in [0, 1).
  Rational frac() const;

  double to_double() const { return v_.get_d(); }
  std::string to_string() const;
  // Fixed-point decimal approximation, for human-readable output only.
  std::string to_decimal(int digits) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const BigInt& n);

}  // namespace plm

template <>
struct std::hash<plm::Rational> {
  std::size_t operator()(const plm::Rational& r) const { return r.hash(); }
};
