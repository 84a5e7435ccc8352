#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fncalc/errors.hpp"

namespace fncalc {

/// Arbitrary-precision signed integer. Closed under add/sub/mul/pow.
using Integer = mpz_class;

Integer int_pow(const Integer& base, unsigned long exp);
Integer two_pow(unsigned long exp);

/// Exact rational number, always stored reduced with a positive denominator,
/// so structural equality coincides with mathematical equality.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(Integer num, Integer den);

  /// Parses "p/q" or "p" (sign on the numerator). Throws ParseError.
  static Rational parse(std::string_view s);

  const Integer num() const { return v_.get_num(); }
  const Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  Rational pow(unsigned long k) const;
  Integer floor() const;
  double to_double() const { return v_.get_d(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), raw_tag{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), raw_tag{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), raw_tag{});
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_), raw_tag{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  const mpq_class& raw() const { return v_; }

private:
  struct raw_tag {};
  // already-canonical values only
  Rational(mpq_class v, raw_tag) : v_(std::move(v)) {}
  mpq_class v_; // invariant: canonical (gcd(num,den)=1, den>0)
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Renders x as a decimal string with up to `places` fractional digits
/// (round half away from zero, trailing zeros trimmed). Pure integer
/// arithmetic, no floating point.
std::string decimal_str(const Rational& x, std::size_t places = 12);

/// binom(n, i) by the multiplicative running-product form, reducing at each
/// step. Returns 0 when i > n.
Integer binomial(unsigned long n, unsigned long i);

/// Row n of the Pascal triangle: [binom(n,0), ..., binom(n,n)].
std::vector<Integer> pascal_row(unsigned long n);

/// binom(2n, n) / (n + 1); always an integer-valued rational.
Rational catalan(unsigned long n);

} // namespace fncalc
