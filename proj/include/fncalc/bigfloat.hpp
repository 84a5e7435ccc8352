#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "fncalc/exact.hpp"

namespace fncalc {

/// Minimal RAII wrapper over an mpfr_t value.
class BigFloat {
public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat of(const Rational& x, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat of(double x, mpfr_prec_t prec);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  int sign() const { return mpfr_sgn(v_); }

  /// Decimal rendering with `digits` significant digits ("%.*Rg").
  std::string str(int digits = 40) const;

private:
  mpfr_t v_;
};

/// Directed-rounding enclosure [lo, hi] of a real value: the true value is
/// guaranteed to lie between the two endpoints. Most operations require
/// nonnegative enclosures, which is all the norm machinery needs.
class Enclosure {
public:
  static Enclosure exact(const Rational& x, mpfr_prec_t prec);
  static Enclosure zero(mpfr_prec_t prec);
  /// Point enclosure of an exactly known float value.
  static Enclosure point(const BigFloat& x);
  /// Takes ownership of precomputed directed bounds (lo <= hi required).
  static Enclosure from_bounds(BigFloat lo, BigFloat hi);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t prec() const { return lo_.prec(); }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  /// General-sign subtraction: [a.lo - b.hi, a.hi - b.lo].
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);

  /// Product / quotient of nonnegative enclosures (asserted).
  static Enclosure mul_nonneg(const Enclosure& a, const Enclosure& b);
  static Enclosure div_nonneg(const Enclosure& a, const Enclosure& b);

  /// x^k for nonnegative x, integer k >= 1.
  Enclosure pow_int(unsigned long k) const;
  /// k-th root for nonnegative x, k >= 1.
  Enclosure rootn(unsigned long k) const;
  /// x^e for nonnegative x and positive rational e = a/b: pow then root.
  Enclosure pow_rational(const Rational& e) const;
  /// x^e for nonnegative x and an exactly represented positive exponent.
  Enclosure pow_exact_exponent(const BigFloat& e) const;
  /// x^[e.lo, e.hi] for nonnegative x and a positive exponent enclosure.
  Enclosure pow_exponent_range(const BigFloat& elo, const BigFloat& ehi) const;

  /// Clamps a slightly negative lower bound (rounding slack) up to zero.
  Enclosure clamp_nonneg() const;

  bool is_nonneg() const { return mpfr_sgn(lo_.raw()) >= 0; }

private:
  Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
  BigFloat lo_, hi_;
};

enum class RootCmp { StrictlyLess, EqualWithin, StrictlyGreater };

/// Decision core shared by all high-precision comparisons: evaluates
/// lhs/rhs enclosures at precision_bits, compares their difference against
/// the equality band 2^(-precision_bits/2), and retries once at doubled
/// precision before giving up with PrecisionExhaustedError.
RootCmp decide_enclosures(
    const std::function<std::pair<Enclosure, Enclosure>(mpfr_prec_t)>& compute,
    unsigned precision_bits);

/// Decides lhs_pow^(1/p_lhs) vs the sum of term^(1/p) over rhs_terms, with
/// directed error accounting at precision_bits mantissa bits. All bases must
/// be nonnegative and all exponents >= 1.
RootCmp compare_root_sums(const Rational& lhs_pow, const Rational& p_lhs,
                          const std::vector<std::pair<Rational, Rational>>& rhs_terms,
                          unsigned precision_bits);

} // namespace fncalc
