#pragma once

#include <string>
#include <vector>

#include "fncalc/exact.hpp"

namespace fncalc {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The empty coefficient list is the zero polynomial; otherwise the highest
/// stored coefficient is nonzero.
class Poly {
public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rational& c) { return Poly({c}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

  Rational eval(const Rational& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& s) const;
  Poly pow(unsigned long k) const;

  /// p(a0 + a1*x) for a linear inner polynomial, exact.
  Poly compose_linear(const Rational& a0, const Rational& a1) const;

  /// Antiderivative with constant term 0.
  Poly antiderivative() const;
  /// Exact integral over [lo, hi].
  Rational integral(const Rational& lo, const Rational& hi) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "1/2 + 3*x - x^2"; "0" for the zero poly.
  std::string str() const;

private:
  void trim();
  std::vector<Rational> c_;
};

} // namespace fncalc
