#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fncalc/poly.hpp"

namespace fncalc {

class BigFloat;

/// Half-open interval [lo, hi); lo < hi always.
struct Interval {
  Rational lo, hi;
  Interval(Rational lo_, Rational hi_);
  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
  std::string str() const;
};

/// One piece: a nonzero polynomial on a half-open interval.
struct Piece {
  Interval interval;
  Poly poly;
  friend bool operator==(const Piece& a, const Piece& b) { return a.interval == b.interval && a.poly == b.poly; }
};

/// Compactly supported piecewise-polynomial function. Canonical form:
/// pieces sorted by lo, pairwise disjoint, nonzero polynomials, adjacent
/// pieces with identical polynomials merged. Value is 0 outside all pieces.
/// Canonical form is unique, so structural equality is a.e. function
/// equality for this class. Immutable value type.
class PiecewiseFn {
public:
  PiecewiseFn() = default; // the zero function

  /// Canonicalizing constructor: drops zero polynomials, sorts, merges
  /// adjacent equal pieces. Throws Error if intervals overlap.
  static PiecewiseFn from_pieces(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  /// Hull of the union of piece intervals; nullopt for the zero function.
  std::optional<Interval> support() const;
  int max_degree() const;

  friend bool operator==(const PiecewiseFn& a, const PiecewiseFn& b) { return a.pieces_ == b.pieces_; }

private:
  explicit PiecewiseFn(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
  std::vector<Piece> pieces_;
};

/// Characteristic function of iv: 1 on [lo, hi), 0 elsewhere.
PiecewiseFn indicator(const Interval& iv);

/// Exact value f(x); a breakpoint belongs to the piece whose lo equals it.
Rational evaluate(const PiecewiseFn& f, const Rational& x);

/// The shift operator E^h: shift(f, h)(x) = f(x + h).
PiecewiseFn shift(const PiecewiseFn& f, const Rational& h);

PiecewiseFn add(const PiecewiseFn& f, const PiecewiseFn& g);
PiecewiseFn scale(const PiecewiseFn& f, const Rational& c);

/// Pointwise product; support is the intersection of supports.
PiecewiseFn multiply(const PiecewiseFn& f, const PiecewiseFn& g);

/// Pointwise k-th power, k >= 1.
PiecewiseFn power(const PiecewiseFn& f, unsigned long k);

/// Exact Lebesgue integral over R.
Rational integrate(const PiecewiseFn& f);

/// Exact convolution (f*g)(t) = integral of f(tau) g(t - tau) dtau, by
/// pairwise symbolic integration over piece pairs. Resulting degree is at
/// most deg f + deg g + 1.
PiecewiseFn convolve(const PiecewiseFn& f, const PiecewiseFn& g);

/// Exact integral of |f|^p for integer p >= 1. Linear pieces crossing zero
/// are split at their exact root; higher-degree pieces must be certifiably
/// sign-constant (all coefficients of one sign after recentering at an
/// endpoint), otherwise UnsupportedDegreeError.
Rational lp_norm_pow(const PiecewiseFn& f, unsigned long p);

/// (integral of f^p)^(1/p) for real p >= 1, evaluated with at least
/// precision_bits mantissa bits (relative error <= 2^(8 - precision_bits)).
/// Requires degree <= 1 and nonnegative pieces.
BigFloat lp_norm_real(const PiecewiseFn& f, double p, unsigned precision_bits);

/// Essential sup of |f|, exact; requires degree <= 1 on all pieces.
Rational linf_norm(const PiecewiseFn& f);

} // namespace fncalc
