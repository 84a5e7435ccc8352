#pragma once

#include <vector>

#include "fncalc/piecewise.hpp"

namespace fncalc {

/// The sequence member f_n with its cached closed form: value binom(n,i) on
/// the i-th unit interval of the support [-(n+1)/2, (n+1)/2]. Note that for
/// odd n the two central values tie, so the canonical PiecewiseFn merges
/// them into one piece of width 2.
struct BinomFn {
  int n = 0;
  PiecewiseFn fn;
};

/// f_0 = indicator([-1/2,1/2)); f_{k+1} = shift(f_k,1/2) + shift(f_k,-1/2).
PiecewiseFn build_recursive(int n);

/// Direct construction: sum of binom(n,i) * indicator(I_{n,i}).
BinomFn build_closed(int n);

/// I_{n,i} = [-(n+1)/2 + i, -(n+1)/2 + i + 1), 0 <= i <= n.
Interval unit_interval(int n, int i);
/// J_{n,i} = [-(n+1)/2 + i/2, -(n+1)/2 + (i+1)/2), 0 <= i <= 2n+1.
Interval half_interval(int n, int i);

/// [-(n+1)/2, (n+1)/2] (endpoints of the closed support hull).
Interval support(int n);

/// The n+2 points i - (n+1)/2, i = 0..n+1. For odd n the central point is
/// listed although the two adjacent values tie there.
std::vector<Rational> jump_points(int n);

/// Sum of binom(n,i)^p over i; equals the exact integral of |f_n|^p.
Integer lp_norm_pow_formula(int n, unsigned long p);

/// binom(n, floor(n/2)) = ||f_n||_inf.
Integer linf_formula(int n);

/// binom(2n,n)/(n+1): the mean of f_n^2 over its support (Catalan numbers).
Rational mean_square(int n);

/// Closed form of the product f_n * f_m (requires n >= m; BadOrderError
/// otherwise). Unit-interval values for even n-m, half-unit values for odd.
PiecewiseFn product_closed_form(int m, int n);

/// integral of f_n f_m: binom(n+m,(n+m)/2) for even n-m,
/// binom(n+m+1,(n+m+1)/2)/2 for odd. Requires n >= m.
Rational product_integral_formula(int m, int n);

/// The triangle f_0 * f_0: (1+x) on [-1,0), (1-x) on [0,1).
PiecewiseFn hat();

/// Closed form of f_m * f_n (convolution): leading ramp (1+mu+x), middle
/// pieces beta_j + alpha_j (x+mu-j) on unit intervals, trailing (1+mu-x),
/// with mu = (m+n)/2, beta_j = binom(m+n,j), alpha_j = beta_{j+1} - beta_j.
struct ConvClosedForm {
  int m = 0, n = 0;
  Rational mu;
  PiecewiseFn fn;
};
ConvClosedForm conv_closed_form(int m, int n);

/// integral of |f_m * f_n|^r for integer r >= 1:
/// 2/(r+1) + sum over j of (beta_{j+1}^{r+1} - beta_j^{r+1}) /
/// ((r+1)(beta_{j+1} - beta_j)); for odd m+n the central summand (where the
/// denominator vanishes) is the constant beta_j^r.
Rational conv_lr_norm_pow_formula(int m, int n, unsigned long r);

/// Closed form of f_n + f_m (requires n >= m), per the parity of n-m.
PiecewiseFn sum_closed_form(int m, int n);

/// integral of |f_n + f_m|^p from the closed-form coefficients (n >= m,
/// integer p >= 1); equals lp_norm_pow(add(f_n, f_m), p).
Rational sum_lp_norm_pow_formula(int m, int n, unsigned long p);

/// Sum over k of binom(m,k) binom(n,r-k); equals binom(m+n,r).
Integer vandermonde_lhs(int m, int n, int r);

} // namespace fncalc
