#include "fncalc/binom_seq.hpp"

#include <string>

#include "fncalc/errors.hpp"

namespace fncalc {

namespace {

void require_nonneg(int n, const char* what) {
  if (n < 0) throw Error(std::string(what) + ": n must be nonnegative");
}

Rational half(long num) {
  return Rational(Integer(num), Integer(2));
}

// left endpoint of the support of f_n
Rational support_lo(int n) {
  return half(-(static_cast<long>(n) + 1));
}

} // namespace

PiecewiseFn build_recursive(int n) {
  require_nonneg(n, "build_recursive");
  PiecewiseFn f = indicator(Interval(half(-1), half(1)));
  const Rational h = half(1);
  for (int k = 0; k < n; ++k) f = add(shift(f, h), shift(f, -h));
  return f;
}

BinomFn build_closed(int n) {
  require_nonneg(n, "build_closed");
  std::vector<Piece> pieces;
  pieces.reserve(n + 1);
  for (int i = 0; i <= n; ++i)
    pieces.push_back(Piece{unit_interval(n, i), Poly::constant(Rational(binomial(n, i)))});
  return BinomFn{n, PiecewiseFn::from_pieces(std::move(pieces))};
}

Interval unit_interval(int n, int i) {
  require_nonneg(n, "unit_interval");
  if (i < 0 || i > n)
    throw IndexOutOfRangeError("unit_interval: i=" + std::to_string(i) + " out of range for n=" +
                               std::to_string(n));
  const Rational lo = support_lo(n) + Rational(i);
  return Interval(lo, lo + Rational(1));
}

Interval half_interval(int n, int i) {
  require_nonneg(n, "half_interval");
  if (i < 0 || i > 2 * n + 1)
    throw IndexOutOfRangeError("half_interval: i=" + std::to_string(i) + " out of range for n=" +
                               std::to_string(n));
  const Rational lo = support_lo(n) + Rational(Integer(i), Integer(2));
  return Interval(lo, lo + half(1));
}

Interval support(int n) {
  require_nonneg(n, "support");
  return Interval(support_lo(n), -support_lo(n));
}

std::vector<Rational> jump_points(int n) {
  require_nonneg(n, "jump_points");
  std::vector<Rational> pts;
  pts.reserve(n + 2);
  for (int i = 0; i <= n + 1; ++i) pts.push_back(Rational(i) + support_lo(n));
  return pts;
}

Integer lp_norm_pow_formula(int n, unsigned long p) {
  require_nonneg(n, "lp_norm_pow_formula");
  Integer total = 0;
  for (int i = 0; i <= n; ++i) total += int_pow(binomial(n, i), p);
  return total;
}

Integer linf_formula(int n) {
  require_nonneg(n, "linf_formula");
  return binomial(n, n / 2);
}

Rational mean_square(int n) {
  require_nonneg(n, "mean_square");
  return catalan(n);
}

PiecewiseFn product_closed_form(int m, int n) {
  require_nonneg(m, "product_closed_form");
  if (n < m) throw BadOrderError("product_closed_form: requires n >= m");
  std::vector<Piece> pieces;
  if ((n - m) % 2 == 0) {
    // unit-interval values binom(m,i) * binom(n, (n-m)/2 + i) on I_{m,i}
    const int offset = (n - m) / 2;
    for (int i = 0; i <= m; ++i)
      pieces.push_back(Piece{unit_interval(m, i),
                             Poly::constant(Rational(binomial(m, i) * binomial(n, offset + i)))});
  } else {
    // half-unit values: binom(m,j) binom(n,(n-m+2j-1)/2) on J_{m,2j} and
    // binom(m,j) binom(n,(n-m+2j+1)/2) on J_{m,2j+1}
    for (int j = 0; j <= m; ++j) {
      const Integer bm = binomial(m, j);
      pieces.push_back(Piece{half_interval(m, 2 * j),
                             Poly::constant(Rational(bm * binomial(n, (n - m + 2 * j - 1) / 2)))});
      pieces.push_back(Piece{half_interval(m, 2 * j + 1),
                             Poly::constant(Rational(bm * binomial(n, (n - m + 2 * j + 1) / 2)))});
    }
  }
  return PiecewiseFn::from_pieces(std::move(pieces));
}

Rational product_integral_formula(int m, int n) {
  require_nonneg(m, "product_integral_formula");
  if (n < m) throw BadOrderError("product_integral_formula: requires n >= m");
  if ((n - m) % 2 == 0) return Rational(binomial(n + m, (n + m) / 2));
  return Rational(binomial(n + m + 1, (n + m + 1) / 2), Integer(2));
}

PiecewiseFn hat() {
  return PiecewiseFn::from_pieces(
      {Piece{Interval(Rational(-1), Rational(0)), Poly({Rational(1), Rational(1)})},
       Piece{Interval(Rational(0), Rational(1)), Poly({Rational(1), Rational(-1)})}});
}

ConvClosedForm conv_closed_form(int m, int n) {
  require_nonneg(m, "conv_closed_form");
  require_nonneg(n, "conv_closed_form");
  const int s = m + n;
  const Rational mu = Rational(Integer(s), Integer(2));
  std::vector<Piece> pieces;
  pieces.reserve(s + 2);
  // leading ramp (1 + mu + x) on [-mu-1, -mu)
  pieces.push_back(
      Piece{Interval(-mu - Rational(1), -mu), Poly({Rational(1) + mu, Rational(1)})});
  for (int j = 0; j < s; ++j) {
    const Rational beta(binomial(s, j));
    const Rational alpha = Rational(binomial(s, j + 1)) - beta;
    // beta_j + alpha_j (x + mu - j) on J_j = [-mu+j, -mu+j+1)
    const Rational lo = -mu + Rational(j);
    pieces.push_back(
        Piece{Interval(lo, lo + Rational(1)), Poly({beta + alpha * (mu - Rational(j)), alpha})});
  }
  // trailing ramp (1 + mu - x) on [mu, mu+1)
  pieces.push_back(Piece{Interval(mu, mu + Rational(1)), Poly({Rational(1) + mu, Rational(-1)})});
  return ConvClosedForm{m, n, mu, PiecewiseFn::from_pieces(std::move(pieces))};
}

Rational conv_lr_norm_pow_formula(int m, int n, unsigned long r) {
  require_nonneg(m, "conv_lr_norm_pow_formula");
  require_nonneg(n, "conv_lr_norm_pow_formula");
  if (r == 0) throw Error("conv_lr_norm_pow_formula: r must be >= 1");
  const int s = m + n;
  Rational total(Integer(2), Integer(r + 1));
  for (int j = 0; j < s; ++j) {
    if (s % 2 == 1 && j == (s - 1) / 2) {
      // beta_{j+1} = beta_j here; the summand degenerates to the constant
      // beta_j^r over the unit interval
      total += Rational(int_pow(binomial(s, j), r));
      continue;
    }
    const Integer bj = binomial(s, j);
    const Integer bj1 = binomial(s, j + 1);
    total += Rational(int_pow(bj1, r + 1) - int_pow(bj, r + 1),
                      Integer(r + 1) * (bj1 - bj));
  }
  return total;
}

PiecewiseFn sum_closed_form(int m, int n) {
  require_nonneg(m, "sum_closed_form");
  if (n < m) throw BadOrderError("sum_closed_form: requires n >= m");
  std::vector<Piece> pieces;
  const auto unit_val = [&](int nn, int i, const Integer& v) {
    pieces.push_back(Piece{unit_interval(nn, i), Poly::constant(Rational(v))});
  };
  const auto half_val = [&](int nn, int i, const Integer& v) {
    pieces.push_back(Piece{half_interval(nn, i), Poly::constant(Rational(v))});
  };
  if ((n - m) % 2 == 0) {
    // flanks of f_n alone, middle unit intervals carry both
    for (int i = 0; i <= (n - m - 2) / 2 && n > m; ++i) {
      unit_val(n, i, binomial(n, i));
      unit_val(n, (n + m + 2) / 2 + i, binomial(n, (n + m + 2) / 2 + i));
    }
    for (int i = 0; i <= m; ++i)
      unit_val(m, i, binomial(m, i) + binomial(n, (n - m) / 2 + i));
  } else if (n == m + 1) {
    half_val(n, 0, 1);
    for (int j = 0; j <= m; ++j) {
      half_val(m, 2 * j, binomial(m, j) + binomial(n, j));
      half_val(m, 2 * j + 1, binomial(m, j) + binomial(n, j + 1));
    }
    half_val(n, 2 * n + 1, 1);
  } else {
    // n - m odd, >= 3: full flank units, one half-unit shoulder per side,
    // then the shared half-unit middle
    for (int i = 0; i <= (n - m - 3) / 2; ++i) {
      unit_val(n, i, binomial(n, i));
      unit_val(n, (m + n + 3) / 2 + i, binomial(n, (m + n + 3) / 2 + i));
    }
    half_val(n, n - m - 1, binomial(n, (n - m - 1) / 2));
    half_val(n, n + m + 2, binomial(n, (n + m + 1) / 2));
    for (int j = 0; j <= m; ++j) {
      half_val(m, 2 * j, binomial(m, j) + binomial(n, (n - m + 2 * j - 1) / 2));
      half_val(m, 2 * j + 1, binomial(m, j) + binomial(n, (n - m + 2 * j + 1) / 2));
    }
  }
  return PiecewiseFn::from_pieces(std::move(pieces));
}

Rational sum_lp_norm_pow_formula(int m, int n, unsigned long p) {
  require_nonneg(m, "sum_lp_norm_pow_formula");
  if (n < m) throw BadOrderError("sum_lp_norm_pow_formula: requires n >= m");
  if (p == 0) throw Error("sum_lp_norm_pow_formula: p must be >= 1");
  Rational total;
  const Rational one_half(Integer(1), Integer(2));
  if ((n - m) % 2 == 0) {
    for (int i = 0; i <= (n - m - 2) / 2 && n > m; ++i)
      total += Rational(2 * int_pow(binomial(n, i), p));
    for (int i = 0; i <= m; ++i)
      total += Rational(int_pow(binomial(m, i) + binomial(n, (n - m) / 2 + i), p));
  } else if (n == m + 1) {
    total += Rational(1);
    for (int j = 0; j <= m; ++j) {
      const Integer bm = binomial(m, j);
      total += one_half * Rational(int_pow(bm + binomial(n, j), p) +
                                   int_pow(bm + binomial(n, j + 1), p));
    }
  } else {
    for (int i = 0; i <= (n - m - 3) / 2; ++i)
      total += Rational(2 * int_pow(binomial(n, i), p));
    total += Rational(int_pow(binomial(n, (n - m - 1) / 2), p));
    for (int j = 0; j <= m; ++j) {
      const Integer bm = binomial(m, j);
      total += one_half * Rational(int_pow(bm + binomial(n, (n - m + 2 * j - 1) / 2), p) +
                                   int_pow(bm + binomial(n, (n - m + 2 * j + 1) / 2), p));
    }
  }
  return total;
}

Integer vandermonde_lhs(int m, int n, int r) {
  require_nonneg(m, "vandermonde_lhs");
  require_nonneg(n, "vandermonde_lhs");
  require_nonneg(r, "vandermonde_lhs");
  Integer total = 0;
  for (int k = 0; k <= r; ++k) total += binomial(m, k) * binomial(n, r - k);
  return total;
}

} // namespace fncalc
