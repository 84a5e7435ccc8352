#include <doctest.h>

#include "fncalc/binom_seq.hpp"
#include "fncalc/piecewise.hpp"

using namespace fncalc;

namespace {

Rational q(long num, long den = 1) {
  return Rational(Integer(num), Integer(den));
}

} // namespace

TEST_CASE("build_recursive first members") {
  const PiecewiseFn f1 = build_recursive(1);
  CHECK(evaluate(f1, q(-1, 2)) == q(1));
  CHECK(evaluate(f1, q(1, 2)) == q(1));
  CHECK(f1 == indicator(Interval(q(-1), q(1))));
  CHECK(build_recursive(0) == indicator(Interval(q(-1, 2), q(1, 2))));
  const PiecewiseFn f3 = build_recursive(3);
  CHECK(evaluate(f3, q(-3, 2)) == q(1));
  CHECK(evaluate(f3, q(-1, 2)) == q(3));
  CHECK(evaluate(f3, q(1, 2)) == q(3));
  CHECK(evaluate(f3, q(3, 2)) == q(1));
}

TEST_CASE("build_closed structure") {
  const BinomFn f2 = build_closed(2);
  REQUIRE(f2.fn.pieces().size() == 3);
  CHECK(f2.fn.pieces()[0].interval == Interval(q(-3, 2), q(-1, 2)));
  CHECK(f2.fn.pieces()[0].poly == Poly({q(1)}));
  CHECK(f2.fn.pieces()[1].poly == Poly({q(2)}));
  CHECK(f2.fn.pieces()[2].poly == Poly({q(1)}));
  CHECK(build_closed(0).fn == build_recursive(0));
  CHECK(linf_norm(build_closed(6).fn) == q(20)); // peak of row 6
}

TEST_CASE("construction equivalence up to 32") {
  for (int n = 0; n <= 32; ++n) CHECK(build_recursive(n) == build_closed(n).fn);
}

TEST_CASE("unit and half intervals") {
  CHECK(unit_interval(2, 0) == Interval(q(-3, 2), q(-1, 2)));
  CHECK(half_interval(4, 0).lo == q(-5, 2));
  CHECK(half_interval(4, 0).width() == q(1, 2));
  // the middle m+1 unit intervals of f_n tile supp(f_m) when n-m is even
  for (int m = 0; m <= 6; ++m)
    for (int n = m; n <= 10; n += 2)
      for (int i = 0; i <= m; ++i)
        CHECK(unit_interval(n, (n - m) / 2 + i) == unit_interval(m, i));
  CHECK_THROWS_AS(unit_interval(2, 3), IndexOutOfRangeError);
  CHECK_THROWS_AS(unit_interval(2, -1), IndexOutOfRangeError);
  CHECK_THROWS_AS(half_interval(2, 6), IndexOutOfRangeError);
}

TEST_CASE("support") {
  CHECK(support(3) == Interval(q(-2), q(2)));
  CHECK(support(0) == Interval(q(-1, 2), q(1, 2)));
  for (int n = 0; n <= 20; ++n) CHECK(support(n).width() == q(n + 1));
}

TEST_CASE("jump points") {
  CHECK(jump_points(2) == std::vector<Rational>({q(-3, 2), q(-1, 2), q(1, 2), q(3, 2)}));
  CHECK(jump_points(0) == std::vector<Rational>({q(-1, 2), q(1, 2)}));
  for (int n = 0; n <= 20; ++n) CHECK(jump_points(n).size() == static_cast<std::size_t>(n + 2));
}

TEST_CASE("norm formulas") {
  CHECK(lp_norm_pow_formula(3, 1) == 8);
  CHECK(lp_norm_pow_formula(3, 2) == 20);
  CHECK(lp_norm_pow_formula(2, 3) == 10); // 1 + 8 + 1
  CHECK(linf_formula(4) == 6);
  CHECK(linf_formula(5) == 10);
  CHECK(linf_formula(0) == 1);
  for (int n = 0; n <= 20; ++n) {
    CHECK(lp_norm_pow_formula(n, 1) == two_pow(n));
    CHECK(lp_norm_pow_formula(n, 2) == binomial(2 * n, n));
  }
}

TEST_CASE("norm agreement between engine and formulas") {
  for (int n = 0; n <= 20; ++n) {
    const PiecewiseFn fn = build_closed(n).fn;
    for (unsigned long p = 1; p <= 4; ++p)
      CHECK(lp_norm_pow(fn, p) == Rational(lp_norm_pow_formula(n, p)));
    CHECK(linf_norm(fn) == Rational(linf_formula(n)));
  }
}

TEST_CASE("mean square is the Catalan sequence") {
  CHECK(mean_square(3) == q(5));
  CHECK(mean_square(0) == q(1));
  CHECK(mean_square(4) == q(14));
  const long expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) CHECK(mean_square(n) == q(expected[n]));
}

TEST_CASE("product closed form") {
  const PiecewiseFn p22 = product_closed_form(2, 2);
  CHECK(evaluate(p22, q(-1)) == q(1));
  CHECK(evaluate(p22, q(0)) == q(4));
  CHECK(evaluate(p22, q(1)) == q(1));
  // odd case lands on half-unit intervals: values 1,2,2,1
  const PiecewiseFn p12 = product_closed_form(1, 2);
  CHECK(evaluate(p12, q(-7, 8)) == q(1));
  CHECK(evaluate(p12, q(-1, 4)) == q(2));
  CHECK(evaluate(p12, q(1, 4)) == q(2));
  CHECK(evaluate(p12, q(7, 8)) == q(1));
  CHECK(product_closed_form(0, 0) == build_closed(0).fn);
  CHECK_THROWS_AS(product_closed_form(3, 1), BadOrderError);
}

TEST_CASE("product integral formula") {
  CHECK(product_integral_formula(1, 3) == q(6));
  CHECK(product_integral_formula(1, 2) == q(3));
  for (int n = 0; n <= 12; ++n)
    CHECK(product_integral_formula(n, n) == Rational(binomial(2 * n, n)));
  CHECK_THROWS_AS(product_integral_formula(2, 1), BadOrderError);
}

TEST_CASE("product agreement with the engine") {
  for (int m = 0; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      const PiecewiseFn prod = multiply(build_closed(n).fn, build_closed(m).fn);
      CHECK(prod == product_closed_form(m, n));
      CHECK(integrate(prod) == product_integral_formula(m, n));
    }
  }
}

TEST_CASE("hat") {
  const PiecewiseFn h = hat();
  CHECK(evaluate(h, q(0)) == q(1));
  CHECK(evaluate(h, q(1)) == q(0));
  CHECK(evaluate(h, q(-1)) == q(0));
  CHECK(h == convolve(build_closed(0).fn, build_closed(0).fn));
}

TEST_CASE("convolution closed form") {
  CHECK(conv_closed_form(0, 0).fn == hat());
  CHECK(evaluate(conv_closed_form(1, 1).fn, q(0)) == q(2));
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      CHECK(integrate(conv_closed_form(m, n).fn) == Rational(two_pow(m + n)));
  CHECK(conv_closed_form(2, 3).mu == q(5, 2));
}

TEST_CASE("convolution agreement with the engine") {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const PiecewiseFn conv = convolve(build_closed(m).fn, build_closed(n).fn);
      CHECK(conv == conv_closed_form(m, n).fn);
      for (unsigned long r = 1; r <= 3; ++r)
        CHECK(lp_norm_pow(conv, r) == conv_lr_norm_pow_formula(m, n, r));
      CHECK(linf_norm(conv) == Rational(linf_formula(m + n)));
    }
  }
}

TEST_CASE("convolution L^r closed form") {
  CHECK(conv_lr_norm_pow_formula(1, 1, 1) == q(4));
  CHECK(conv_lr_norm_pow_formula(0, 0, 2) == q(2, 3));
  CHECK(conv_lr_norm_pow_formula(0, 1, 1) == q(2));
  // mass of the convolution is the product of masses, any parity
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n)
      CHECK(conv_lr_norm_pow_formula(m, n, 1) == Rational(two_pow(m + n)));
}

TEST_CASE("sum closed form") {
  const PiecewiseFn s02 = sum_closed_form(0, 2);
  CHECK(evaluate(s02, q(-1)) == q(1));
  CHECK(evaluate(s02, q(0)) == q(3));
  CHECK(evaluate(s02, q(1)) == q(1));
  for (int m = 0; m <= 6; ++m) CHECK(sum_closed_form(m, m) == scale(build_closed(m).fn, q(2)));
  // half-unit values 1,2,3,3,2,1 for (1,2)
  const PiecewiseFn s12 = sum_closed_form(1, 2);
  CHECK(evaluate(s12, q(-5, 4)) == q(1));
  CHECK(evaluate(s12, q(-3, 4)) == q(2));
  CHECK(evaluate(s12, q(-1, 4)) == q(3));
  CHECK(evaluate(s12, q(1, 4)) == q(3));
  CHECK(evaluate(s12, q(3, 4)) == q(2));
  CHECK(evaluate(s12, q(5, 4)) == q(1));
  CHECK_THROWS_AS(sum_closed_form(1, 0), BadOrderError);
}

TEST_CASE("sum agreement with the engine") {
  for (int m = 0; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      const PiecewiseFn sum = add(build_closed(n).fn, build_closed(m).fn);
      CHECK(sum == sum_closed_form(m, n));
      for (unsigned long p = 1; p <= 3; ++p)
        CHECK(lp_norm_pow(sum, p) == sum_lp_norm_pow_formula(m, n, p));
    }
  }
}

TEST_CASE("sum L^p closed form spot values") {
  // ||f_0 + f_2||_1 = 5 with equality decomposition 2 + 3
  CHECK(sum_lp_norm_pow_formula(0, 2, 1) == q(5));
  // masses always add
  for (int m = 0; m <= 10; ++m)
    for (int n = m; n <= 10; ++n)
      CHECK(sum_lp_norm_pow_formula(m, n, 1) == Rational(two_pow(m) + two_pow(n)));
  CHECK_THROWS_AS(sum_lp_norm_pow_formula(2, 0, 1), BadOrderError);
}

TEST_CASE("vandermonde") {
  CHECK(vandermonde_lhs(2, 2, 2) == 6);
  CHECK(vandermonde_lhs(5, 7, 0) == 1);
  CHECK(vandermonde_lhs(3, 0, 2) == 3);
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n)
      for (int r = 0; r <= m + n; ++r) CHECK(vandermonde_lhs(m, n, r) == binomial(m + n, r));
}

TEST_CASE("evenness and nonnegativity") {
  for (int n = 0; n <= 16; ++n) {
    const PiecewiseFn fn = build_closed(n).fn;
    for (const auto& piece : fn.pieces()) {
      CHECK(piece.poly.degree() == 0);
      CHECK(piece.poly.coeff(0).sign() > 0);
    }
    for (long num = -35; num <= 35; num += 2) {
      const Rational x(Integer(num), Integer(4)); // odd quarters are never breakpoints
      CHECK(evaluate(fn, x) == evaluate(fn, -x));
    }
  }
}

TEST_CASE("central argmax") {
  for (int n = 0; n <= 64; ++n) {
    std::vector<int> argmax;
    Integer best = -1;
    for (int i = 0; i <= n; ++i) {
      const Integer v = binomial(n, i);
      if (v > best) {
        best = v;
        argmax.assign(1, i);
      } else if (v == best) {
        argmax.push_back(i);
      }
    }
    if (n % 2 == 0) {
      CHECK(argmax == std::vector<int>{n / 2});
    } else {
      CHECK(argmax == std::vector<int>({(n - 1) / 2, (n + 1) / 2}));
    }
    CHECK(best == linf_formula(n));
  }
}
