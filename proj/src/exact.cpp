#include "fncalc/exact.hpp"

#include <cctype>

namespace fncalc {

Integer int_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer two_pow(unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
  return r;
}

Rational::Rational(Integer num, Integer den) {
  if (sgn(den) == 0) throw Error("rational: zero denominator");
  v_ = mpq_class(std::move(num), std::move(den));
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_), Rational::raw_tag{});
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(unsigned long k) const {
  return Rational(int_pow(num(), k), int_pow(den(), k));
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

Rational Rational::parse(std::string_view s) {
  const auto fail = [&](const char* why) -> Rational {
    throw ParseError(std::string("bad rational \"") + std::string(s) + "\": " + why);
  };
  if (s.empty()) return fail("empty string");
  std::size_t i = 0;
  const auto read_integer = [&](const char* part) {
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    const std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_start) fail(part);
    Integer v(std::string(s.substr(digits_start, i - digits_start)), 10);
    return neg ? Integer(-v) : v;
  };
  Integer num = read_integer("missing numerator digits");
  Integer den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (i < s.size() && s[i] == '-') fail("sign belongs on the numerator");
    den = read_integer("missing denominator digits");
    if (sgn(den) == 0) fail("zero denominator");
  }
  if (i != s.size()) fail("trailing characters");
  return Rational(std::move(num), std::move(den));
}

std::string decimal_str(const Rational& x, std::size_t places) {
  const bool neg = x.sign() < 0;
  const Integer n = neg ? Integer(-x.num()) : x.num();
  const Integer d = x.den();
  const Integer scale = int_pow(Integer(10), places);
  // round(n*scale/d) half away from zero = floor((2*n*scale + d) / (2*d))
  Integer q;
  {
    const Integer top = 2 * n * scale + d;
    const Integer bot = 2 * d;
    mpz_fdiv_q(q.get_mpz_t(), top.get_mpz_t(), bot.get_mpz_t());
  }
  std::string digits = q.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string whole = digits.substr(0, digits.size() - places);
  std::string frac = places ? digits.substr(digits.size() - places) : std::string();
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out;
  if (neg && (whole != "0" || !frac.empty())) out += '-';
  out += whole;
  if (!frac.empty()) {
    out += '.';
    out += frac;
  }
  return out;
}

Integer binomial(unsigned long n, unsigned long i) {
  if (i > n) return 0;
  if (n - i < i) i = n - i;
  Integer r = 1;
  for (unsigned long k = 1; k <= i; ++k) {
    r *= Integer(n - i + k);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), k);
  }
  return r;
}

std::vector<Integer> pascal_row(unsigned long n) {
  std::vector<Integer> row;
  row.reserve(n + 1);
  Integer c = 1;
  row.push_back(c);
  for (unsigned long i = 0; i < n; ++i) {
    c *= Integer(n - i);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i + 1);
    row.push_back(c);
  }
  return row;
}

Rational catalan(unsigned long n) {
  return Rational(binomial(2 * n, n), Integer(n + 1));
}

} // namespace fncalc
