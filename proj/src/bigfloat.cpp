#include "fncalc/bigfloat.hpp"

#include <cstdlib>

#include "fncalc/errors.hpp"

namespace fncalc {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(v_);
}

BigFloat BigFloat::of(const Rational& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, x.raw().get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::of(double x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN); // exact whenever prec >= 53
  return r;
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Enclosure Enclosure::exact(const Rational& x, mpfr_prec_t prec) {
  return Enclosure(BigFloat::of(x, prec, MPFR_RNDD), BigFloat::of(x, prec, MPFR_RNDU));
}

Enclosure Enclosure::zero(mpfr_prec_t prec) {
  return Enclosure(BigFloat(prec), BigFloat(prec));
}

Enclosure Enclosure::point(const BigFloat& x) {
  return Enclosure(x, x);
}

Enclosure Enclosure::from_bounds(BigFloat lo, BigFloat hi) {
  if (mpfr_cmp(lo.raw(), hi.raw()) > 0) throw Error("enclosure: inverted bounds");
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  BigFloat lo(a.prec()), hi(a.prec());
  mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  BigFloat lo(a.prec()), hi(a.prec());
  mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::mul_nonneg(const Enclosure& a, const Enclosure& b) {
  if (!a.is_nonneg() || !b.is_nonneg()) throw Error("enclosure: mul_nonneg on signed value");
  BigFloat lo(a.prec()), hi(a.prec());
  mpfr_mul(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_mul(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::div_nonneg(const Enclosure& a, const Enclosure& b) {
  if (!a.is_nonneg() || mpfr_sgn(b.lo_.raw()) <= 0)
    throw Error("enclosure: div_nonneg needs a >= 0 and b > 0");
  BigFloat lo(a.prec()), hi(a.prec());
  mpfr_div(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_div(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::pow_int(unsigned long k) const {
  if (!is_nonneg()) throw Error("enclosure: pow_int on signed value");
  if (k == 0) throw Error("enclosure: pow_int needs k >= 1");
  BigFloat lo(prec()), hi(prec());
  mpfr_pow_ui(lo.raw(), lo_.raw(), k, MPFR_RNDD);
  mpfr_pow_ui(hi.raw(), hi_.raw(), k, MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::rootn(unsigned long k) const {
  if (!is_nonneg()) throw Error("enclosure: rootn on signed value");
  if (k == 0) throw Error("enclosure: rootn needs k >= 1");
  BigFloat lo(prec()), hi(prec());
  mpfr_rootn_ui(lo.raw(), lo_.raw(), k, MPFR_RNDD);
  mpfr_rootn_ui(hi.raw(), hi_.raw(), k, MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::pow_rational(const Rational& e) const {
  if (e.sign() <= 0) throw Error("enclosure: pow_rational needs a positive exponent");
  if (!e.num().fits_ulong_p() || !e.den().fits_ulong_p())
    throw Error("enclosure: exponent too large");
  return pow_int(e.num().get_ui()).rootn(e.den().get_ui());
}

Enclosure Enclosure::pow_exact_exponent(const BigFloat& e) const {
  if (!is_nonneg()) throw Error("enclosure: pow on signed value");
  BigFloat lo(prec()), hi(prec());
  mpfr_pow(lo.raw(), lo_.raw(), e.raw(), MPFR_RNDD);
  mpfr_pow(hi.raw(), hi_.raw(), e.raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::pow_exponent_range(const BigFloat& elo, const BigFloat& ehi) const {
  if (!is_nonneg()) throw Error("enclosure: pow on signed value");
  // x^e is increasing in e for x > 1 and decreasing for x < 1, so pick the
  // exponent endpoint per base endpoint.
  const bool lo_below_one = mpfr_cmp_ui(lo_.raw(), 1) < 0;
  const bool hi_below_one = mpfr_cmp_ui(hi_.raw(), 1) < 0;
  BigFloat lo(prec()), hi(prec());
  mpfr_pow(lo.raw(), lo_.raw(), (lo_below_one ? ehi : elo).raw(), MPFR_RNDD);
  mpfr_pow(hi.raw(), hi_.raw(), (hi_below_one ? elo : ehi).raw(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure Enclosure::clamp_nonneg() const {
  if (is_nonneg()) return *this;
  if (mpfr_sgn(hi_.raw()) < 0) throw Error("enclosure: clamp_nonneg on a negative value");
  BigFloat lo(prec());
  return Enclosure(std::move(lo), hi_);
}

RootCmp decide_enclosures(
    const std::function<std::pair<Enclosure, Enclosure>(mpfr_prec_t)>& compute,
    unsigned precision_bits) {
  // The equality band is fixed by the caller's precision; refinement only
  // tightens the enclosures.
  BigFloat band(64);
  mpfr_set_ui_2exp(band.raw(), 1, -static_cast<mpfr_exp_t>(precision_bits / 2), MPFR_RNDN);
  BigFloat neg_band(64);
  mpfr_neg(neg_band.raw(), band.raw(), MPFR_RNDN);

  for (int attempt = 0; attempt < 2; ++attempt) {
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(precision_bits) * (attempt + 1) + 32;
    const auto [lhs, rhs] = compute(prec);
    const Enclosure diff = lhs - rhs;
    const bool in_band = mpfr_cmp(diff.lo().raw(), neg_band.raw()) >= 0 &&
                         mpfr_cmp(diff.hi().raw(), band.raw()) <= 0;
    if (in_band) return RootCmp::EqualWithin;
    if (diff.hi().sign() < 0) return RootCmp::StrictlyLess;
    if (diff.lo().sign() > 0) return RootCmp::StrictlyGreater;
  }
  throw PrecisionExhaustedError("comparison undecided at " + std::to_string(precision_bits) +
                                " bits after one refinement");
}

RootCmp compare_root_sums(const Rational& lhs_pow, const Rational& p_lhs,
                          const std::vector<std::pair<Rational, Rational>>& rhs_terms,
                          unsigned precision_bits) {
  if (lhs_pow.sign() < 0) throw Error("compare_root_sums: negative lhs base");
  for (const auto& [base, _] : rhs_terms)
    if (base.sign() < 0) throw Error("compare_root_sums: negative rhs base");
  const auto compute = [&](mpfr_prec_t prec) {
    Enclosure lhs = Enclosure::exact(lhs_pow, prec).pow_rational(Rational(1) / p_lhs);
    Enclosure rhs = Enclosure::zero(prec);
    for (const auto& [base, p] : rhs_terms)
      rhs = rhs + Enclosure::exact(base, prec).pow_rational(Rational(1) / p);
    return std::make_pair(std::move(lhs), std::move(rhs));
  };
  return decide_enclosures(compute, precision_bits);
}

} // namespace fncalc
