#include "fncalc/piecewise.hpp"

#include <algorithm>

#include "fncalc/bigfloat.hpp"
#include "fncalc/errors.hpp"

namespace fncalc {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw Error("interval: requires lo < hi, got [" + lo.str() + ", " + hi.str() + ")");
}

std::string Interval::str() const {
  return "[" + lo.str() + ", " + hi.str() + ")";
}

PiecewiseFn PiecewiseFn::from_pieces(std::vector<Piece> pieces) {
  std::erase_if(pieces, [](const Piece& p) { return p.poly.is_zero(); });
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.interval.lo < b.interval.lo; });
  std::vector<Piece> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!out.empty()) {
      Piece& prev = out.back();
      if (p.interval.lo < prev.interval.hi)
        throw Error("piecewise: overlapping pieces at " + p.interval.str());
      if (prev.interval.hi == p.interval.lo && prev.poly == p.poly) {
        prev.interval.hi = p.interval.hi;
        continue;
      }
    }
    out.push_back(std::move(p));
  }
  return PiecewiseFn(std::move(out));
}

std::optional<Interval> PiecewiseFn::support() const {
  if (pieces_.empty()) return std::nullopt;
  return Interval(pieces_.front().interval.lo, pieces_.back().interval.hi);
}

int PiecewiseFn::max_degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.poly.degree());
  return d;
}

PiecewiseFn indicator(const Interval& iv) {
  return PiecewiseFn::from_pieces({Piece{iv, Poly::constant(1)}});
}

Rational evaluate(const PiecewiseFn& f, const Rational& x) {
  const auto& ps = f.pieces();
  // last piece with lo <= x
  auto it = std::upper_bound(ps.begin(), ps.end(), x, [](const Rational& v, const Piece& p) {
    return v < p.interval.lo;
  });
  if (it == ps.begin()) return Rational();
  --it;
  if (x < it->interval.hi) return it->poly.eval(x);
  return Rational();
}

PiecewiseFn shift(const PiecewiseFn& f, const Rational& h) {
  std::vector<Piece> out;
  out.reserve(f.pieces().size());
  for (const auto& p : f.pieces())
    out.push_back(Piece{Interval(p.interval.lo - h, p.interval.hi - h), p.poly.compose_linear(h, Rational(1))});
  return PiecewiseFn::from_pieces(std::move(out));
}

PiecewiseFn add(const PiecewiseFn& f, const PiecewiseFn& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  std::vector<Rational> cuts;
  cuts.reserve(2 * (f.pieces().size() + g.pieces().size()));
  for (const auto& p : f.pieces()) {
    cuts.push_back(p.interval.lo);
    cuts.push_back(p.interval.hi);
  }
  for (const auto& p : g.pieces()) {
    cuts.push_back(p.interval.lo);
    cuts.push_back(p.interval.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Every cell [cuts[k], cuts[k+1]) lies fully inside or outside each piece.
  std::vector<Piece> out;
  std::size_t fi = 0, gi = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational& u = cuts[k];
    const Rational& v = cuts[k + 1];
    while (fi < f.pieces().size() && !(u < f.pieces()[fi].interval.hi)) ++fi;
    while (gi < g.pieces().size() && !(u < g.pieces()[gi].interval.hi)) ++gi;
    const Poly* pf =
        (fi < f.pieces().size() && !(u < f.pieces()[fi].interval.lo)) ? &f.pieces()[fi].poly : nullptr;
    const Poly* pg =
        (gi < g.pieces().size() && !(u < g.pieces()[gi].interval.lo)) ? &g.pieces()[gi].poly : nullptr;
    if (!pf && !pg) continue;
    Poly sum = pf && pg ? *pf + *pg : (pf ? *pf : *pg);
    if (!sum.is_zero()) out.push_back(Piece{Interval(u, v), std::move(sum)});
  }
  return PiecewiseFn::from_pieces(std::move(out));
}

PiecewiseFn scale(const PiecewiseFn& f, const Rational& c) {
  std::vector<Piece> out;
  out.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) out.push_back(Piece{p.interval, p.poly.scaled(c)});
  return PiecewiseFn::from_pieces(std::move(out));
}

PiecewiseFn multiply(const PiecewiseFn& f, const PiecewiseFn& g) {
  std::vector<Piece> out;
  std::size_t i = 0, j = 0;
  while (i < f.pieces().size() && j < g.pieces().size()) {
    const Piece& a = f.pieces()[i];
    const Piece& b = g.pieces()[j];
    const Rational lo = max(a.interval.lo, b.interval.lo);
    const Rational hi = min(a.interval.hi, b.interval.hi);
    if (lo < hi) out.push_back(Piece{Interval(lo, hi), a.poly * b.poly});
    if (a.interval.hi < b.interval.hi) {
      ++i;
    } else if (b.interval.hi < a.interval.hi) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return PiecewiseFn::from_pieces(std::move(out));
}

PiecewiseFn power(const PiecewiseFn& f, unsigned long k) {
  if (k == 0) throw Error("power: k must be >= 1");
  std::vector<Piece> out;
  out.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) out.push_back(Piece{p.interval, p.poly.pow(k)});
  return PiecewiseFn::from_pieces(std::move(out));
}

Rational integrate(const PiecewiseFn& f) {
  Rational total;
  for (const auto& p : f.pieces()) total += p.poly.integral(p.interval.lo, p.interval.hi);
  return total;
}

namespace {

// I(t) = integral of p(tau) q(t - tau) dtau between lower(t) and upper(t),
// where lower/upper are degree-<=1 polynomials in t. tau-coefficients are
// themselves polynomials in t.
Poly convolve_segment(const Poly& p, const Poly& q, const Poly& lower, const Poly& upper) {
  const auto& pc = p.coeffs();
  const auto& qc = q.coeffs();
  // integrand[l] = coefficient of tau^l, as a polynomial in t
  std::vector<Poly> integrand(pc.size() + qc.size());
  for (std::size_t j = 0; j < qc.size(); ++j) {
    // q_j (t - tau)^j = q_j sum_l binom(j,l) (-1)^l t^(j-l) tau^l
    for (std::size_t l = 0; l <= j; ++l) {
      Rational coef = Rational(binomial(j, l)) * qc[j];
      if (l & 1) coef = -coef;
      std::vector<Rational> tpow(j - l + 1);
      tpow[j - l] = coef;
      const Poly term{std::vector<Rational>(std::move(tpow))};
      for (std::size_t i = 0; i < pc.size(); ++i)
        integrand[i + l] = integrand[i + l] + term.scaled(pc[i]);
    }
  }
  // antiderivative in tau, then evaluate at the two limits via Horner
  const auto eval_at = [&](const Poly& g) {
    Poly r;
    for (std::size_t k = integrand.size(); k-- > 0;)
      r = r * g + integrand[k].scaled(Rational(1) / Rational(static_cast<long>(k + 1)));
    return r * g; // antiderivative has constant term 0
  };
  return eval_at(upper) - eval_at(lower);
}

} // namespace

PiecewiseFn convolve(const PiecewiseFn& f, const PiecewiseFn& g) {
  PiecewiseFn out;
  for (const auto& a : f.pieces()) {
    for (const auto& b : g.pieces()) {
      // piece p on [s,t), piece q on [u,v): support of the contribution is
      // (s+u, t+v) with interior breakpoints s+v and t+u.
      const Rational& s = a.interval.lo;
      const Rational& t = a.interval.hi;
      const Rational& u = b.interval.lo;
      const Rational& v = b.interval.hi;
      const Rational b0 = s + u;
      const Rational b1 = min(s + v, t + u);
      const Rational b2 = max(s + v, t + u);
      const Rational b3 = t + v;
      const Poly lim_lo_const = Poly::constant(s);              // tau = s
      const Poly lim_hi_const = Poly::constant(t);              // tau = t
      const Poly lim_lo_move({-v, Rational(1)});                // tau = x - v
      const Poly lim_hi_move({-u, Rational(1)});                // tau = x - u
      std::vector<Piece> contrib;
      if (b0 < b1) {
        Poly w = convolve_segment(a.poly, b.poly, lim_lo_const, lim_hi_move);
        if (!w.is_zero()) contrib.push_back(Piece{Interval(b0, b1), std::move(w)});
      }
      if (b1 < b2) {
        Poly w = (s + v) < (t + u)
                     ? convolve_segment(a.poly, b.poly, lim_lo_move, lim_hi_move)
                     : convolve_segment(a.poly, b.poly, lim_lo_const, lim_hi_const);
        if (!w.is_zero()) contrib.push_back(Piece{Interval(b1, b2), std::move(w)});
      }
      if (b2 < b3) {
        Poly w = convolve_segment(a.poly, b.poly, lim_lo_move, lim_hi_const);
        if (!w.is_zero()) contrib.push_back(Piece{Interval(b2, b3), std::move(w)});
      }
      out = add(out, PiecewiseFn::from_pieces(std::move(contrib)));
    }
  }
  return out;
}

namespace {

// +1 / -1 when the piece is certifiably sign-constant on [lo, hi), 0 when
// the certificate fails. Certificate: all coefficients one sign after
// recentering at either endpoint.
int certify_sign(const Poly& p, const Rational& lo, const Rational& hi) {
  const auto one_sided = [](const Poly& q) -> int {
    bool nonneg = true, nonpos = true;
    for (const auto& c : q.coeffs()) {
      if (c.sign() < 0) nonneg = false;
      if (c.sign() > 0) nonpos = false;
    }
    if (nonneg) return 1;
    if (nonpos) return -1;
    return 0;
  };
  if (int s = one_sided(p.compose_linear(lo, Rational(1)))) return s;       // p(lo + tau), tau >= 0
  if (int s = one_sided(p.compose_linear(hi, Rational(-1)))) return s;      // p(hi - tau), tau >= 0
  return 0;
}

} // namespace

Rational lp_norm_pow(const PiecewiseFn& f, unsigned long p) {
  if (p == 0) throw Error("lp_norm_pow: p must be >= 1");
  Rational total;
  for (const auto& piece : f.pieces()) {
    const Poly& q = piece.poly;
    const Rational& lo = piece.interval.lo;
    const Rational& hi = piece.interval.hi;
    const int deg = q.degree();
    if (deg == 0) {
      total += q.coeff(0).abs().pow(p) * (hi - lo);
      continue;
    }
    const auto accumulate = [&](const Rational& l, const Rational& h) {
      const Rational mid = (l + h) / Rational(2);
      const Poly signed_poly = q.eval(mid).sign() < 0 ? -q : q;
      total += signed_poly.pow(p).integral(l, h);
    };
    if (deg == 1) {
      const Rational root = -q.coeff(0) / q.coeff(1);
      if (lo < root && root < hi) {
        accumulate(lo, root);
        accumulate(root, hi);
      } else {
        accumulate(lo, hi);
      }
    } else {
      const int s = certify_sign(q, lo, hi);
      if (s == 0)
        throw UnsupportedDegreeError("lp_norm_pow: cannot certify sign of degree-" +
                                     std::to_string(deg) + " piece on " + piece.interval.str());
      const Poly signed_poly = s < 0 ? -q : q;
      total += signed_poly.pow(p).integral(lo, hi);
    }
  }
  return total;
}

Rational linf_norm(const PiecewiseFn& f) {
  Rational best;
  for (const auto& piece : f.pieces()) {
    if (piece.poly.degree() > 1)
      throw UnsupportedDegreeError("linf_norm: degree > 1 piece on " + piece.interval.str());
    best = max(best, piece.poly.eval(piece.interval.lo).abs());
    best = max(best, piece.poly.eval(piece.interval.hi).abs());
  }
  return best;
}

BigFloat lp_norm_real(const PiecewiseFn& f, double p, unsigned precision_bits) {
  if (!(p >= 1.0)) throw Error("lp_norm_real: p must be >= 1");
  if (precision_bits == 0) throw Error("lp_norm_real: precision_bits must be positive");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 32;
  if (f.is_zero()) return BigFloat::of(Rational(), precision_bits, MPFR_RNDN);

  const BigFloat pexp = BigFloat::of(p, prec);
  BigFloat pplus1(prec);
  mpfr_add_ui(pplus1.raw(), pexp.raw(), 1, MPFR_RNDN); // exact: p has 53 bits
  Enclosure total = Enclosure::zero(prec);
  for (const auto& piece : f.pieces()) {
    const Poly& q = piece.poly;
    if (q.degree() > 1)
      throw UnsupportedDegreeError("lp_norm_real: degree > 1 piece on " + piece.interval.str());
    const Rational vlo = q.eval(piece.interval.lo);
    const Rational vhi = q.eval(piece.interval.hi);
    if (vlo.sign() < 0 || vhi.sign() < 0)
      throw NegativePieceError("lp_norm_real: negative piece on " + piece.interval.str());
    const Rational slope = q.coeff(1);
    if (slope.is_zero()) {
      const Enclosure term = Enclosure::mul_nonneg(
          Enclosure::exact(q.coeff(0), prec).pow_exact_exponent(pexp),
          Enclosure::exact(piece.interval.width(), prec));
      total = total + term;
    } else {
      // ((v_hi)^(p+1) - (v_lo)^(p+1)) / (slope (p+1)), arranged nonnegative
      const Rational& top = slope.sign() > 0 ? vhi : vlo;
      const Rational& bot = slope.sign() > 0 ? vlo : vhi;
      const Enclosure numer = (Enclosure::exact(top, prec).pow_exact_exponent(pplus1) -
                               Enclosure::exact(bot, prec).pow_exact_exponent(pplus1))
                                  .clamp_nonneg();
      const Enclosure denom =
          Enclosure::mul_nonneg(Enclosure::exact(slope.abs(), prec), Enclosure::point(pplus1));
      total = total + Enclosure::div_nonneg(numer, denom);
    }
  }
  // total^(1/p): 1/p is generally inexact, use an exponent enclosure
  BigFloat elo(prec), ehi(prec);
  mpfr_ui_div(elo.raw(), 1, pexp.raw(), MPFR_RNDD);
  mpfr_ui_div(ehi.raw(), 1, pexp.raw(), MPFR_RNDU);
  const Enclosure result = total.clamp_nonneg().pow_exponent_range(elo, ehi);
  BigFloat mid(static_cast<mpfr_prec_t>(precision_bits));
  mpfr_add(mid.raw(), result.lo().raw(), result.hi().raw(), MPFR_RNDN);
  mpfr_div_ui(mid.raw(), mid.raw(), 2, MPFR_RNDN);
  return mid;
}

} // namespace fncalc
