#include "fncalc/poly.hpp"

namespace fncalc {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::operator-() const {
  std::vector<Rational> out(c_);
  for (auto& v : out) v = -v;
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& s) const {
  std::vector<Rational> out(c_);
  for (auto& v : out) v *= s;
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned long k) const {
  Poly r = Poly::constant(1);
  Poly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Poly Poly::compose_linear(const Rational& a0, const Rational& a1) const {
  // Horner in the inner polynomial a0 + a1*x.
  const Poly inner({a0, a1});
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Poly::constant(*it);
  return r;
}

Poly Poly::antiderivative() const {
  std::vector<Rational> out(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) out[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
  return Poly(std::move(out));
}

Rational Poly::integral(const Rational& lo, const Rational& hi) const {
  const Poly f = antiderivative();
  return f.eval(hi) - f.eval(lo);
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& v = c_[k];
    if (v.is_zero()) continue;
    const Rational mag = v.abs();
    if (out.empty()) {
      if (v.sign() < 0) out += '-';
    } else {
      out += v.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += '*';
      out += 'x';
      if (k > 1) out += '^' + std::to_string(k);
    }
  }
  return out;
}

} // namespace fncalc
