#include "fncalc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include <json.hpp>

#include "fncalc/binom_seq.hpp"
#include "fncalc/json_io.hpp"
#include "fncalc/piecewise.hpp"

namespace fncalc {

using ordered_json = nlohmann::ordered_json;

Exponent Exponent::of(Rational v) {
  if (v < Rational(1)) throw Error("exponent: must be >= 1, got " + v.str());
  return Exponent{false, std::move(v)};
}

Exponent Exponent::parse(std::string_view s) {
  if (s == "inf" || s == "Inf" || s == "INF") return inf();
  const Rational v = Rational::parse(s);
  if (v < Rational(1)) throw ParseError("exponent: must be >= 1 or \"inf\", got " + v.str());
  return Exponent{false, v};
}

namespace {

// 1/p, with 1/inf = 0
Rational reciprocal(const Exponent& p) {
  return p.infinite ? Rational() : Rational(1) / p.value;
}

} // namespace

Exponent holder_conjugate(const Exponent& p) {
  if (p.infinite) return Exponent::of(1);
  if (p.is_one()) return Exponent::inf();
  return Exponent::of(p.value / (p.value - Rational(1)));
}

std::optional<Exponent> young_conjugate(const Exponent& p, const Exponent& r) {
  const Rational inv = Rational(1) + reciprocal(r) - reciprocal(p);
  if (inv.sign() < 0 || Rational(1) < inv) return std::nullopt;
  if (inv.is_zero()) return Exponent::inf();
  return Exponent::of(Rational(1) / inv);
}

void require_young_triple(const Exponent& p, const Exponent& q, const Exponent& r) {
  if (reciprocal(r) != reciprocal(p) + reciprocal(q) - Rational(1))
    throw InvalidTripleError("young triple: 1/r = 1/p + 1/q - 1 fails for p=" + p.str() +
                             " q=" + q.str() + " r=" + r.str());
}

void GridConfig::validate() const {
  if (max_m < 0 || max_n < 0) throw Error("grid: max_m and max_n must be nonnegative");
  if (precision_bits < 64) throw Error("grid: precision_bits must be >= 64");
  if (p_list.empty() || r_list.empty()) throw Error("grid: p_list and r_list must be nonempty");
}

Counts VerificationReport::counts() const {
  Counts c;
  for (const auto& r : records) {
    if (r.status == "pass")
      ++c.pass;
    else if (r.status == "equality-achieved")
      ++c.equality;
    else
      ++c.fail;
  }
  return c;
}

bool VerificationReport::all_pass() const {
  return counts().fail == 0;
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string istr(long v) {
  return std::to_string(v);
}

CheckRecord exact_eq(std::string suite, Params params, const Rational& lhs, const Rational& rhs) {
  CheckRecord rec{std::move(suite), std::move(params), lhs.str(), rhs.str(), "=",
                  lhs == rhs ? "pass" : "fail", "exact"};
  return rec;
}

CheckRecord exact_le(std::string suite, Params params, const Rational& lhs, const Rational& rhs) {
  const char* status = lhs == rhs ? "equality-achieved" : (lhs < rhs ? "pass" : "fail");
  return CheckRecord{std::move(suite), std::move(params), lhs.str(), rhs.str(), "<=", status,
                     "exact"};
}

CheckRecord structural_eq(std::string suite, Params params, const PiecewiseFn& lhs,
                          const PiecewiseFn& rhs) {
  const bool ok = lhs == rhs;
  return CheckRecord{std::move(suite),
                     std::move(params),
                     ok ? "structurally-equal" : to_json(lhs),
                     ok ? "structurally-equal" : to_json(rhs),
                     "=",
                     ok ? "pass" : "fail",
                     "exact"};
}

CheckRecord from_cmp(std::string suite, Params params, std::string lhs, std::string rhs,
                     RootCmp c) {
  const char* status = c == RootCmp::StrictlyGreater
                           ? "fail"
                           : (c == RootCmp::EqualWithin ? "equality-achieved" : "pass");
  return CheckRecord{std::move(suite), std::move(params), std::move(lhs), std::move(rhs),
                     "<=", status, "highprec"};
}

CheckRecord error_record(std::string suite, Params params, const std::string& what) {
  return CheckRecord{std::move(suite), std::move(params), "error: " + what, "", "=",
                     "fail", "exact"};
}

bool value_less(const std::string& a, const std::string& b) {
  try {
    return Rational::parse(a) < Rational::parse(b);
  } catch (const ParseError&) {
    return a < b;
  }
}

bool value_eq(const std::string& a, const std::string& b) {
  try {
    return Rational::parse(a) == Rational::parse(b);
  } catch (const ParseError&) {
    return a == b;
  }
}

bool record_less(const CheckRecord& a, const CheckRecord& b) {
  if (a.suite != b.suite) return a.suite < b.suite;
  const std::size_t k = std::min(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a.params[i].first != b.params[i].first) return a.params[i].first < b.params[i].first;
    if (!value_eq(a.params[i].second, b.params[i].second))
      return value_less(a.params[i].second, b.params[i].second);
  }
  return a.params.size() < b.params.size();
}

using Cell = std::function<std::vector<CheckRecord>()>;

std::vector<CheckRecord> run_cells(std::vector<Cell> cells, bool parallel) {
  std::vector<std::vector<CheckRecord>> slots(cells.size());
  if (!parallel || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) slots[i] = cells[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 4;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) break;
          try {
            slots[i] = cells[i]();
          } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
        mpfr_free_cache(); // per-thread constant caches
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<CheckRecord> out;
  for (auto& s : slots) out.insert(out.end(), std::make_move_iterator(s.begin()),
                                   std::make_move_iterator(s.end()));
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

/// (sum_i binom(n,i)^p)^(1/p) as a directed enclosure, p finite rational.
Enclosure norm_enclosure(int n, const Rational& p, mpfr_prec_t prec) {
  Enclosure s = Enclosure::zero(prec);
  for (int i = 0; i <= n; ++i)
    s = s + Enclosure::exact(Rational(binomial(n, i)), prec).pow_rational(p);
  return s.pow_rational(Rational(1) / p);
}

std::string enclosure_mid_str(const Enclosure& e) {
  BigFloat mid(e.prec());
  mpfr_add(mid.raw(), e.lo().raw(), e.hi().raw(), MPFR_RNDN);
  mpfr_div_ui(mid.raw(), mid.raw(), 2, MPFR_RNDN);
  return mid.str(40);
}

} // namespace

VerificationReport check_vandermonde(const GridConfig& cfg) {
  cfg.validate();
  std::vector<Cell> cells;
  for (int m = 0; m <= cfg.max_m; ++m) {
    for (int n = 0; n <= cfg.max_n; ++n) {
      cells.push_back([m, n, &cfg] {
        std::vector<CheckRecord> recs;
        for (int r = 0; r <= m + n; ++r) {
          Rational rhs{binomial(m + n, r)};
          if (cfg.inject_fault) rhs += Rational(1);
          recs.push_back(exact_eq("vandermonde",
                                  {{"m", istr(m)}, {"n", istr(n)}, {"r", istr(r)}},
                                  Rational(vandermonde_lhs(m, n, r)), rhs));
        }
        return recs;
      });
    }
  }
  return VerificationReport{cfg, run_cells(std::move(cells), cfg.parallel)};
}

VerificationReport check_holder(const GridConfig& cfg) {
  cfg.validate();
  std::vector<Cell> cells;
  for (int m = 0; m <= cfg.max_m; ++m) {
    for (int n = 0; n <= cfg.max_n; ++n) {
      cells.push_back([m, n, &cfg] {
        std::vector<CheckRecord> recs;
        const Rational lhs = product_integral_formula(std::min(m, n), std::max(m, n));
        for (const auto& p : cfg.p_list) {
          const Exponent q = holder_conjugate(p);
          Params params{{"m", istr(m)}, {"n", istr(n)}, {"p", p.str()}, {"q", q.str()}};
          if (p.is_one()) {
            recs.push_back(exact_le("holder", std::move(params), lhs,
                                    Rational(two_pow(m) * linf_formula(n))));
          } else if (p.infinite) {
            recs.push_back(exact_le("holder", std::move(params), lhs,
                                    Rational(linf_formula(m) * two_pow(n))));
          } else if (p.value == Rational(2)) {
            // both sides squared stay rational
            recs.push_back(exact_le("holder", std::move(params), lhs * lhs,
                                    Rational(binomial(2 * m, m) * binomial(2 * n, n))));
          } else {
            const Rational pv = p.value;
            const Rational qv = q.value;
            const auto compute = [&](mpfr_prec_t prec) {
              return std::make_pair(Enclosure::exact(lhs, prec),
                                    Enclosure::mul_nonneg(norm_enclosure(m, pv, prec),
                                                          norm_enclosure(n, qv, prec)));
            };
            try {
              const RootCmp c = decide_enclosures(compute, cfg.precision_bits);
              const auto [le, re] = compute(cfg.precision_bits + 32);
              recs.push_back(from_cmp("holder", std::move(params), enclosure_mid_str(le),
                                      enclosure_mid_str(re), c));
            } catch (const Error& e) {
              recs.push_back(error_record("holder", std::move(params), e.what()));
            }
          }
        }
        return recs;
      });
    }
  }
  return VerificationReport{cfg, run_cells(std::move(cells), cfg.parallel)};
}

VerificationReport check_young(const GridConfig& cfg) {
  cfg.validate();
  std::vector<Cell> cells;
  for (int m = 0; m <= cfg.max_m; ++m) {
    for (int n = 0; n <= cfg.max_n; ++n) {
      cells.push_back([m, n, &cfg] {
        std::vector<CheckRecord> recs;
        const PiecewiseFn conv = convolve(build_closed(m).fn, build_closed(n).fn);

        // engine norm vs the closed-form L^r integral, exact
        for (const auto& r : cfg.r_list) {
          if (!r.is_integer()) continue;
          const unsigned long rv = r.value.num().get_ui();
          recs.push_back(exact_eq(
              "young",
              {{"check", "conv-norm-agreement"}, {"m", istr(m)}, {"n", istr(n)}, {"r", r.str()}},
              lp_norm_pow(conv, rv), conv_lr_norm_pow_formula(m, n, rv)));
        }

        // ||f_m * f_n||_r <= ||f_n||_p ||f_m||_q for every valid triple
        for (const auto& r : cfg.r_list) {
          if (r.infinite || !r.is_integer()) continue; // closed form needs integer r
          for (const auto& p : cfg.p_list) {
            if (p.infinite) continue;
            const auto q = young_conjugate(p, r);
            if (!q) continue;
            require_young_triple(p, *q, r);
            Params params{{"check", "inequality"}, {"m", istr(m)}, {"n", istr(n)},
                          {"r", r.str()},          {"p", p.str()}, {"q", q->str()}};
            const Rational lhs_pow = conv_lr_norm_pow_formula(m, n, r.value.num().get_ui());
            if (p.is_integer() && (q->is_integer() || q->infinite)) {
              if (q->infinite) {
                // q = inf forces p = 1, r = 1 is then the only integer case
                recs.push_back(error_record("young", std::move(params),
                                            "unexpected infinite conjugate"));
                continue;
              }
              // raise both sides to the power r*p*q to stay rational
              const unsigned long rv = r.value.num().get_ui();
              const unsigned long pv = p.value.num().get_ui();
              const unsigned long qv = q->value.num().get_ui();
              const Rational lhs = lhs_pow.pow(pv * qv);
              const Rational rhs =
                  Rational(int_pow(lp_norm_pow_formula(n, pv), rv * qv) *
                           int_pow(lp_norm_pow_formula(m, qv), rv * pv));
              recs.push_back(exact_le("young", std::move(params), lhs, rhs));
            } else {
              const Rational rinv = Rational(1) / r.value;
              const Rational pv = p.value;
              const Rational qv = q->value;
              const auto compute = [&](mpfr_prec_t prec) {
                return std::make_pair(
                    Enclosure::exact(lhs_pow, prec).pow_rational(rinv),
                    Enclosure::mul_nonneg(norm_enclosure(n, pv, prec),
                                          norm_enclosure(m, qv, prec)));
              };
              try {
                const RootCmp c = decide_enclosures(compute, cfg.precision_bits);
                const auto [le, re] = compute(cfg.precision_bits + 32);
                recs.push_back(from_cmp("young", std::move(params), enclosure_mid_str(le),
                                        enclosure_mid_str(re), c));
              } catch (const Error& e) {
                recs.push_back(error_record("young", std::move(params), e.what()));
              }
            }
          }
        }

        // L^inf variants (r = p = inf, q = 1), all exact integers
        recs.push_back(exact_le("young",
                                {{"check", "linf"}, {"m", istr(m)}, {"n", istr(n)}},
                                Rational(linf_formula(m + n)),
                                Rational(two_pow(m) * linf_formula(n))));
        if (m % 2 == n % 2) {
          const Integer lhs = binomial(m + n, (m + n) / 2);
          const Integer rhs = (m % 2 ? binomial(m, (m - 1) / 2) : binomial(m, m / 2)) * two_pow(n);
          recs.push_back(exact_le(
              "young", {{"check", "linf-parity"}, {"m", istr(m)}, {"n", istr(n)}},
              Rational(lhs), Rational(rhs)));
        }
        return recs;
      });
    }
  }
  // central-binomial corollary, per n
  for (int n = 1; n <= cfg.max_n; ++n) {
    cells.push_back([n] {
      const Integer rhs = (n % 2 ? binomial(n, (n - 1) / 2) : binomial(n, n / 2)) * two_pow(n);
      return std::vector<CheckRecord>{exact_le("young",
                                               {{"check", "linf-central"}, {"n", istr(n)}},
                                               Rational(binomial(2 * n, n)), Rational(rhs))};
    });
  }
  return VerificationReport{cfg, run_cells(std::move(cells), cfg.parallel)};
}

VerificationReport check_minkowski(const GridConfig& cfg) {
  cfg.validate();
  std::vector<Cell> cells;
  for (int m = 0; m <= cfg.max_m; ++m) {
    for (int n = 0; n <= cfg.max_n; ++n) {
      cells.push_back([m, n, &cfg] {
        std::vector<CheckRecord> recs;
        const int a = std::min(m, n);
        const int b = std::max(m, n);
        const PiecewiseFn sum = add(build_closed(b).fn, build_closed(a).fn);
        for (const auto& p : cfg.p_list) {
          if (p.infinite || !p.is_integer()) continue;
          const unsigned long pv = p.value.num().get_ui();
          const Rational lhs_pow = sum_lp_norm_pow_formula(a, b, pv);
          recs.push_back(exact_eq(
              "minkowski",
              {{"check", "lhs-two-routes"}, {"m", istr(m)}, {"n", istr(n)}, {"p", p.str()}},
              lhs_pow, lp_norm_pow(sum, pv)));
          Params params{{"check", "inequality"}, {"m", istr(m)}, {"n", istr(n)}, {"p", p.str()}};
          if (pv == 1) {
            recs.push_back(exact_le("minkowski", std::move(params), lhs_pow,
                                    Rational(two_pow(n) + two_pow(m))));
          } else {
            const Rational sn{lp_norm_pow_formula(n, pv)};
            const Rational sm{lp_norm_pow_formula(m, pv)};
            const Rational pr{Integer(pv)};
            try {
              const RootCmp c =
                  compare_root_sums(lhs_pow, pr, {{sn, pr}, {sm, pr}}, cfg.precision_bits);
              const auto render = [&](mpfr_prec_t prec) {
                const Enclosure le = Enclosure::exact(lhs_pow, prec).pow_rational(Rational(1) / pr);
                const Enclosure re = Enclosure::exact(sn, prec).pow_rational(Rational(1) / pr) +
                                     Enclosure::exact(sm, prec).pow_rational(Rational(1) / pr);
                return std::make_pair(enclosure_mid_str(le), enclosure_mid_str(re));
              };
              const auto [ls, rs] = render(cfg.precision_bits + 32);
              recs.push_back(from_cmp("minkowski", std::move(params), ls, rs, c));
            } catch (const Error& e) {
              recs.push_back(error_record("minkowski", std::move(params), e.what()));
            }
          }
        }
        return recs;
      });
    }
  }
  return VerificationReport{cfg, run_cells(std::move(cells), cfg.parallel)};
}

namespace {

// jump_points(n) minus the central tie for odd n: the points where the
// canonical form actually breaks
std::vector<Rational> true_breakpoints(int n) {
  std::vector<Rational> pts = jump_points(n);
  if (n % 2 == 1) {
    const Rational zero;
    std::erase_if(pts, [&](const Rational& x) { return x == zero; });
  }
  return pts;
}

std::vector<CheckRecord> engine_per_n(int n, const GridConfig&) {
  std::vector<CheckRecord> recs;
  const BinomFn closed = build_closed(n);
  const PiecewiseFn& fn = closed.fn;

  recs.push_back(structural_eq("engine", {{"check", "recursive-closed"}, {"n", istr(n)}},
                               build_recursive(n), fn));

  // values binom(n,i) on each unit interval, checked at midpoints
  {
    bool ok = true;
    std::string bad;
    for (int i = 0; i <= n && ok; ++i) {
      const Interval iv = unit_interval(n, i);
      const Rational mid = (iv.lo + iv.hi) / Rational(2);
      if (evaluate(fn, mid) != Rational(binomial(n, i))) {
        ok = false;
        bad = "i=" + istr(i);
      }
    }
    recs.push_back(CheckRecord{"engine",
                               {{"check", "unit-values"}, {"n", istr(n)}},
                               ok ? "values-match" : "mismatch at " + bad,
                               "values-match",
                               "=",
                               ok ? "pass" : "fail",
                               "exact"});
  }

  // evenness at 50 random rational points avoiding breakpoints
  {
    std::mt19937 rng(0xC0FFEE + static_cast<unsigned>(n));
    std::uniform_int_distribution<long> num_dist(-(2 * n + 4) * 8, (2 * n + 4) * 8);
    std::uniform_int_distribution<long> den_dist(1, 8);
    const std::vector<Rational> jumps = jump_points(n);
    const auto is_jump = [&](const Rational& x) {
      return std::find(jumps.begin(), jumps.end(), x) != jumps.end();
    };
    bool ok = true;
    Rational witness;
    int found = 0;
    while (found < 50) {
      const Rational x(Integer(num_dist(rng)), Integer(den_dist(rng)));
      if (is_jump(x) || is_jump(-x)) continue;
      ++found;
      if (evaluate(fn, x) != evaluate(fn, -x)) {
        ok = false;
        witness = x;
        break;
      }
    }
    Params params{{"check", "evenness"}, {"n", istr(n)}};
    if (!ok) params.emplace_back("x", witness.str());
    recs.push_back(CheckRecord{"engine", std::move(params),
                               ok ? "symmetric(50)" : evaluate(fn, witness).str(),
                               ok ? "symmetric(50)" : evaluate(fn, -witness).str(), "=",
                               ok ? "pass" : "fail", "exact"});
  }

  // nonnegative piece values
  {
    bool ok = true;
    for (const auto& piece : fn.pieces())
      ok = ok && piece.poly.degree() == 0 && piece.poly.coeff(0).sign() > 0;
    recs.push_back(CheckRecord{"engine",
                               {{"check", "nonneg"}, {"n", istr(n)}},
                               ok ? "constant-positive" : "violation",
                               "constant-positive",
                               "=",
                               ok ? "pass" : "fail",
                               "exact"});
  }

  // support hull and breakpoint structure
  {
    const Interval sup = support(n);
    bool ok = fn.support() && fn.support()->lo == sup.lo && fn.support()->hi == sup.hi;
    std::vector<Rational> actual;
    for (const auto& piece : fn.pieces()) {
      actual.push_back(piece.interval.lo);
      actual.push_back(piece.interval.hi);
    }
    std::sort(actual.begin(), actual.end());
    actual.erase(std::unique(actual.begin(), actual.end()), actual.end());
    ok = ok && actual == true_breakpoints(n);
    recs.push_back(CheckRecord{"engine",
                               {{"check", "support-jumps"}, {"n", istr(n)}},
                               ok ? "structure-matches" : "mismatch",
                               "structure-matches",
                               "=",
                               ok ? "pass" : "fail",
                               "exact"});
  }

  for (unsigned long p = 1; p <= 4; ++p)
    recs.push_back(exact_eq("engine",
                            {{"check", "norm-agreement"}, {"n", istr(n)}, {"p", istr(p)}},
                            lp_norm_pow(fn, p), Rational(lp_norm_pow_formula(n, p))));
  recs.push_back(exact_eq("engine", {{"check", "linf-agreement"}, {"n", istr(n)}},
                          linf_norm(fn), Rational(linf_formula(n))));
  recs.push_back(exact_eq("engine", {{"check", "mean-square"}, {"n", istr(n)}},
                          mean_square(n) * Rational(n + 1), Rational(binomial(2 * n, n))));
  if (n <= 6) {
    static const long kCatalan[] = {1, 1, 2, 5, 14, 42, 132};
    recs.push_back(exact_eq("engine", {{"check", "catalan-frozen"}, {"n", istr(n)}},
                            mean_square(n), Rational(kCatalan[n])));
  }
  return recs;
}

std::vector<CheckRecord> engine_product_sum(int m, int n) {
  // requires m <= n
  std::vector<CheckRecord> recs;
  const PiecewiseFn fm = build_closed(m).fn;
  const PiecewiseFn fn = build_closed(n).fn;
  const PiecewiseFn prod = multiply(fn, fm);
  recs.push_back(structural_eq("engine",
                               {{"check", "product-structural"}, {"m", istr(m)}, {"n", istr(n)}},
                               prod, product_closed_form(m, n)));
  recs.push_back(exact_eq("engine",
                          {{"check", "product-integral"}, {"m", istr(m)}, {"n", istr(n)}},
                          integrate(prod), product_integral_formula(m, n)));
  recs.push_back(structural_eq("engine",
                               {{"check", "sum-structural"}, {"m", istr(m)}, {"n", istr(n)}},
                               add(fn, fm), sum_closed_form(m, n)));
  return recs;
}

std::vector<CheckRecord> engine_convolution(int m, int n, const GridConfig& cfg) {
  std::vector<CheckRecord> recs;
  const PiecewiseFn conv = convolve(build_closed(m).fn, build_closed(n).fn);
  const ConvClosedForm form = conv_closed_form(m, n);
  recs.push_back(structural_eq("engine",
                               {{"check", "conv-structural"}, {"m", istr(m)}, {"n", istr(n)}},
                               conv, form.fn));
  recs.push_back(exact_eq("engine", {{"check", "conv-mass"}, {"m", istr(m)}, {"n", istr(n)}},
                          integrate(conv), Rational(two_pow(m + n))));
  for (const auto& r : cfg.r_list) {
    if (!r.is_integer()) continue;
    const unsigned long rv = r.value.num().get_ui();
    recs.push_back(exact_eq(
        "engine",
        {{"check", "conv-norm"}, {"m", istr(m)}, {"n", istr(n)}, {"r", r.str()}},
        lp_norm_pow(conv, rv), conv_lr_norm_pow_formula(m, n, rv)));
  }
  recs.push_back(exact_eq("engine", {{"check", "conv-linf"}, {"m", istr(m)}, {"n", istr(n)}},
                          linf_norm(conv), Rational(linf_formula(m + n))));
  return recs;
}

std::vector<CheckRecord> engine_argmax(int n) {
  std::vector<int> argmax;
  Integer best = -1;
  for (int i = 0; i <= n; ++i) {
    const Integer v = binomial(n, i);
    if (v > best) {
      best = v;
      argmax = {i};
    } else if (v == best) {
      argmax.push_back(i);
    }
  }
  std::vector<int> expected = n % 2 ? std::vector<int>{(n - 1) / 2, (n + 1) / 2}
                                    : std::vector<int>{n / 2};
  const auto render = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + istr(v[i]);
    return s + "}";
  };
  const bool ok = argmax == expected;
  return {CheckRecord{"engine",
                      {{"check", "central-argmax"}, {"n", istr(n)}},
                      render(argmax),
                      render(expected),
                      "=",
                      ok ? "pass" : "fail",
                      "exact"}};
}

} // namespace

VerificationReport check_engine_consistency(const GridConfig& cfg) {
  cfg.validate();
  std::vector<Cell> cells;
  for (int n = 0; n <= cfg.max_n; ++n)
    cells.push_back([n, &cfg] { return engine_per_n(n, cfg); });
  for (int m = 0; m <= std::min(cfg.max_m, cfg.max_n); ++m)
    for (int n = m; n <= cfg.max_n; ++n)
      cells.push_back([m, n] { return engine_product_sum(m, n); });
  for (int m = 0; m <= cfg.max_m; ++m)
    for (int n = 0; n <= cfg.max_n; ++n)
      cells.push_back([m, n, &cfg] { return engine_convolution(m, n, cfg); });
  for (int n = 0; n <= 64; ++n) cells.push_back([n] { return engine_argmax(n); });
  return VerificationReport{cfg, run_cells(std::move(cells), cfg.parallel)};
}

VerificationReport run_all(const GridConfig& cfg) {
  cfg.validate();
  VerificationReport report{cfg, {}};
  const std::vector<std::pair<std::string, VerificationReport (*)(const GridConfig&)>> suites = {
      {"engine", check_engine_consistency},
      {"holder", check_holder},
      {"minkowski", check_minkowski},
      {"vandermonde", check_vandermonde},
      {"young", check_young},
  };
  for (const auto& [name, fn] : suites) {
    try {
      VerificationReport part = fn(cfg);
      report.records.insert(report.records.end(),
                            std::make_move_iterator(part.records.begin()),
                            std::make_move_iterator(part.records.end()));
    } catch (const std::exception& e) {
      report.records.push_back(error_record(name, {{"check", "suite-error"}}, e.what()));
    }
  }
  std::sort(report.records.begin(), report.records.end(), record_less);
  return report;
}

namespace {

ordered_json config_json(const GridConfig& cfg) {
  ordered_json c;
  c["max_m"] = cfg.max_m;
  c["max_n"] = cfg.max_n;
  ordered_json pl = ordered_json::array();
  for (const auto& p : cfg.p_list) pl.push_back(p.str());
  c["p_list"] = std::move(pl);
  ordered_json rl = ordered_json::array();
  for (const auto& r : cfg.r_list) rl.push_back(r.str());
  c["r_list"] = std::move(rl);
  c["precision_bits"] = cfg.precision_bits;
  c["parallel"] = cfg.parallel;
  c["inject_fault"] = cfg.inject_fault;
  return c;
}

} // namespace

std::string report_to_json(const VerificationReport& report) {
  ordered_json doc;
  doc["config"] = config_json(report.config);
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rec;
    rec["suite"] = r.suite;
    ordered_json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    rec["params"] = std::move(params);
    rec["lhs"] = r.lhs;
    rec["rhs"] = r.rhs;
    rec["relation"] = r.relation;
    rec["status"] = r.status;
    rec["mode"] = r.mode;
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  const Counts c = report.counts();
  doc["counts"] = {{"pass", c.pass}, {"fail", c.fail}, {"equality", c.equality}};
  return doc.dump();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

} // namespace

std::string report_to_csv(const VerificationReport& report) {
  std::string out = "suite,params,lhs,rhs,relation,status,mode\n";
  for (const auto& r : report.records) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + '=' + v;
    }
    out += csv_escape(r.suite) + ',' + csv_escape(params) + ',' + csv_escape(r.lhs) + ',' +
           csv_escape(r.rhs) + ',' + csv_escape(r.relation) + ',' + csv_escape(r.status) + ',' +
           csv_escape(r.mode) + '\n';
  }
  return out;
}

} // namespace fncalc
