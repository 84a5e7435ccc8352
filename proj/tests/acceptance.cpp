// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fncalc/binom_seq.hpp"
#include "fncalc/json_io.hpp"
#include "fncalc/piecewise.hpp"
#include "fncalc/verify.hpp"

using namespace fncalc;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FNCALC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult res;
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool criterion_closed_form_equivalence(std::string& detail) {
  for (int n = 0; n <= 32; ++n) {
    if (!(build_recursive(n) == build_closed(n).fn)) {
      detail = "mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool criterion_norms(std::string& detail) {
  for (int n = 0; n <= 20; ++n) {
    const PiecewiseFn fn = build_closed(n).fn;
    if (lp_norm_pow(fn, 1) != Rational(two_pow(n)) ||
        lp_norm_pow(fn, 2) != Rational(binomial(2 * n, n)) ||
        linf_norm(fn) != Rational(binomial(n, n / 2))) {
      detail = "norm mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool criterion_catalan(std::string& detail) {
  const long expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) {
    if (mean_square(n) != Rational(expected[n])) {
      detail = "mean_square(" + std::to_string(n) + ") != " + std::to_string(expected[n]);
      return false;
    }
  }
  return true;
}

bool criterion_product_integrals(std::string& detail) {
  for (int m = 0; m <= 16; ++m) {
    for (int n = m; n <= 16; ++n) {
      const Rational got = integrate(multiply(build_closed(n).fn, build_closed(m).fn));
      const Rational want = (n - m) % 2 == 0
                                ? Rational(binomial(n + m, (n + m) / 2))
                                : Rational(binomial(n + m + 1, (n + m + 1) / 2), Integer(2));
      if (got != want) {
        detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + got.str() +
                 " != " + want.str();
        return false;
      }
    }
  }
  return true;
}

bool criterion_convolution(std::string& detail) {
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const PiecewiseFn conv = convolve(build_closed(m).fn, build_closed(n).fn);
      const auto tag = [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); };
      if (!(conv == conv_closed_form(m, n).fn)) {
        detail = "structural mismatch at " + tag();
        return false;
      }
      if (integrate(conv) != Rational(two_pow(m + n))) {
        detail = "mass mismatch at " + tag();
        return false;
      }
      for (unsigned long r = 1; r <= 3; ++r) {
        if (lp_norm_pow(conv, r) != conv_lr_norm_pow_formula(m, n, r)) {
          detail = "L^" + std::to_string(r) + " mismatch at " + tag();
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_vandermonde(std::string& detail) {
  for (int m = 0; m <= 20; ++m) {
    for (int n = 0; n <= 20; ++n) {
      for (int r = 0; r <= m + n; ++r) {
        if (vandermonde_lhs(m, n, r) != binomial(m + n, r)) {
          detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                   " r=" + std::to_string(r);
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_inequality_suites(std::string& detail) {
  GridConfig cfg; // max 16, p and r {1,2,3}, 256 bits
  const VerificationReport rep = run_all(cfg);
  const Counts c = rep.counts();
  if (c.fail != 0) {
    detail = std::to_string(c.fail) + " failing records";
    return false;
  }
  // the three equality families must report equality at every grid cell
  std::size_t schwarz = 0, young_unity = 0, minkowski_p1 = 0;
  for (const auto& r : rep.records) {
    const auto param = [&](const char* key) -> std::string {
      for (const auto& [k, v] : r.params)
        if (k == key) return v;
      return {};
    };
    if (r.suite == "holder" && param("p") == "2" && param("m") == param("n")) {
      if (r.status != "equality-achieved") {
        detail = "Schwarz cell m=n=" + param("m") + " not equality";
        return false;
      }
      ++schwarz;
    }
    if (r.suite == "young" && param("check") == "inequality" && param("r") == "1" &&
        param("p") == "1" && param("q") == "1") {
      if (r.status != "equality-achieved") {
        detail = "Young unity cell (" + param("m") + "," + param("n") + ") not equality";
        return false;
      }
      ++young_unity;
    }
    if (r.suite == "minkowski" && param("check") == "inequality" && param("p") == "1") {
      if (r.status != "equality-achieved") {
        detail = "Minkowski p=1 cell (" + param("m") + "," + param("n") + ") not equality";
        return false;
      }
      ++minkowski_p1;
    }
  }
  if (schwarz != 17 || young_unity != 17 * 17 || minkowski_p1 != 17 * 17) {
    detail = "equality family coverage: schwarz=" + std::to_string(schwarz) +
             " young=" + std::to_string(young_unity) +
             " minkowski=" + std::to_string(minkowski_p1);
    return false;
  }
  return true;
}

bool criterion_real_exponents(std::string& detail) {
  // Hoelder and Young float paths over the full grid (superset of 20 random
  // pairs) must decide cleanly
  GridConfig cfg;
  cfg.p_list = {Exponent::of(Rational(Integer(3), Integer(2))), Exponent::of(3),
                Exponent::of(Rational(Integer(7), Integer(2)))};
  const VerificationReport holder = check_holder(cfg);
  if (!holder.all_pass()) {
    detail = "holder float cells failed";
    return false;
  }
  GridConfig ycfg = cfg;
  ycfg.r_list = {Exponent::of(2), Exponent::of(3)};
  const VerificationReport young = check_young(ycfg);
  if (!young.all_pass()) {
    detail = "young float cells failed";
    return false;
  }
  bool saw_float = false;
  for (const auto& r : young.records) saw_float = saw_float || r.mode == "highprec";
  if (!saw_float) {
    detail = "no high-precision young cells exercised";
    return false;
  }
  // p=2 overlap: the float kernel must agree with the exact squared compare
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> idx(0, 16);
  for (int it = 0; it < 20; ++it) {
    const int m = idx(rng);
    const int n = idx(rng);
    const Rational lhs = product_integral_formula(std::min(m, n), std::max(m, n));
    const Rational rhs_sq = Rational(binomial(2 * m, m) * binomial(2 * n, n));
    const RootCmp f =
        compare_root_sums(lhs * lhs, Rational(2), {{rhs_sq, Rational(2)}}, 256);
    const RootCmp e = lhs * lhs == rhs_sq
                          ? RootCmp::EqualWithin
                          : (lhs * lhs < rhs_sq ? RootCmp::StrictlyLess
                                                : RootCmp::StrictlyGreater);
    if (f != e) {
      detail = "float/exact disagreement at m=" + std::to_string(m) +
               " n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool criterion_round_trip(std::string& detail) {
  for (int n = 0; n <= 20; ++n) {
    const PiecewiseFn fn = build_closed(n).fn;
    const std::string bytes = to_json(fn);
    if (!(from_json(bytes) == fn) || to_json(from_json(bytes)) != bytes) {
      detail = "round trip failed at n=" + std::to_string(n);
      return false;
    }
  }
  const PiecewiseFn conv = convolve(build_closed(3).fn, build_closed(4).fn);
  const std::string bytes = to_json(conv);
  if (!(from_json(bytes) == conv) || to_json(from_json(bytes)) != bytes) {
    detail = "round trip failed for convolve(f_3, f_4)";
    return false;
  }
  return true;
}

bool criterion_cli(std::string& detail) {
  const RunResult fn2 = run_cli("fn --n 2 --json");
  if (fn2.exit_code != 0 ||
      fn2.out != "{\"pieces\":[{\"lo\":\"-3/2\",\"hi\":\"-1/2\",\"coeffs\":[\"1\"]},"
                 "{\"lo\":\"-1/2\",\"hi\":\"1/2\",\"coeffs\":[\"2\"]},"
                 "{\"lo\":\"1/2\",\"hi\":\"3/2\",\"coeffs\":[\"1\"]}]}\n") {
    detail = "fn --n 2 --json mismatch";
    return false;
  }
  const RunResult prod = run_cli("prodint --m 1 --n 2");
  if (prod.exit_code != 0 || prod.out != "3\n") {
    detail = "prodint --m 1 --n 2 mismatch";
    return false;
  }
  const RunResult verify = run_cli("verify --suite all --max-n 12");
  if (verify.exit_code != 0) {
    detail = "verify --suite all --max-n 12 exited " + std::to_string(verify.exit_code);
    return false;
  }
  const RunResult fault =
      run_cli("verify --suite vandermonde --max-m 2 --max-n 2 --inject-fault");
  if (fault.exit_code != 1) {
    detail = "injected-failure run exited " + std::to_string(fault.exit_code) + ", want 1";
    return false;
  }
  const RunResult usage = run_cli("fn");
  if (usage.exit_code != 2) {
    detail = "usage error exited " + std::to_string(usage.exit_code) + ", want 2";
    return false;
  }
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds; // < 0 means no stated limit
  std::function<bool(std::string&)> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form equivalence n<=32", 1.0, criterion_closed_form_equivalence},
      {2, "L^1/L^2/L^inf norms n<=20", 1.0, criterion_norms},
      {3, "Catalan mean squares n<=6", -1.0, criterion_catalan},
      {4, "product integrals m<=n<=16", 10.0, criterion_product_integrals},
      {5, "convolution closed forms m,n<=10", 30.0, criterion_convolution},
      {6, "Vandermonde grid m,n<=20", 5.0, criterion_vandermonde},
      {7, "inequality suites max 16", 60.0, criterion_inequality_suites},
      {8, "real-exponent comparisons", 10.0, criterion_real_exponents},
      {9, "JSON round trips", -1.0, criterion_round_trip},
      {10, "CLI golden invocations", -1.0, criterion_cli},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      ok = false;
      detail = "exceeded " + std::to_string(c.limit_seconds) + " s budget";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
