#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fncalc/binom_seq.hpp"
#include "fncalc/json_io.hpp"
#include "fncalc/piecewise.hpp"
#include "fncalc/verify.hpp"

namespace {

using namespace fncalc;

void print_pieces(const std::string& name, const PiecewiseFn& f) {
  const auto sup = f.support();
  std::cout << name << ": " << f.pieces().size() << " pieces";
  if (sup) std::cout << ", support [" << sup->lo.str() << ", " << sup->hi.str() << "]";
  std::cout << "\n";
  for (const auto& p : f.pieces())
    std::cout << "  " << p.interval.str() << ": " << p.poly.str() << "\n";
}

std::string render_rational(const Rational& v, int decimal_places) {
  return decimal_places < 0 ? v.str() : decimal_str(v, static_cast<std::size_t>(decimal_places));
}

std::string render_pascal(int rows) {
  std::vector<std::string> lines;
  lines.reserve(rows);
  for (int n = 0; n < rows; ++n) {
    std::string line;
    for (const auto& v : pascal_row(n)) {
      if (!line.empty()) line += ' ';
      line += v.get_str();
    }
    lines.push_back(std::move(line));
  }
  const std::size_t width = lines.back().size();
  std::string out;
  for (auto& line : lines) {
    out.append((width - line.size()) / 2, ' ');
    out += line;
    out += '\n';
  }
  return out;
}

std::vector<Exponent> parse_exponent_list(const std::string& csv) {
  std::vector<Exponent> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string tok =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty()) throw ParseError("empty entry in exponent list \"" + csv + "\"");
    out.push_back(Exponent::parse(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_verify(const std::string& suite, const GridConfig& cfg, const std::string& out_path) {
  VerificationReport report;
  if (suite == "vandermonde")
    report = check_vandermonde(cfg);
  else if (suite == "holder")
    report = check_holder(cfg);
  else if (suite == "young")
    report = check_young(cfg);
  else if (suite == "minkowski")
    report = check_minkowski(cfg);
  else if (suite == "engine")
    report = check_engine_consistency(cfg);
  else
    report = run_all(cfg);

  std::map<std::string, Counts> by_suite;
  for (const auto& r : report.records) {
    Counts& c = by_suite[r.suite];
    if (r.status == "pass")
      ++c.pass;
    else if (r.status == "equality-achieved")
      ++c.equality;
    else
      ++c.fail;
  }
  for (const auto& [name, c] : by_suite)
    std::cout << name << ": " << c.total() << " checks, " << c.pass << " pass, " << c.equality
              << " equality, " << c.fail << " fail\n";
  const Counts total = report.counts();
  std::cout << "total: " << total.total() << " checks, " << total.pass << " pass, "
            << total.equality << " equality, " << total.fail << " fail\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + out_path);
    out << (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv"
                ? report_to_csv(report)
                : report_to_json(report));
    std::cout << "report written to " << out_path << "\n";
  }
  return total.fail == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus and verification for the binomial box-sum sequence"};
  app.require_subcommand(1);

  int fn_n = 0;
  bool fn_json = false;
  std::string fn_csv_step;
  int fn_decimal = 12;
  auto* fn_cmd = app.add_subcommand("fn", "emit f_N as pieces, JSON, or a CSV sample table");
  fn_cmd->add_option("--n", fn_n, "sequence index")->required()->check(CLI::NonNegativeNumber);
  auto* fn_json_opt = fn_cmd->add_flag("--json", fn_json, "emit the JSON encoding");
  fn_cmd->add_option("--csv", fn_csv_step, "emit a CSV sample table with this rational step")
      ->excludes(fn_json_opt);
  fn_cmd->add_option("--decimal", fn_decimal, "decimal places for CSV values")
      ->check(CLI::NonNegativeNumber);

  int eval_n = 0;
  std::string eval_x;
  int eval_decimal = -1;
  auto* eval_cmd = app.add_subcommand("eval", "print f_N(x)");
  eval_cmd->add_option("--n", eval_n, "sequence index")->required()->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--x", eval_x, "evaluation point as a rational p/q")->required();
  eval_cmd->add_option("--decimal", eval_decimal, "render with this many decimal places");

  int norm_n = 0;
  std::string norm_p;
  bool norm_pow = false;
  int norm_decimal = 12;
  auto* norm_cmd = app.add_subcommand("norm", "L^p norm of f_N (exact p-th power with --pow)");
  norm_cmd->add_option("--n", norm_n, "sequence index")->required()->check(CLI::NonNegativeNumber);
  norm_cmd->add_option("--p", norm_p, "integer p >= 1, or \"inf\"")->required();
  norm_cmd->add_flag("--pow", norm_pow, "print the exact integral of |f|^p instead of the norm");
  norm_cmd->add_option("--decimal", norm_decimal, "decimal places for irrational norms")
      ->check(CLI::PositiveNumber);

  int prod_m = 0, prod_n = 0;
  int prod_decimal = -1;
  auto* prod_cmd = app.add_subcommand("prodint", "exact integral of f_N f_M");
  prod_cmd->add_option("--m", prod_m, "first index")->required()->check(CLI::NonNegativeNumber);
  prod_cmd->add_option("--n", prod_n, "second index")->required()->check(CLI::NonNegativeNumber);
  prod_cmd->add_option("--decimal", prod_decimal, "render with this many decimal places");

  int conv_m = 0, conv_n = 0;
  bool conv_json = false;
  int conv_samples = 0;
  int conv_r = 0;
  int conv_decimal = 12;
  auto* conv_cmd = app.add_subcommand("conv", "convolution f_M * f_N");
  conv_cmd->add_option("--m", conv_m, "first index")->required()->check(CLI::NonNegativeNumber);
  conv_cmd->add_option("--n", conv_n, "second index")->required()->check(CLI::NonNegativeNumber);
  auto* conv_json_opt = conv_cmd->add_flag("--json", conv_json, "emit the JSON encoding");
  conv_cmd->add_option("--samples", conv_samples, "append a CSV table with K+1 uniform samples")
      ->check(CLI::PositiveNumber)
      ->excludes(conv_json_opt);
  conv_cmd->add_option("--r", conv_r, "also print the exact integral of |f_M*f_N|^r")
      ->check(CLI::PositiveNumber);
  conv_cmd->add_option("--decimal", conv_decimal, "decimal places for sample values")
      ->check(CLI::NonNegativeNumber);

  int pascal_rows = 0;
  auto* pascal_cmd = app.add_subcommand("pascal", "print the Pascal triangle");
  pascal_cmd->add_option("--rows", pascal_rows, "number of rows")
      ->required()
      ->check(CLI::PositiveNumber);

  std::string verify_suite = "all";
  GridConfig cfg;
  std::string verify_p, verify_r, verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", verify_suite, "suite to run")
      ->check(CLI::IsMember({"vandermonde", "holder", "young", "minkowski", "engine", "all"}));
  verify_cmd->add_option("--max-m", cfg.max_m, "grid bound for m")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-n", cfg.max_n, "grid bound for n")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--p", verify_p, "comma-separated p exponents (rationals or inf)");
  verify_cmd->add_option("--r", verify_r, "comma-separated r exponents (integers)");
  verify_cmd->add_option("--precision", cfg.precision_bits, "float-path precision in bits (>= 64)");
  verify_cmd->add_flag("--parallel", cfg.parallel, "evaluate grid cells concurrently");
  verify_cmd->add_option("--out", verify_out, "write the report to FILE.json (or FILE.csv)");
  verify_cmd->add_flag("--inject-fault", cfg.inject_fault, "perturb one formula (testing hook)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (app.got_subcommand(fn_cmd)) {
      const BinomFn f = build_closed(fn_n);
      if (fn_json)
        std::cout << to_json(f.fn) << "\n";
      else if (!fn_csv_step.empty())
        std::cout << sample_csv(f.fn, Rational::parse(fn_csv_step),
                                static_cast<std::size_t>(fn_decimal));
      else
        print_pieces("f_" + std::to_string(fn_n), f.fn);
    } else if (app.got_subcommand(eval_cmd)) {
      const Rational v = evaluate(build_closed(eval_n).fn, Rational::parse(eval_x));
      std::cout << render_rational(v, eval_decimal) << "\n";
    } else if (app.got_subcommand(norm_cmd)) {
      const BinomFn f = build_closed(norm_n);
      if (norm_p == "inf") {
        if (norm_pow) throw Error("norm: --pow does not combine with --p inf");
        std::cout << linf_norm(f.fn).str() << "\n";
      } else {
        long p = 0;
        try {
          std::size_t used = 0;
          p = std::stol(norm_p, &used);
          if (used != norm_p.size()) throw std::invalid_argument(norm_p);
        } catch (const std::exception&) {
          throw ParseError("norm: --p must be an integer >= 1 or \"inf\", got " + norm_p);
        }
        if (p < 1) throw ParseError("norm: --p must be an integer >= 1 or \"inf\"");
        const Rational pow_val = lp_norm_pow(f.fn, static_cast<unsigned long>(p));
        if (norm_pow || p == 1) {
          std::cout << pow_val.str() << "\n";
        } else {
          // print (integral)^(1/p) as a decimal
          const mpfr_prec_t prec = 128 + 8 * norm_decimal;
          const Enclosure root =
              Enclosure::exact(pow_val, prec).pow_rational(Rational(1) / Rational(p));
          BigFloat mid(prec);
          mpfr_add(mid.raw(), root.lo().raw(), root.hi().raw(), MPFR_RNDN);
          mpfr_div_ui(mid.raw(), mid.raw(), 2, MPFR_RNDN);
          char* buf = nullptr;
          mpfr_asprintf(&buf, "%.*Rf", norm_decimal, mid.raw());
          std::cout << buf << "\n";
          mpfr_free_str(buf);
        }
      }
    } else if (app.got_subcommand(prod_cmd)) {
      const int a = std::min(prod_m, prod_n);
      const int b = std::max(prod_m, prod_n);
      std::cout << render_rational(product_integral_formula(a, b), prod_decimal) << "\n";
    } else if (app.got_subcommand(conv_cmd)) {
      const ConvClosedForm form = conv_closed_form(conv_m, conv_n);
      if (conv_json) {
        std::cout << to_json(form.fn) << "\n";
      } else {
        print_pieces("f_" + std::to_string(conv_m) + " * f_" + std::to_string(conv_n), form.fn);
        if (conv_samples > 0) {
          const auto sup = form.fn.support();
          const Rational step = sup->width() / Rational(conv_samples);
          std::cout << sample_csv(form.fn, step, static_cast<std::size_t>(conv_decimal));
        }
      }
      if (conv_r > 0)
        std::cout << "lr_norm_pow(" << conv_r
                  << ") = " << conv_lr_norm_pow_formula(conv_m, conv_n,
                                                        static_cast<unsigned long>(conv_r))
                         .str()
                  << "\n";
    } else if (app.got_subcommand(pascal_cmd)) {
      std::cout << render_pascal(pascal_rows);
    } else if (app.got_subcommand(verify_cmd)) {
      if (!verify_p.empty()) cfg.p_list = parse_exponent_list(verify_p);
      if (!verify_r.empty()) cfg.r_list = parse_exponent_list(verify_r);
      cfg.validate();
      return run_verify(verify_suite, cfg, verify_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
