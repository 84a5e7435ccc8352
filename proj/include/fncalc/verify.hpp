#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fncalc/bigfloat.hpp"
#include "fncalc/exact.hpp"

namespace fncalc {

/// A norm exponent in [1, inf].
struct Exponent {
  bool infinite = false;
  Rational value{1}; // meaningful when !infinite

  static Exponent inf() { return Exponent{true, Rational(1)}; }
  static Exponent of(Rational v);
  static Exponent of(long v) { return of(Rational(v)); }
  /// "inf" or a rational >= 1; throws ParseError.
  static Exponent parse(std::string_view s);

  bool is_one() const { return !infinite && value == Rational(1); }
  bool is_integer() const { return !infinite && value.is_integer(); }
  std::string str() const { return infinite ? "inf" : value.str(); }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// Conjugate q with 1/p + 1/q = 1 (p=1 -> inf, inf -> 1).
Exponent holder_conjugate(const Exponent& p);

/// Solves 1/r = 1/p + 1/q - 1 for q; nullopt when no q in [1, inf] exists.
std::optional<Exponent> young_conjugate(const Exponent& p, const Exponent& r);

/// Throws InvalidTripleError unless 1/r = 1/p + 1/q - 1.
void require_young_triple(const Exponent& p, const Exponent& q, const Exponent& r);

struct GridConfig {
  int max_m = 16;
  int max_n = 16;
  std::vector<Exponent> p_list{Exponent::of(1), Exponent::of(2), Exponent::of(3)};
  std::vector<Exponent> r_list{Exponent::of(1), Exponent::of(2), Exponent::of(3)};
  unsigned precision_bits = 256;
  bool parallel = false;
  /// Test hook: perturbs one formula so every affected cell fails with a
  /// reproducible witness.
  bool inject_fault = false;

  void validate() const; // throws Error on out-of-range fields
};

struct CheckRecord {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  std::string relation; // "<=", "=", "<"
  std::string status;   // "pass", "fail", "equality-achieved"
  std::string mode;     // "exact", "highprec"
};

struct Counts {
  std::size_t pass = 0, fail = 0, equality = 0;
  std::size_t total() const { return pass + fail + equality; }
};

struct VerificationReport {
  GridConfig config;
  std::vector<CheckRecord> records; // canonical order: suite, then params
  Counts counts() const;
  bool all_pass() const;
};

std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

VerificationReport check_vandermonde(const GridConfig& cfg);
VerificationReport check_holder(const GridConfig& cfg);
VerificationReport check_young(const GridConfig& cfg);
VerificationReport check_minkowski(const GridConfig& cfg);
VerificationReport check_engine_consistency(const GridConfig& cfg);

/// All suites concatenated (canonical record order). Suite-level errors
/// become fail records; the run itself never aborts.
VerificationReport run_all(const GridConfig& cfg);

} // namespace fncalc
