#pragma once

#include <string>
#include <string_view>

#include "fncalc/binom_seq.hpp"
#include "fncalc/piecewise.hpp"

namespace fncalc {

/// {"pieces":[{"lo":"-1/2","hi":"1/2","coeffs":["1"]}]} — pieces sorted by
/// lo, coeffs ascending degree, rationals as "p/q" strings. Deterministic
/// byte output for canonical functions.
std::string to_json(const PiecewiseFn& f);

/// Inverse of to_json. Accepts non-canonical but valid piece lists (they
/// are canonicalized); throws ParseError on malformed input, overlapping
/// intervals, or lo >= hi.
PiecewiseFn from_json(std::string_view text);

/// {"n":N}
std::string handle_to_json(const BinomFn& h);
BinomFn handle_from_json(std::string_view text);

/// CSV sample table "x,f(x)" from the support start to its end inclusive,
/// stepping by `step`; rationals rendered as decimal strings.
std::string sample_csv(const PiecewiseFn& f, const Rational& step, std::size_t decimal_places = 12);

} // namespace fncalc
