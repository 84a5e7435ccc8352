#include "fncalc/json_io.hpp"

#include <json.hpp>

#include "fncalc/errors.hpp"

namespace fncalc {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const PiecewiseFn& f) {
  ordered_json pieces = ordered_json::array();
  for (const auto& p : f.pieces()) {
    ordered_json piece;
    piece["lo"] = p.interval.lo.str();
    piece["hi"] = p.interval.hi.str();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.poly.coeffs()) coeffs.push_back(c.str());
    piece["coeffs"] = std::move(coeffs);
    pieces.push_back(std::move(piece));
  }
  ordered_json doc;
  doc["pieces"] = std::move(pieces);
  return doc.dump();
}

namespace {

ordered_json parse_document(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

} // namespace

PiecewiseFn from_json(std::string_view text) {
  const ordered_json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array())
    throw ParseError("piecewise JSON: expected an object with a \"pieces\" array");
  std::vector<Piece> pieces;
  std::size_t index = 0;
  for (const auto& pj : doc["pieces"]) {
    const std::string where = "piece " + std::to_string(index++);
    if (!pj.is_object() || !pj.contains("lo") || !pj.contains("hi") || !pj.contains("coeffs"))
      throw ParseError("piecewise JSON: " + where + " needs lo, hi and coeffs");
    if (!pj["lo"].is_string() || !pj["hi"].is_string() || !pj["coeffs"].is_array())
      throw ParseError("piecewise JSON: " + where + " has wrongly typed fields");
    Rational lo, hi;
    try {
      lo = Rational::parse(pj["lo"].get<std::string>());
      hi = Rational::parse(pj["hi"].get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("piecewise JSON: " + where + ": " + e.what());
    }
    if (!(lo < hi))
      throw ParseError("piecewise JSON: " + where + ": requires lo < hi, got lo=" + lo.str() +
                       " hi=" + hi.str());
    std::vector<Rational> coeffs;
    for (const auto& cj : pj["coeffs"]) {
      if (!cj.is_string())
        throw ParseError("piecewise JSON: " + where + ": coeffs entries must be strings");
      try {
        coeffs.push_back(Rational::parse(cj.get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError("piecewise JSON: " + where + ": " + e.what());
      }
    }
    pieces.push_back(Piece{Interval(lo, hi), Poly(std::move(coeffs))});
  }
  try {
    return PiecewiseFn::from_pieces(std::move(pieces));
  } catch (const Error& e) {
    throw ParseError(std::string("piecewise JSON: ") + e.what());
  }
}

std::string handle_to_json(const BinomFn& h) {
  ordered_json doc;
  doc["n"] = h.n;
  return doc.dump();
}

BinomFn handle_from_json(std::string_view text) {
  const ordered_json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      doc["n"].get<long long>() < 0)
    throw ParseError("handle JSON: expected {\"n\": nonnegative integer}");
  return build_closed(static_cast<int>(doc["n"].get<long long>()));
}

std::string sample_csv(const PiecewiseFn& f, const Rational& step, std::size_t decimal_places) {
  if (step.sign() <= 0) throw Error("sample_csv: step must be positive");
  std::string out = "x,f(x)\n";
  const auto sup = f.support();
  if (!sup) return out;
  for (Rational x = sup->lo; !(sup->hi < x); x += step) {
    out += decimal_str(x, decimal_places);
    out += ',';
    out += decimal_str(evaluate(f, x), decimal_places);
    out += '\n';
  }
  return out;
}

} // namespace fncalc
