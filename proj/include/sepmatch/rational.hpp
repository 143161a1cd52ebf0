#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "sepmatch/errors.hpp"

namespace sepmatch {

// Exact rational arithmetic everywhere a value may be non-integral
// (separation parameters, metric weights, edge weights). Coordinates stay
// small, so a 64-bit numerator/denominator is plenty.
using rat = boost::rational<long long>;

inline std::string to_string(const rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline bool is_integral(const rat& r) { return r.denominator() == 1; }

inline rat rabs(const rat& r) { return r < rat(0) ? -r : r; }

// Parses "n" or "n/d" (optionally signed). Whitespace is not accepted.
inline rat parse_rat(const std::string& text) {
  auto parse_ll = [&](const std::string& part) -> long long {
    if (part.empty()) throw parse_error("empty number in rational '" + text + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw parse_error("bad rational '" + text + "'");
    }
    if (used != part.size()) throw parse_error("bad rational '" + text + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return rat(parse_ll(text));
  long long num = parse_ll(text.substr(0, slash));
  long long den = parse_ll(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in rational '" + text + "'");
  return rat(num, den);
}

// Every finite double is a dyadic rational, so the conversion below is exact.
// Doubles whose exact denominator exceeds 2^32 (e.g. 0.1) are rejected:
// write those as a "p/q" string instead.
inline rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw parse_error("non-finite number");
  if (v == 0.0) return rat(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  long long m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  while (m != 0 && (m & 1) == 0) {
    m >>= 1;
    ++exp;
  }
  if (exp >= 0) {
    if (exp > 10) throw parse_error("number too large for exact conversion");
    return rat(m << exp);
  }
  if (-exp > 32)
    throw parse_error(
        "number is not an exact small rational; use a \"p/q\" string");
  return rat(m, 1LL << -exp);
}

}  // namespace sepmatch
