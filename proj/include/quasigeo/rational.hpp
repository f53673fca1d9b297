#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qg {

// All coordinates, slopes and lengths in this library are exact rationals.
// cpp_rational keeps the invariant gcd(|num|, den) = 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

// Serialized form is "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Parses "p", "p/q" or "-p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rational> parse_rational(std::string_view s);

// Fixed-point decimal rendering (round-half-away-from-zero), used only for
// presentation; nothing downstream computes with the result.
std::string to_decimal(const Rational& r, int digits);

}  // namespace qg
