#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace zetask {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always stored gcd-reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders "a/b", or "a" when the denominator is 1.
std::string rat_str(const Rational& r);

// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

} // namespace zetask
