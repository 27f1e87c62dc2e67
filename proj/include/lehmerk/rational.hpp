#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "lehmerk/errors.hpp"
#include "lehmerk/numtheory.hpp"

namespace lehmerk {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with a positive denominator.
// Every inequality downstream (zeta brackets, the Theorem-1 chain) is decided
// on these; no floating point enters any verdict.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Accepts "a" or "a/b".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + text);
    }
}

inline std::string format_rational(const Rational& r) {
    return rational_num(r).str() + "/" + rational_den(r).str();
}

} // namespace lehmerk
