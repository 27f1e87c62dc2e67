#pragma once

#include "lehmerk/rational.hpp"

namespace lehmerk {

// Exact rational bracket of zeta(s): lower <= zeta(s) <= upper with
// upper - lower <= the requested tolerance. Kept rational because every
// downstream use is a strict-inequality contradiction.
struct ZetaBound {
    int s = 2;
    Rational lower;
    Rational upper;

    Rational width() const { return upper - lower; }
};

// lower = sum_{k<=N} k^{-s}; the tail sum_{k>N} k^{-s} is bounded above by
// the integral of x^{-s} from N, i.e. 1/((s-1) N^{s-1}).
inline ZetaBound zeta_bounds(int s, const Rational& tol) {
    if (s < 2) throw std::invalid_argument("zeta bracket requires s >= 2");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

    auto tail = [s](u64 n) {
        BigInt pow = 1;
        for (int i = 0; i + 1 < s; ++i) pow *= n;
        return make_rational(1, BigInt(s - 1) * pow);
    };
    u64 n = 1;
    while (tail(n) > tol) ++n;

    Rational lower = 0;
    for (u64 k = 1; k <= n; ++k) {
        BigInt pow = 1;
        for (int i = 0; i < s; ++i) pow *= k;
        lower += make_rational(1, pow);
    }
    return {s, lower, lower + tail(n)};
}

} // namespace lehmerk
