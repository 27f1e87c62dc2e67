#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "lehmerk/errors.hpp"

namespace lehmerk {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw Overflow("integer addition overflow");
    return r;
}

inline i64 checked_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) throw Overflow("integer subtraction overflow");
    return r;
}

inline i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw Overflow("integer multiplication overflow");
    return r;
}

// Remainder in [0, n) regardless of the sign of x.
inline i64 floor_mod(i64 x, i64 n) {
    i64 r = x % n;
    return r < 0 ? r + n : r;
}

inline u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

inline u64 powmod(u64 base, u64 exp, u64 n) {
    if (n == 1) return 0;
    u64 r = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

struct PrimePower {
    u64 p;
    unsigned e;
    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

// Trial division; intended for the library's modulus budget (d <= 1e9),
// where the largest candidate divisor is ~31623.
inline Factorization factorize(u64 n) {
    Factorization f;
    for (u64 p : {2ULL, 3ULL}) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    for (u64 p = 5; p * p <= n; p += (p % 6 == 5) ? 2 : 4) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline u64 euler_phi(const Factorization& f) {
    u64 r = 1;
    for (auto [p, e] : f) {
        u64 pe = p;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        r *= pe - pe / p;
    }
    return r;
}

inline u64 euler_phi(u64 n) { return n == 0 ? 0 : euler_phi(factorize(n)); }

inline bool is_squarefree(const Factorization& f) {
    for (auto [p, e] : f) {
        if (e > 1) return false;
    }
    return true;
}

inline bool is_squarefree(u64 n) { return n != 0 && is_squarefree(factorize(n)); }

// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
inline int legendre(i64 a, u64 p) {
    u64 r = powmod(static_cast<u64>(floor_mod(a, static_cast<i64>(p))), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

inline std::vector<u64> primes_up_to(u64 limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

// Smallest-prime-factor sieve for bulk factorization in range scans.
class SmallestFactorSieve {
public:
    explicit SmallestFactorSieve(u64 limit) : spf_(limit + 1, 0) {
        for (u64 i = 2; i <= limit; ++i) {
            if (spf_[i] != 0) continue;
            for (u64 j = i; j <= limit; j += i) {
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }

    u64 limit() const { return spf_.size() - 1; }

    Factorization factorize(u64 n) const {
        Factorization f;
        while (n > 1) {
            u64 p = spf_[n];
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
        return f;
    }

private:
    std::vector<std::uint32_t> spf_;
};

} // namespace lehmerk
