#pragma once

#include <utility>
#include <vector>

#include "lehmerk/algint.hpp"
#include "lehmerk/errors.hpp"
#include "lehmerk/field.hpp"
#include "lehmerk/numtheory.hpp"

namespace lehmerk {

// Exhaustive-enumeration cap: the inverse-search oracle is O(d^2)..O(d^4)
// and exists to certify the fast path, not to scale.
inline constexpr i64 kDefaultOracleCap = 1000;

// Largest modulus accepted anywhere; keeps d^2 - 1 and every intermediate
// product inside the checked 64/128-bit word budget.
inline constexpr i64 kMaxModulus = 1'000'000'000;

namespace detail {
inline void require_modulus(i64 d) {
    if (d < 1) throw std::invalid_argument("modulus must be >= 1");
    if (d > kMaxModulus) {
        throw BudgetExceeded("modulus " + std::to_string(d) + " above word-size budget");
    }
}
} // namespace detail

// An element of Z_d|_K: basis coordinates reduced into [0, d).
struct ResidueClass {
    QuadraticField field;
    i64 modulus = 1;
    i64 a = 0;
    i64 b = 0;

    bool operator==(const ResidueClass& other) const {
        return field == other.field && modulus == other.modulus && a == other.a && b == other.b;
    }
};

inline ResidueClass reduce(const QuadraticField& field, i64 d, i64 lift_a, i64 lift_b) {
    detail::require_modulus(d);
    if (field.is_rational() && lift_b != 0) {
        throw FieldMismatch("degree-one elements have no omega coordinate");
    }
    return {field, d, floor_mod(lift_a, d), floor_mod(lift_b, d)};
}

inline ResidueClass reduce(const AlgInt& x, i64 d) { return reduce(x.field, d, x.a, x.b); }

inline ResidueClass residue_add(const ResidueClass& x, const ResidueClass& y) {
    if (!(x.field == y.field) || x.modulus != y.modulus) {
        throw FieldMismatch("residues live in different rings");
    }
    return {x.field, x.modulus, floor_mod(x.a + y.a, x.modulus), floor_mod(x.b + y.b, x.modulus)};
}

inline ResidueClass residue_mul(const ResidueClass& x, const ResidueClass& y) {
    if (!(x.field == y.field) || x.modulus != y.modulus) {
        throw FieldMismatch("residues live in different rings");
    }
    const QuadraticField& f = x.field;
    const i64 d = x.modulus;
    if (f.is_rational()) {
        return {f, d, static_cast<i64>(i128(x.a) * y.a % d), 0};
    }
    i128 cross = i128(x.a) * y.b + i128(x.b) * y.a;
    i128 first;
    if (f.basis_shape == BasisShape::PlainRoot) {
        first = i128(x.a) * y.a + i128(f.m) * x.b % d * y.b;
    } else {
        i128 bb = i128(x.b) * y.b;
        first = i128(x.a) * y.a + i128(f.half_trace_const()) % d * (bb % d);
        cross += bb;
    }
    auto wrap = [d](i128 v) {
        i64 r = static_cast<i64>(v % d);
        return r < 0 ? r + d : r;
    };
    return {f, d, wrap(first), wrap(cross)};
}

// Norm of any lift taken mod d; safe for the full modulus budget.
inline i64 norm_mod(const ResidueClass& x) {
    const QuadraticField& f = x.field;
    const i64 d = x.modulus;
    i128 n;
    if (f.is_rational()) {
        n = x.a;
    } else if (f.basis_shape == BasisShape::PlainRoot) {
        n = i128(x.a) * x.a - i128(f.m) * x.b % d * x.b;
    } else {
        n = i128(x.a) * x.a + i128(x.a) * x.b - i128(f.half_trace_const()) % d * (i128(x.b) * x.b % d);
    }
    i64 r = static_cast<i64>(n % d);
    return r < 0 ? r + d : r;
}

// Unit test via the norm: gcd(N(x) mod d, d) = 1 iff the multiplication-by-x
// matrix is invertible mod d iff x is coprime to d in O_K (class number one
// makes O_K a PID, so the three readings coincide). The enumeration oracle
// below validates this criterion independently.
inline bool is_unit(const ResidueClass& x) {
    if (x.modulus == 1) return false; // zero ring, by convention
    return std::gcd(norm_mod(x), x.modulus) == 1;
}

// All d^n residue classes, coordinates lexicographic.
inline std::vector<ResidueClass> enumerate_residues(const QuadraticField& field, i64 d,
                                                    i64 cap = kDefaultOracleCap) {
    detail::require_modulus(d);
    if (d > cap) throw BudgetExceeded("enumeration cap exceeded: d = " + std::to_string(d));
    std::vector<ResidueClass> out;
    if (field.is_rational()) {
        out.reserve(static_cast<std::size_t>(d));
        for (i64 a = 0; a < d; ++a) out.push_back({field, d, a, 0});
        return out;
    }
    out.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (i64 a = 0; a < d; ++a) {
        for (i64 b = 0; b < d; ++b) out.push_back({field, d, a, b});
    }
    return out;
}

// Brute-force order of the unit group: counts residues for which some y with
// x*y = 1 (mod d) exists, by direct search over all candidates. Deliberately
// does NOT reuse the norm/determinant shortcut, so it certifies is_unit
// independently.
inline u64 phi_oracle(const QuadraticField& field, i64 d, i64 cap = kDefaultOracleCap) {
    detail::require_modulus(d);
    if (d > cap) throw BudgetExceeded("oracle cap exceeded: d = " + std::to_string(d));
    const i64 one = floor_mod(1, d); // 0 in the zero ring, 1 otherwise
    if (field.is_rational()) {
        u64 count = 0;
        for (i64 a = 0; a < d; ++a) {
            for (i64 y = 0; y < d; ++y) {
                if (a * y % d == one) {
                    ++count;
                    break;
                }
            }
        }
        return count;
    }
    const i64 m = field.m;
    const bool plain = field.basis_shape == BasisShape::PlainRoot;
    const i64 q = plain ? 0 : field.half_trace_const();
    u64 count = 0;
    for (i64 a = 0; a < d; ++a) {
        for (i64 b = 0; b < d; ++b) {
            bool invertible = false;
            for (i64 c = 0; c < d && !invertible; ++c) {
                for (i64 e = 0; e < d; ++e) {
                    i64 first, second;
                    if (plain) {
                        first = floor_mod(a * c + m * b % d * e, d);
                        second = (a * e + b * c) % d;
                    } else {
                        i64 bb = b * e % d;
                        first = floor_mod(a * c + q % d * bb, d);
                        second = (a * e + b * c + bb) % d;
                    }
                    if (first == one && second == 0) {
                        invertible = true;
                        break;
                    }
                }
            }
            if (invertible) ++count;
        }
    }
    return count;
}

// Componentwise reduction Z_{mn}|_K -> Z_m|_K x Z_n|_K of any lift; a ring
// bijection when gcd(m, n) = 1 (verified exhaustively by the CRT suite).
inline std::pair<ResidueClass, ResidueClass> crt_map(const QuadraticField& field, i64 m, i64 n,
                                                     const ResidueClass& x) {
    if (m < 2 || n < 2) throw std::invalid_argument("crt_map requires moduli >= 2");
    if (std::gcd(m, n) != 1) throw NotCoprime("moduli are not coprime");
    if (!(x.field == field) || x.modulus != checked_mul(m, n)) {
        throw FieldMismatch("residue does not live mod m*n");
    }
    return {reduce(field, m, x.a, x.b), reduce(field, n, x.a, x.b)};
}

} // namespace lehmerk
