#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "lehmerk/errors.hpp"
#include "lehmerk/numtheory.hpp"

namespace lehmerk {

// Shape of the second basis element of O_K over Z: {1, sqrt(m)} or
// {1, (1+sqrt(m))/2}, the latter exactly when m = 1 mod 4.
enum class BasisShape { PlainRoot, HalfTrace };

// K = Q(sqrt(m)) with class number one, or plain Q encoded as m = 1,
// degree 1. Class number one keeps O_K a unique factorization domain,
// which every divisibility predicate below assumes.
struct QuadraticField {
    i64 m = 1;
    int degree = 1;
    i64 disc = 1;
    BasisShape basis_shape = BasisShape::PlainRoot;

    bool is_rational() const { return degree == 1; }

    // omega^2 = omega + half_trace_const(); only meaningful for HalfTrace.
    i64 half_trace_const() const { return (m - 1) / 4; }

    bool operator==(const QuadraticField& other) const {
        return m == other.m && degree == other.degree;
    }
};

// The complete list of imaginary quadratic fields with class number one.
inline constexpr std::array<i64, 9> kImaginaryWhitelist = {
    -1, -2, -3, -7, -11, -19, -43, -67, -163};

// An initial verified class-number-one segment of real quadratic fields.
inline constexpr std::array<i64, 11> kRealWhitelist = {
    2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29};

inline bool is_whitelisted_radicand(i64 m) {
    return std::find(kImaginaryWhitelist.begin(), kImaginaryWhitelist.end(), m) !=
               kImaginaryWhitelist.end() ||
           std::find(kRealWhitelist.begin(), kRealWhitelist.end(), m) != kRealWhitelist.end();
}

// All supported radicands, degree-2 fields only (plain Q is m = 1).
inline std::vector<i64> whitelisted_radicands() {
    std::vector<i64> all(kImaginaryWhitelist.begin(), kImaginaryWhitelist.end());
    all.insert(all.end(), kRealWhitelist.begin(), kRealWhitelist.end());
    return all;
}

inline QuadraticField make_field(i64 m) {
    if (m == 0) throw NotSquarefree("m = 0 is not squarefree");
    if (m == 1) return QuadraticField{1, 1, 1, BasisShape::HalfTrace};
    u64 abs_m = static_cast<u64>(m < 0 ? -m : m);
    if (!is_squarefree(abs_m)) {
        throw NotSquarefree("radicand " + std::to_string(m) + " has a square factor");
    }
    if (!is_whitelisted_radicand(m)) {
        throw UnsupportedField("Q(sqrt(" + std::to_string(m) +
                               ")) is not on the class-number-one whitelist");
    }
    QuadraticField field;
    field.m = m;
    field.degree = 2;
    if (floor_mod(m, 4) == 1) {
        field.disc = m;
        field.basis_shape = BasisShape::HalfTrace;
    } else {
        field.disc = checked_mul(4, m);
        field.basis_shape = BasisShape::PlainRoot;
    }
    return field;
}

inline QuadraticField rational_field() { return make_field(1); }

inline std::string field_name(const QuadraticField& field) {
    if (field.is_rational()) return "Q";
    return "Q(sqrt(" + std::to_string(field.m) + "))";
}

} // namespace lehmerk
