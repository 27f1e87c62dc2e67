#pragma once

#include <string>

#include "lehmerk/errors.hpp"
#include "lehmerk/field.hpp"
#include "lehmerk/numtheory.hpp"

namespace lehmerk {

enum class SplittingType { Inert, Split, Ramified };

inline std::string to_string(SplittingType t) {
    switch (t) {
        case SplittingType::Inert: return "inert";
        case SplittingType::Split: return "split";
        case SplittingType::Ramified: return "ramified";
    }
    return "?";
}

// Dedekind's criterion specialized to quadratic fields: p ramifies iff it
// divides the discriminant; otherwise an odd p splits iff m is a quadratic
// residue mod p, and 2 (only relevant when m = 1 mod 4) splits iff
// m = 1 mod 8.
inline SplittingType splitting_type(const QuadraticField& field, u64 p) {
    if (field.is_rational()) throw DegreeOne("no splitting over the degree-one field");
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (p == 2) {
        if (field.basis_shape == BasisShape::PlainRoot) return SplittingType::Ramified;
        return floor_mod(field.m, 8) == 1 ? SplittingType::Split : SplittingType::Inert;
    }
    if (floor_mod(field.m, static_cast<i64>(p)) == 0) return SplittingType::Ramified;
    return legendre(field.m, p) == 1 ? SplittingType::Split : SplittingType::Inert;
}

// A natural d >= 2 is irreducible in O_K exactly when it is a rational prime
// that stays inert; any composite d = ab factors through non-units, and
// split/ramified primes factor nontrivially.
inline bool is_irreducible_nat(const QuadraticField& field, u64 d) {
    if (d < 2) throw std::invalid_argument("irreducibility is asked of d >= 2");
    if (!is_prime(d)) return false;
    if (field.is_rational()) return true;
    return splitting_type(field, d) == SplittingType::Inert;
}

} // namespace lehmerk
