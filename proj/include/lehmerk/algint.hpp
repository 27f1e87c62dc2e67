#pragma once

#include "lehmerk/errors.hpp"
#include "lehmerk/field.hpp"
#include "lehmerk/numtheory.hpp"

namespace lehmerk {

// An algebraic integer a + b*omega in coordinates over the integral basis.
// Coordinates are exact; arithmetic throws Overflow past the 64-bit budget.
struct AlgInt {
    QuadraticField field;
    i64 a = 0;
    i64 b = 0;

    AlgInt(QuadraticField f, i64 a_, i64 b_) : field(f), a(a_), b(b_) {
        if (field.is_rational() && b != 0) {
            throw FieldMismatch("degree-one elements have no omega coordinate");
        }
    }

    bool operator==(const AlgInt& other) const {
        return field == other.field && a == other.a && b == other.b;
    }
};

namespace detail {
inline void require_same_field(const AlgInt& x, const AlgInt& y) {
    if (!(x.field == y.field)) throw FieldMismatch("operands live in different fields");
}
} // namespace detail

inline AlgInt add(const AlgInt& x, const AlgInt& y) {
    detail::require_same_field(x, y);
    return {x.field, checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

inline AlgInt sub(const AlgInt& x, const AlgInt& y) {
    detail::require_same_field(x, y);
    return {x.field, checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

inline AlgInt neg(const AlgInt& x) {
    return {x.field, checked_sub(0, x.a), checked_sub(0, x.b)};
}

// PlainRoot: (a1 + b1 w)(a2 + b2 w) with w^2 = m.
// HalfTrace: w^2 = w + (m-1)/4.
inline AlgInt mul(const AlgInt& x, const AlgInt& y) {
    detail::require_same_field(x, y);
    const QuadraticField& f = x.field;
    if (f.is_rational()) return {f, checked_mul(x.a, y.a), 0};
    i64 cross = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
    if (f.basis_shape == BasisShape::PlainRoot) {
        i64 a = checked_add(checked_mul(x.a, y.a), checked_mul(f.m, checked_mul(x.b, y.b)));
        return {f, a, cross};
    }
    i64 bb = checked_mul(x.b, y.b);
    i64 a = checked_add(checked_mul(x.a, y.a), checked_mul(f.half_trace_const(), bb));
    return {f, a, checked_add(cross, bb)};
}

// Field norm N(x) = x * conj(x); equals det(mult_matrix(x)) in degree 2.
inline i64 norm(const AlgInt& x) {
    const QuadraticField& f = x.field;
    if (f.is_rational()) return x.a;
    if (f.basis_shape == BasisShape::PlainRoot) {
        return checked_sub(checked_mul(x.a, x.a), checked_mul(f.m, checked_mul(x.b, x.b)));
    }
    // (a + b/2)^2 - m (b/2)^2, kept integral as a^2 + ab + b^2 (1-m)/4.
    i64 r = checked_add(checked_mul(x.a, x.a), checked_mul(x.a, x.b));
    return checked_add(r, checked_mul(checked_mul(x.b, x.b), checked_sub(0, f.half_trace_const())));
}

struct Mat2 {
    // Row-major entries of a 2x2 integer matrix.
    i64 e00 = 0, e01 = 0, e10 = 0, e11 = 0;

    i64 det() const { return checked_sub(checked_mul(e00, e11), checked_mul(e01, e10)); }

    bool operator==(const Mat2&) const = default;
};

// Matrix of multiplication-by-x in the basis {1, omega}; columns are the
// coordinates of x*1 and x*omega.
inline Mat2 mult_matrix(const AlgInt& x) {
    const QuadraticField& f = x.field;
    if (f.is_rational()) throw DegreeOne("multiplication matrix requires a degree-2 field");
    if (f.basis_shape == BasisShape::PlainRoot) {
        // x*omega = m b + a omega.
        return {x.a, checked_mul(f.m, x.b), x.b, x.a};
    }
    // x*omega = b (m-1)/4 + (a + b) omega.
    return {x.a, checked_mul(f.half_trace_const(), x.b), x.b, checked_add(x.a, x.b)};
}

} // namespace lehmerk
