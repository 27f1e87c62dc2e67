#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lehmerk/algint.hpp"
#include "lehmerk/field.hpp"

using namespace lehmerk;

TEST_CASE("make_field validates and derives the basis") {
    auto gauss = make_field(-1);
    CHECK(gauss.degree == 2);
    CHECK(gauss.disc == -4);
    CHECK(gauss.basis_shape == BasisShape::PlainRoot);

    auto eisenstein = make_field(-3);
    CHECK(eisenstein.disc == -3);
    CHECK(eisenstein.basis_shape == BasisShape::HalfTrace);

    auto rational = make_field(1);
    CHECK(rational.degree == 1);
    CHECK(rational.is_rational());

    CHECK_THROWS_AS(make_field(12), NotSquarefree);
    CHECK_THROWS_AS(make_field(0), NotSquarefree);
    // class number of Q(sqrt(-5)) is 2: squarefree but off the whitelist
    CHECK_THROWS_AS(make_field(-5), UnsupportedField);
    CHECK_THROWS_AS(make_field(10), UnsupportedField);
}

TEST_CASE("whitelist fields all construct consistently") {
    auto radicands = whitelisted_radicands();
    CHECK(radicands.size() == 20);
    for (i64 m : radicands) {
        auto field = make_field(m);
        CHECK(field.degree == 2);
        CHECK((field.basis_shape == BasisShape::HalfTrace) == (floor_mod(m, 4) == 1));
        CHECK(field.disc == (floor_mod(m, 4) == 1 ? m : 4 * m));
    }
}

TEST_CASE("multiplication in basis coordinates") {
    auto gauss = make_field(-1);
    // (2 + i)(2 - i) = 5
    CHECK(mul({gauss, 2, 1}, {gauss, 2, -1}) == AlgInt{gauss, 5, 0});
    CHECK(mul({gauss, 3, -4}, {gauss, 1, 0}) == AlgInt{gauss, 3, -4});

    // omega = (1 + sqrt(-3))/2 satisfies omega^2 = omega - 1
    auto eisenstein = make_field(-3);
    CHECK(mul({eisenstein, 0, 1}, {eisenstein, 0, 1}) == AlgInt{eisenstein, -1, 1});

    auto rational = make_field(1);
    CHECK(mul({rational, 6, 0}, {rational, 7, 0}) == AlgInt{rational, 42, 0});
    CHECK_THROWS_AS(AlgInt(rational, 1, 1), FieldMismatch);
    CHECK_THROWS_AS(mul({gauss, 1, 0}, {eisenstein, 1, 0}), FieldMismatch);
}

TEST_CASE("norms") {
    auto gauss = make_field(-1);
    CHECK(norm({gauss, 2, 1}) == 5);
    CHECK(norm({gauss, 1, 0}) == 1);
    // units of infinite order exist in real fields
    auto root2 = make_field(2);
    CHECK(norm({root2, 1, 1}) == -1);
    auto rational = make_field(1);
    CHECK(norm({rational, -9, 0}) == -9);
}

TEST_CASE("multiplication matrices") {
    auto gauss = make_field(-1);
    CHECK(mult_matrix({gauss, 0, 1}) == Mat2{0, -1, 1, 0});
    CHECK(mult_matrix({gauss, 1, 0}) == Mat2{1, 0, 0, 1});
    auto eisenstein = make_field(-3);
    CHECK(mult_matrix({eisenstein, 0, 1}) == Mat2{0, -1, 1, 1});
    CHECK_THROWS_AS(mult_matrix({make_field(1), 3, 0}), DegreeOne);
}

TEST_CASE("ring identities over every whitelisted field") {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<i64> coord(-100, 100);
    for (i64 m : whitelisted_radicands()) {
        auto field = make_field(m);
        for (int i = 0; i < 200; ++i) {
            AlgInt x{field, coord(rng), coord(rng)};
            AlgInt y{field, coord(rng), coord(rng)};
            AlgInt z{field, coord(rng), coord(rng)};
            CAPTURE(m, x.a, x.b, y.a, y.b);
            CHECK(norm(mul(x, y)) == checked_mul(norm(x), norm(y)));
            CHECK(mult_matrix(x).det() == norm(x));
            CHECK(mul(x, y) == mul(y, x));
            CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
            if (field.basis_shape == BasisShape::HalfTrace) {
                // 4 N(a + b omega) = (2a + b)^2 - m b^2
                i64 lhs = 4 * norm(x);
                i64 rhs = (2 * x.a + x.b) * (2 * x.a + x.b) - m * x.b * x.b;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("coordinate overflow is detected") {
    auto gauss = make_field(-1);
    AlgInt big{gauss, INT64_MAX / 2, INT64_MAX / 2};
    CHECK_THROWS_AS(mul(big, big), Overflow);
    CHECK_THROWS_AS(norm(big), Overflow);
}
