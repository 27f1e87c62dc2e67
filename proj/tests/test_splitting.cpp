#include <catch2/catch_amalgamated.hpp>

#include <future>

#include "lehmerk/residue.hpp"
#include "lehmerk/splitting.hpp"

using namespace lehmerk;

TEST_CASE("splitting in the Gaussian integers") {
    auto gauss = make_field(-1);
    CHECK(splitting_type(gauss, 7) == SplittingType::Inert);
    CHECK(splitting_type(gauss, 5) == SplittingType::Split);
    CHECK(splitting_type(gauss, 2) == SplittingType::Ramified);
    CHECK_THROWS_AS(splitting_type(gauss, 9), NotPrime);
    CHECK_THROWS_AS(splitting_type(make_field(1), 7), DegreeOne);
}

TEST_CASE("Gaussian law: inert iff p = 3 mod 4") {
    auto gauss = make_field(-1);
    for (u64 p : primes_up_to(1000)) {
        if (p == 2) continue;
        CAPTURE(p);
        CHECK((splitting_type(gauss, p) == SplittingType::Inert) == (p % 4 == 3));
    }
}

TEST_CASE("behaviour of 2 over half-trace fields") {
    // 2 is unramified exactly when m = 1 mod 4; then split iff m = 1 mod 8
    CHECK(splitting_type(make_field(-7), 2) == SplittingType::Split);
    CHECK(splitting_type(make_field(-3), 2) == SplittingType::Inert);
    CHECK(splitting_type(make_field(17), 2) == SplittingType::Split);
    CHECK(splitting_type(make_field(5), 2) == SplittingType::Inert);
    CHECK(splitting_type(make_field(2), 2) == SplittingType::Ramified);
}

TEST_CASE("ramified exactly at discriminant primes") {
    for (i64 m : whitelisted_radicands()) {
        auto field = make_field(m);
        for (u64 p : primes_up_to(200)) {
            CAPTURE(m, p);
            CHECK((splitting_type(field, p) == SplittingType::Ramified) ==
                  (floor_mod(field.disc, static_cast<i64>(p)) == 0));
        }
    }
}

TEST_CASE("irreducibility of naturals") {
    auto gauss = make_field(-1);
    CHECK(is_irreducible_nat(gauss, 3));
    CHECK_FALSE(is_irreducible_nat(gauss, 9)); // 3 * 3, both non-units
    CHECK_FALSE(is_irreducible_nat(gauss, 5)); // (2+i)(2-i)
    CHECK(is_irreducible_nat(make_field(1), 13));
    CHECK_FALSE(is_irreducible_nat(make_field(1), 12));
    CHECK_THROWS_AS(is_irreducible_nat(gauss, 1), std::invalid_argument);
}

TEST_CASE("irreducible iff unit group is everything, by enumeration") {
    for (i64 m : {-1, -7, 2, 13}) {
        auto field = make_field(m);
        for (u64 d = 2; d <= 40; ++d) {
            CAPTURE(m, d);
            CHECK(is_irreducible_nat(field, d) ==
                  (phi_oracle(field, static_cast<i64>(d)) == d * d - 1));
        }
    }
}

TEST_CASE("splitting type matches the unit-count trichotomy everywhere") {
    // phi_K(p) determines the splitting: p^2-1 inert, (p-1)^2 split, p^2-p
    // ramified. The unit counts come from the enumeration oracle, so this
    // is an oracle-grade check of splitting_type on every supported field.
    auto verify_field = [](i64 m) {
        auto field = make_field(m);
        for (u64 p : primes_up_to(97)) {
            u64 count = phi_oracle(field, static_cast<i64>(p));
            SplittingType expected;
            if (count == p * p - 1) {
                expected = SplittingType::Inert;
            } else if (count == (p - 1) * (p - 1)) {
                expected = SplittingType::Split;
            } else if (count == p * p - p) {
                expected = SplittingType::Ramified;
            } else {
                return false;
            }
            if (splitting_type(field, p) != expected) return false;
        }
        return true;
    };
    std::vector<std::future<bool>> jobs;
    for (i64 m : whitelisted_radicands()) {
        jobs.push_back(std::async(std::launch::async, verify_field, m));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        CAPTURE(whitelisted_radicands()[i]);
        CHECK(jobs[i].get());
    }
}
