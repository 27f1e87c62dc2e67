#pragma once

#include <optional>
#include <thread>
#include <vector>

#include "lehmerk/errors.hpp"
#include "lehmerk/field.hpp"
#include "lehmerk/numtheory.hpp"
#include "lehmerk/splitting.hpp"
#include "lehmerk/totient.hpp"

namespace lehmerk {

// classify_range materializes one record per d; cap the range so the result
// stays in memory comfortably.
inline constexpr u64 kMaxClassifyRange = 1'000'000;

struct ClassificationRecord {
    u64 d = 0;
    bool squarefree = false;
    u64 phi = 0;   // classical Euler phi
    u64 phi_k = 0; // generalized totient over K
    std::optional<SplittingType> splitting; // present iff d is prime (degree 2)
    bool irreducible = false;
    bool divides = false; // phi_K(d) | d^n - 1
    bool realizable = false;
    bool normal = false;
    bool lehmer = false;
    bool strongly_lehmer = false;

    bool operator==(const ClassificationRecord&) const = default;
};

namespace detail {
inline u64 pow_n_minus_1(const QuadraticField& field, u64 d) {
    return field.is_rational() ? d - 1 : d * d - 1;
}
} // namespace detail

// Every prime divisor of d stays irreducible in O_K. Vacuously true for
// d = 1; every natural is realizable over plain Q.
inline bool is_realizable(TotientEngine& engine, u64 d) {
    if (d < 1) throw std::invalid_argument("realizability is asked of d >= 1");
    if (engine.field().is_rational()) return true;
    for (const auto& [p, e] : engine.factor(d)) {
        if (engine.splitting(p) != SplittingType::Inert) return false;
    }
    return true;
}

inline bool divides_pow_minus_1(TotientEngine& engine, u64 d) {
    return detail::pow_n_minus_1(engine.field(), d) % engine.phi(d) == 0;
}

// Cross-validates the realizability characterization: d (squarefree) is
// realizable iff phi_K(d) equals the product of p^n - 1 over its primes.
// Both sides are computed independently; the result is the biconditional.
inline bool check_prop12(TotientEngine& engine, u64 d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const Factorization& f = engine.factor(d);
    if (!is_squarefree(f)) throw NotSquarefree("d = " + std::to_string(d) + " is not squarefree");
    const bool rational = engine.field().is_rational();
    u64 product = 1;
    for (const auto& [p, e] : f) product *= rational ? p - 1 : p * p - 1;
    return is_realizable(engine, d) == (engine.phi(d) == product);
}

// phi_K(d)/phi(d) divides (d^n - 1)/(d - 1). Both quotients are exact by
// the embedding of unit groups; a non-integral quotient is a totient bug.
inline bool is_normal(TotientEngine& engine, u64 d) {
    if (d < 2) throw std::invalid_argument("normality is asked of d >= 2");
    u64 phi_k = engine.phi(d);
    u64 phi = engine.phi_rational(d);
    if (phi_k % phi != 0) {
        throw InternalInconsistency("phi(d) does not divide phi_K(d) at d = " + std::to_string(d));
    }
    u64 lhs = phi_k / phi;
    u64 rhs = engine.field().is_rational() ? 1 : d + 1; // (d^n-1)/(d-1)
    return rhs % lhs == 0;
}

// Lehmer number: [phi_K(d) | d^n - 1] and [d irreducible in O_K] have equal
// truth value. Irreducible forces phi_K(d) = d^n - 1, so the content is the
// converse direction.
inline bool is_lehmer(TotientEngine& engine, u64 d) {
    if (d < 2) throw std::invalid_argument("the Lehmer predicate is asked of d >= 2");
    return divides_pow_minus_1(engine, d) == is_irreducible_nat(engine.field(), d);
}

// Strongly Lehmer: divisibility, irreducibility in O_K, and primality in Z
// are pairwise equivalent.
inline bool is_strongly_lehmer(TotientEngine& engine, u64 d) {
    if (d < 2) throw std::invalid_argument("the Lehmer predicate is asked of d >= 2");
    bool irreducible = is_irreducible_nat(engine.field(), d);
    return is_lehmer(engine, d) && (is_prime(d) == irreducible);
}

inline ClassificationRecord classify_one(TotientEngine& engine, u64 d) {
    ClassificationRecord rec;
    rec.d = d;
    const Factorization& f = engine.factor(d);
    rec.squarefree = is_squarefree(f);
    rec.phi = engine.phi_rational(d);
    rec.phi_k = engine.phi(d);
    bool prime = f.size() == 1 && f.front().e == 1 && f.front().p == d;
    if (prime && !engine.field().is_rational()) rec.splitting = engine.splitting(d);
    rec.irreducible = is_irreducible_nat(engine.field(), d);
    rec.divides = divides_pow_minus_1(engine, d);
    rec.realizable = is_realizable(engine, d);
    rec.normal = is_normal(engine, d);
    rec.lehmer = is_lehmer(engine, d);
    rec.strongly_lehmer = is_strongly_lehmer(engine, d);
    return rec;
}

struct ClassifyOptions {
    bool squarefree_only = false;
    unsigned threads = 1;
};

// One record per d in [2, d_max], ascending. Worker threads take contiguous
// chunks with private engines over a shared read-only sieve, so the merged
// output is identical for any thread count.
inline std::vector<ClassificationRecord> classify_range(const QuadraticField& field, u64 d_max,
                                                        const ClassifyOptions& options = {}) {
    if (d_max < 2) throw std::invalid_argument("d_max must be >= 2");
    if (d_max > kMaxClassifyRange) {
        throw BudgetExceeded("classification range above budget: " + std::to_string(d_max));
    }
    auto sieve = std::make_shared<const SmallestFactorSieve>(d_max);
    unsigned threads = std::max(1u, options.threads);
    const u64 count = d_max - 1;
    threads = static_cast<unsigned>(std::min<u64>(threads, count));

    std::vector<std::vector<ClassificationRecord>> parts(threads);
    auto work = [&](unsigned t) {
        TotientEngine engine(field);
        engine.attach_sieve(sieve);
        u64 lo = 2 + count * t / threads;
        u64 hi = 2 + count * (t + 1) / threads;
        auto& out = parts[t];
        for (u64 d = lo; d < hi; ++d) {
            if (options.squarefree_only && !is_squarefree(engine.factor(d))) continue;
            out.push_back(classify_one(engine, d));
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    std::vector<ClassificationRecord> records;
    for (auto& part : parts) {
        records.insert(records.end(), part.begin(), part.end());
    }
    return records;
}

} // namespace lehmerk
