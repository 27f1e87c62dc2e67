#pragma once

#include <memory>
#include <unordered_map>

#include "lehmerk/errors.hpp"
#include "lehmerk/field.hpp"
#include "lehmerk/numtheory.hpp"
#include "lehmerk/residue.hpp"
#include "lehmerk/splitting.hpp"

namespace lehmerk {

// phi_K at a prime power, by splitting type. The |Z_{p^a}|_K| = p^{2a}
// residues decompose locally: inert leaves a field of size p^2 at the bottom,
// split gives two independent degree-one local factors, ramified a single
// local ring with residue field of size p.
inline u64 local_phi_k(const QuadraticField& field, u64 p, unsigned e, SplittingType type) {
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    if (field.is_rational()) return pe - pe / p;
    switch (type) {
        case SplittingType::Inert: return pe * pe - (pe / p) * (pe / p);
        case SplittingType::Split: {
            u64 local = pe - pe / p;
            return local * local;
        }
        case SplittingType::Ramified: return pe * pe - pe * (pe / p);
    }
    return 0;
}

// Computes phi_K multiplicatively over the prime-power factorization.
// Caches totients, factorizations and splitting types; confine one engine to
// one execution context (range scans give each worker its own).
class TotientEngine {
public:
    explicit TotientEngine(QuadraticField field) : field_(field) {}

    const QuadraticField& field() const { return field_; }

    // Share a prebuilt smallest-prime-factor sieve for bulk range scans.
    void attach_sieve(std::shared_ptr<const SmallestFactorSieve> sieve) {
        sieve_ = std::move(sieve);
    }

    const Factorization& factor(u64 d) {
        auto it = factor_cache_.find(d);
        if (it != factor_cache_.end()) return it->second;
        Factorization f =
            (sieve_ && d <= sieve_->limit()) ? sieve_->factorize(d) : factorize(d);
        return factor_cache_.emplace(d, std::move(f)).first->second;
    }

    SplittingType splitting(u64 p) {
        auto it = splitting_cache_.find(p);
        if (it != splitting_cache_.end()) return it->second;
        SplittingType t = splitting_type(field_, p);
        splitting_cache_.emplace(p, t);
        return t;
    }

    // phi_K(d); phi_K(1) = 1 by the zero-ring convention.
    u64 phi(u64 d) {
        detail::require_modulus(static_cast<i64>(d));
        if (d == 1) return 1;
        auto it = phi_cache_.find(d);
        if (it != phi_cache_.end()) return it->second;
        u64 value = 1;
        for (const auto& [p, e] : factor(d)) {
            SplittingType type =
                field_.is_rational() ? SplittingType::Inert : splitting(p);
            value *= local_phi_k(field_, p, e, type);
        }
        phi_cache_.emplace(d, value);
        return value;
    }

    // Classical Euler phi over the same factor cache.
    u64 phi_rational(u64 d) {
        if (d == 1) return 1;
        return euler_phi(factor(d));
    }

private:
    QuadraticField field_;
    std::unordered_map<u64, u64> phi_cache_;
    std::unordered_map<u64, Factorization> factor_cache_;
    std::unordered_map<u64, SplittingType> splitting_cache_;
    std::shared_ptr<const SmallestFactorSieve> sieve_;
};

inline u64 phi_fast(TotientEngine& engine, u64 d) { return engine.phi(d); }

} // namespace lehmerk
