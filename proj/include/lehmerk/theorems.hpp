#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lehmerk/classify.hpp"
#include "lehmerk/errors.hpp"
#include "lehmerk/field.hpp"
#include "lehmerk/rational.hpp"
#include "lehmerk/residue.hpp"
#include "lehmerk/totient.hpp"
#include "lehmerk/zeta.hpp"

namespace lehmerk {

// Exhaustive suites enumerate whole residue rings; their bounds are capped
// separately from the fast (multiplicative) suites.
inline constexpr u64 kCardinalitySuiteCap = 300;
inline constexpr u64 kFieldCriterionSuiteCap = 64;
inline constexpr i64 kCrtSuiteCap = 60; // the operation-table check is O((mn)^4)

struct VerificationReport {
    std::string suite;
    std::optional<i64> field_m;
    u64 bound = 0;
    u64 checked = 0;
    // Re-runnable inputs (suite-specific argument tuples), ascending.
    std::vector<std::vector<i64>> failures;
    std::chrono::duration<double> elapsed{};

    bool passed() const { return failures.empty(); }
};

namespace detail {

class SuiteTimer {
public:
    explicit SuiteTimer(VerificationReport& report) : report_(report) {}
    ~SuiteTimer() { report_.elapsed = std::chrono::steady_clock::now() - start_; }

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline VerificationReport new_report(const std::string& suite, const QuadraticField& field,
                                     u64 bound) {
    VerificationReport report;
    report.suite = suite;
    report.field_m = field.m;
    report.bound = bound;
    return report;
}

inline TotientEngine sieved_engine(const QuadraticField& field, u64 bound) {
    TotientEngine engine(field);
    if (bound >= 2) engine.attach_sieve(std::make_shared<const SmallestFactorSieve>(bound));
    return engine;
}

} // namespace detail

// |Z_d|_K| = d^n, by direct enumeration.
inline VerificationReport suite_cardinality(const QuadraticField& field, u64 bound) {
    if (bound > kCardinalitySuiteCap) {
        throw BudgetExceeded("cardinality suite is exhaustive; bound capped at " +
                             std::to_string(kCardinalitySuiteCap));
    }
    auto report = detail::new_report("cardinality", field, bound);
    detail::SuiteTimer timer(report);
    for (u64 d = 1; d <= bound; ++d) {
        auto classes = enumerate_residues(field, static_cast<i64>(d), static_cast<i64>(bound));
        u64 expected = field.is_rational() ? d : d * d;
        ++report.checked;
        if (classes.size() != expected) report.failures.push_back({static_cast<i64>(d)});
    }
    return report;
}

// phi_K(mn) = phi_K(m) phi_K(n) over all coprime pairs with mn <= bound.
inline VerificationReport suite_multiplicativity(const QuadraticField& field, u64 bound) {
    auto report = detail::new_report("multiplicativity", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    for (u64 m = 2; m * m <= bound; ++m) {
        for (u64 n = m + 1; m * n <= bound; ++n) {
            if (std::gcd(m, n) != 1) continue;
            ++report.checked;
            if (engine.phi(m * n) != engine.phi(m) * engine.phi(n)) {
                report.failures.push_back({static_cast<i64>(m), static_cast<i64>(n)});
            }
        }
    }
    return report;
}

// phi(d) | phi_K(d): the classical unit group embeds in U(Z_d)|_K.
inline VerificationReport suite_embedding(const QuadraticField& field, u64 bound) {
    auto report = detail::new_report("embedding", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    for (u64 d = 1; d <= bound; ++d) {
        ++report.checked;
        if (engine.phi(d) % engine.phi_rational(d) != 0) {
            report.failures.push_back({static_cast<i64>(d)});
        }
    }
    return report;
}

// phi_K(d) <= d^n - 1 with equality exactly at irreducible d.
inline VerificationReport suite_lemma1(const QuadraticField& field, u64 bound) {
    auto report = detail::new_report("lemma1", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    for (u64 d = 2; d <= bound; ++d) {
        ++report.checked;
        u64 phi_k = engine.phi(d);
        u64 max = detail::pow_n_minus_1(field, d);
        bool ok = phi_k <= max && (phi_k == max) == is_irreducible_nat(field, d);
        if (!ok) report.failures.push_back({static_cast<i64>(d)});
    }
    return report;
}

// Z_d|_K has no zero divisors iff d is irreducible in O_K; zero divisors
// are searched for exhaustively.
inline VerificationReport suite_field_criterion(const QuadraticField& field, u64 bound) {
    if (bound > kFieldCriterionSuiteCap) {
        throw BudgetExceeded("field-criterion suite is exhaustive; bound capped at " +
                             std::to_string(kFieldCriterionSuiteCap));
    }
    auto report = detail::new_report("field_criterion", field, bound);
    detail::SuiteTimer timer(report);
    for (u64 d = 2; d <= bound; ++d) {
        auto classes = enumerate_residues(field, static_cast<i64>(d), static_cast<i64>(bound));
        const ResidueClass zero = reduce(field, static_cast<i64>(d), 0, 0);
        bool zero_divisor = false;
        for (std::size_t i = 1; i < classes.size() && !zero_divisor; ++i) {
            for (std::size_t j = 1; j < classes.size(); ++j) {
                if (residue_mul(classes[i], classes[j]) == zero) {
                    zero_divisor = true;
                    break;
                }
            }
        }
        ++report.checked;
        if (zero_divisor == is_irreducible_nat(field, d)) {
            report.failures.push_back({static_cast<i64>(d)});
        }
    }
    return report;
}

// check_prop12 over all squarefree d <= bound.
inline VerificationReport suite_prop12(const QuadraticField& field, u64 bound) {
    auto report = detail::new_report("prop12", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    for (u64 d = 1; d <= bound; ++d) {
        if (!is_squarefree(engine.factor(d))) continue;
        ++report.checked;
        if (!check_prop12(engine, d)) report.failures.push_back({static_cast<i64>(d)});
    }
    return report;
}

// Realizable squarefree d are Lehmer numbers, plus the exact rational chain
// that drives the proof: (d^2-1)/phi_K(d) <= prod 1/(1-p^-2) <= zeta(2) < 2.
inline VerificationReport suite_theorem1(const QuadraticField& field, u64 bound) {
    if (field.is_rational()) throw DegreeOne("theorem1 suite requires a degree-2 field");
    auto report = detail::new_report("theorem1", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    const Rational zeta2_upper = zeta_bounds(2, make_rational(1, 1000)).upper;
    const Rational two = 2;
    for (u64 d = 2; d <= bound; ++d) {
        const Factorization& f = engine.factor(d);
        if (!is_squarefree(f)) continue;
        if (!is_realizable(engine, d)) continue;
        ++report.checked;
        bool lehmer_dir =
            !divides_pow_minus_1(engine, d) || is_irreducible_nat(field, d);
        Rational ratio = make_rational(BigInt(d) * d - 1, engine.phi(d));
        Rational euler_partial = 1;
        for (const auto& [p, e] : f) {
            euler_partial *= make_rational(BigInt(p) * p, BigInt(p) * p - 1);
        }
        bool chain = ratio <= euler_partial && euler_partial <= zeta2_upper &&
                     euler_partial < two;
        if (!lehmer_dir || !chain) report.failures.push_back({static_cast<i64>(d)});
    }
    return report;
}

// A prime is normal over K iff phi_K(p) | p^n - 1.
inline VerificationReport suite_normal_primes(const QuadraticField& field, u64 bound) {
    auto report = detail::new_report("normal_primes", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    for (u64 p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        ++report.checked;
        if (is_normal(engine, p) != divides_pow_minus_1(engine, p)) {
            report.failures.push_back({static_cast<i64>(p)});
        }
    }
    return report;
}

// Lehmer + normal + the classical Lehmer divisibility force primality.
inline VerificationReport suite_theorem2(const QuadraticField& field, u64 bound) {
    auto report = detail::new_report("theorem2", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    for (u64 d = 2; d <= bound; ++d) {
        ++report.checked;
        if ((d - 1) % engine.phi_rational(d) != 0) continue;
        if (!is_lehmer(engine, d) || !is_normal(engine, d)) continue;
        if (!is_prime(d)) report.failures.push_back({static_cast<i64>(d)});
    }
    return report;
}

// Bounded form of the realizable-field characterization: "no counterexample
// to realizability below the bound" must coincide with "no Lehmer
// counterexample below the bound and no non-normal prime below it".
// The failure witness is the first input separating the two sides.
inline VerificationReport suite_realizable_field(const QuadraticField& field, u64 bound) {
    auto report = detail::new_report("realizable_field", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    std::optional<u64> first_nonrealizable;
    std::optional<u64> first_right_witness;
    for (u64 d = 2; d <= bound; ++d) {
        ++report.checked;
        if (!first_nonrealizable && !is_realizable(engine, d)) first_nonrealizable = d;
        if (!first_right_witness &&
            (!is_lehmer(engine, d) || (is_prime(d) && !is_normal(engine, d)))) {
            first_right_witness = d;
        }
        if (first_nonrealizable && first_right_witness) break;
    }
    bool left = !first_nonrealizable.has_value();
    bool right = !first_right_witness.has_value();
    if (left != right) {
        u64 witness = left ? *first_right_witness : *first_nonrealizable;
        report.failures.push_back({static_cast<i64>(witness)});
    }
    return report;
}

// Per-prime biconditional behind the strongly-Lehmer characterization:
// a prime is strongly Lehmer over K exactly when it is realizable over K.
inline VerificationReport suite_theorem3(const QuadraticField& field, u64 bound) {
    auto report = detail::new_report("theorem3", field, bound);
    detail::SuiteTimer timer(report);
    TotientEngine engine = detail::sieved_engine(field, bound);
    for (u64 p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        ++report.checked;
        if (is_strongly_lehmer(engine, p) != is_realizable(engine, p)) {
            report.failures.push_back({static_cast<i64>(p)});
        }
    }
    return report;
}

using SuiteFn = std::function<VerificationReport(const QuadraticField&, u64)>;

inline const std::map<std::string, SuiteFn>& suite_registry() {
    static const std::map<std::string, SuiteFn> registry = {
        {"cardinality", suite_cardinality},
        {"multiplicativity", suite_multiplicativity},
        {"embedding", suite_embedding},
        {"lemma1", suite_lemma1},
        {"field_criterion", suite_field_criterion},
        {"prop12", suite_prop12},
        {"theorem1", suite_theorem1},
        {"normal_primes", suite_normal_primes},
        {"theorem2", suite_theorem2},
        {"theorem3", suite_theorem3},
        {"realizable_field", suite_realizable_field},
    };
    return registry;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_registry()) names.push_back(name);
    return names;
}

inline u64 suite_default_bound(const std::string& name) {
    static const std::map<std::string, u64> defaults = {
        {"cardinality", 30},     {"multiplicativity", 200}, {"embedding", 10'000},
        {"lemma1", 10'000},      {"field_criterion", 30},   {"prop12", 10'000},
        {"theorem1", 100'000},   {"normal_primes", 1'000},  {"theorem2", 10'000},
        {"theorem3", 1'000},     {"realizable_field", 1'000},
    };
    auto it = defaults.find(name);
    return it == defaults.end() ? 1'000 : it->second;
}

inline VerificationReport run_suite(const std::string& name, const QuadraticField& field,
                                    u64 bound) {
    auto it = suite_registry().find(name);
    if (it == suite_registry().end()) throw UnknownSuite("no suite named " + name);
    return it->second(field, bound);
}

// Exhaustive check that componentwise reduction Z_{mn}|_K -> Z_m|_K x Z_n|_K
// is a ring isomorphism, and that unit counts multiply by direct count.
inline VerificationReport crt_suite(const QuadraticField& field, i64 m, i64 n) {
    if (m < 2 || n < 2) throw std::invalid_argument("crt suite requires moduli >= 2");
    if (std::gcd(m, n) != 1) throw NotCoprime("moduli are not coprime");
    const i64 mn = checked_mul(m, n);
    if (mn > kCrtSuiteCap) {
        throw BudgetExceeded("crt suite is exhaustive; m*n capped at " +
                             std::to_string(kCrtSuiteCap));
    }
    auto report = detail::new_report("crt", field, static_cast<u64>(mn));
    detail::SuiteTimer timer(report);

    auto classes = enumerate_residues(field, mn, mn);
    std::set<std::pair<std::pair<i64, i64>, std::pair<i64, i64>>> images;
    for (const auto& x : classes) {
        auto [xm, xn] = crt_map(field, m, n, x);
        images.insert({{xm.a, xm.b}, {xn.a, xn.b}});
        ++report.checked;
    }
    if (images.size() != classes.size()) report.failures.push_back({0});

    for (const auto& x : classes) {
        for (const auto& y : classes) {
            auto [sm, sn] = crt_map(field, m, n, residue_add(x, y));
            auto [pm, pn] = crt_map(field, m, n, residue_mul(x, y));
            auto [xm, xn] = crt_map(field, m, n, x);
            auto [ym, yn] = crt_map(field, m, n, y);
            bool ok = sm == residue_add(xm, ym) && sn == residue_add(xn, yn) &&
                      pm == residue_mul(xm, ym) && pn == residue_mul(xn, yn);
            ++report.checked;
            if (!ok) report.failures.push_back({x.a, x.b, y.a, y.b});
        }
    }

    ++report.checked;
    if (phi_oracle(field, mn, mn) != phi_oracle(field, m, m) * phi_oracle(field, n, n)) {
        report.failures.push_back({m, n});
    }
    return report;
}

struct RatioScanResult {
    u64 w = 1;
    Rational target;
    u64 bound = 0;
    std::vector<u64> matches; // ascending
    bool hypothesis_holds = false; // l < w/phi(w)
};

// All squarefree d <= bound with w | d and (d-1)/phi(d) = l, exactly. The
// finiteness theorem needs l < w/phi(w); the scan reports that flag but runs
// either way so the sharpness of the hypothesis can be probed.
inline RatioScanResult ratio_scan(u64 w, const Rational& target, u64 bound) {
    if (w < 1 || !is_squarefree(w)) {
        throw NotSquarefree("w = " + std::to_string(w) + " must be squarefree");
    }
    RatioScanResult result;
    result.w = w;
    result.target = target;
    result.bound = bound;
    result.hypothesis_holds = target < make_rational(w, euler_phi(w));

    std::unique_ptr<SmallestFactorSieve> sieve;
    if (bound >= 2 && bound <= 10'000'000) sieve = std::make_unique<SmallestFactorSieve>(bound);
    for (u64 d = w; d <= bound; d += w) {
        Factorization f = sieve ? sieve->factorize(d) : factorize(d);
        if (!is_squarefree(f)) continue;
        if (make_rational(d - 1, euler_phi(f)) == target) result.matches.push_back(d);
    }
    return result;
}

} // namespace lehmerk
