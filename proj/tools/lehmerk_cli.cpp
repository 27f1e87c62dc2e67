// Command-line front end: exact phi_K evaluation, range classification,
// prime splitting, verification suites, CRT checks, ratio scans and zeta
// brackets over the supported class-number-one quadratic fields.
//
// Exit codes: 0 success, 1 usage error, 2 counterexample or oracle
// mismatch, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lehmerk/lehmerk.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitIo = 3;

struct PhiArgs {
    lehmerk::i64 field_m = -1;
    lehmerk::i64 d = 1;
    bool check = false;
    lehmerk::i64 oracle_cap = lehmerk::kDefaultOracleCap;
};

struct ClassifyArgs {
    lehmerk::i64 field_m = -1;
    lehmerk::u64 d_max = 100;
    std::string format = "csv";
    std::string out_path;
    bool squarefree_only = false;
    unsigned threads = 1;
};

int run_phi(const PhiArgs& args) {
    auto field = lehmerk::make_field(args.field_m);
    lehmerk::TotientEngine engine(field);
    lehmerk::u64 value = engine.phi(static_cast<lehmerk::u64>(args.d));
    std::cout << value << '\n';
    if (args.check) {
        if (args.d > args.oracle_cap) {
            std::cerr << "oracle skipped: d above cap " << args.oracle_cap << '\n';
            return kExitPass;
        }
        lehmerk::u64 oracle = lehmerk::phi_oracle(field, args.d, args.oracle_cap);
        if (oracle != value) {
            std::cout << "oracle MISMATCH: enumeration found " << oracle << '\n';
            return kExitCounterexample;
        }
        std::cout << "oracle OK" << '\n';
    }
    return kExitPass;
}

int run_classify(const ClassifyArgs& args) {
    auto field = lehmerk::make_field(args.field_m);
    lehmerk::ClassifyOptions options;
    options.squarefree_only = args.squarefree_only;
    options.threads = args.threads;
    auto records = lehmerk::classify_range(field, args.d_max, options);

    std::string payload;
    if (args.format == "csv") {
        payload = lehmerk::records_to_csv(records);
    } else if (args.format == "jsonl") {
        payload = lehmerk::records_to_jsonl(records);
    } else {
        payload = lehmerk::records_to_table(records);
    }

    if (args.out_path.empty()) {
        std::cout << payload;
        return kExitPass;
    }
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << args.out_path << '\n';
        return kExitIo;
    }
    out << payload;
    out.flush();
    if (!out) {
        std::cerr << "write failed: " << args.out_path << '\n';
        return kExitIo;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Euler totient toolkit for quadratic number fields"};
    app.require_subcommand(1);
    app.set_config("--config", "", "optional key=value config file; flags take precedence");

    PhiArgs phi_args;
    auto* phi_cmd = app.add_subcommand("phi", "evaluate phi_K(d)");
    phi_cmd->add_option("--field", phi_args.field_m, "field radicand m (1 means plain Q)")
        ->required();
    phi_cmd->add_option("--d", phi_args.d, "modulus d >= 1")->required()->check(CLI::PositiveNumber);
    phi_cmd->add_flag("--check", phi_args.check, "cross-check against the enumeration oracle");
    phi_cmd->add_option("--oracle-cap", phi_args.oracle_cap, "enumeration cap for the oracle")
        ->envname("LEHMERK_ORACLE_CAP");

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "classification records for d in [2, max]");
    classify_cmd->add_option("--field", classify_args.field_m, "field radicand m")->required();
    classify_cmd->add_option("--max", classify_args.d_max, "largest d")->required();
    classify_cmd->add_option("--format", classify_args.format, "csv|jsonl|table")
        ->check(CLI::IsMember({"csv", "jsonl", "table"}));
    classify_cmd->add_option("--out", classify_args.out_path, "output path (default stdout)");
    classify_cmd->add_flag("--squarefree-only", classify_args.squarefree_only,
                           "only squarefree d");
    classify_cmd->add_option("--threads", classify_args.threads, "worker threads")
        ->check(CLI::PositiveNumber);

    lehmerk::i64 split_field = -1;
    lehmerk::i64 split_p = 2;
    auto* split_cmd = app.add_subcommand("split", "splitting type of a rational prime");
    split_cmd->add_option("--field", split_field, "field radicand m")->required();
    split_cmd->add_option("--p", split_p, "rational prime")->required()->check(CLI::PositiveNumber);

    std::string verify_suite;
    lehmerk::i64 verify_field = -1;
    lehmerk::u64 verify_bound = 0;
    bool verify_list = false;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", verify_suite, "suite name");
    verify_cmd->add_option("--field", verify_field, "field radicand m");
    verify_cmd->add_option("--max", verify_bound, "scan bound (default per suite)");
    verify_cmd->add_flag("--list", verify_list, "list registered suites");

    lehmerk::i64 crt_field = -1, crt_m = 3, crt_n = 5;
    auto* crt_cmd = app.add_subcommand("crt", "exhaustive CRT ring-isomorphism check");
    crt_cmd->add_option("--field", crt_field, "field radicand m")->required();
    crt_cmd->add_option("--m", crt_m, "first modulus")->required()->check(CLI::PositiveNumber);
    crt_cmd->add_option("--n", crt_n, "second modulus")->required()->check(CLI::PositiveNumber);

    lehmerk::u64 scan_w = 1;
    std::string scan_l = "1/1";
    lehmerk::u64 scan_bound = 1'000'000;
    auto* scan_cmd = app.add_subcommand("scan-ratio", "squarefree d with w | d and (d-1)/phi(d) = l");
    scan_cmd->add_option("--w", scan_w, "squarefree divisor w")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--l", scan_l, "target ratio, as num/den")->required();
    scan_cmd->add_option("--max", scan_bound, "scan bound")->required();

    int zeta_s = 2;
    std::string zeta_tol = "1/100";
    auto* zeta_cmd = app.add_subcommand("zeta", "exact rational bracket of zeta(s)");
    zeta_cmd->add_option("--s", zeta_s, "integer argument s >= 2")->required();
    zeta_cmd->add_option("--tol", zeta_tol, "bracket width, as num/den");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (phi_cmd->parsed()) return run_phi(phi_args);
        if (classify_cmd->parsed()) return run_classify(classify_args);

        if (split_cmd->parsed()) {
            auto field = lehmerk::make_field(split_field);
            std::cout << lehmerk::to_string(
                             lehmerk::splitting_type(field, static_cast<lehmerk::u64>(split_p)))
                      << '\n';
            return kExitPass;
        }

        if (verify_cmd->parsed()) {
            if (verify_list) {
                for (const auto& name : lehmerk::suite_names()) std::cout << name << '\n';
                return kExitPass;
            }
            if (verify_suite.empty()) {
                std::cerr << "verify requires --suite (or --list)" << '\n';
                return kExitUsage;
            }
            auto field = lehmerk::make_field(verify_field);
            lehmerk::u64 bound =
                verify_bound > 0 ? verify_bound : lehmerk::suite_default_bound(verify_suite);
            auto report = lehmerk::run_suite(verify_suite, field, bound);
            std::cout << lehmerk::format_report(report) << '\n';
            return report.passed() ? kExitPass : kExitCounterexample;
        }

        if (crt_cmd->parsed()) {
            auto field = lehmerk::make_field(crt_field);
            auto report = lehmerk::crt_suite(field, crt_m, crt_n);
            std::cout << lehmerk::format_report(report) << '\n';
            return report.passed() ? kExitPass : kExitCounterexample;
        }

        if (scan_cmd->parsed()) {
            auto result =
                lehmerk::ratio_scan(scan_w, lehmerk::parse_rational(scan_l), scan_bound);
            for (auto d : result.matches) std::cout << d << '\n';
            std::cout << "hypothesis l < w/phi(w): "
                      << (result.hypothesis_holds ? "true" : "false") << '\n';
            return kExitPass;
        }

        if (zeta_cmd->parsed()) {
            auto bracket = lehmerk::zeta_bounds(zeta_s, lehmerk::parse_rational(zeta_tol));
            std::cout << "zeta(" << zeta_s << ") lower = "
                      << lehmerk::format_rational(bracket.lower) << " (~"
                      << bracket.lower.convert_to<double>() << ")\n";
            std::cout << "zeta(" << zeta_s << ") upper = "
                      << lehmerk::format_rational(bracket.upper) << " (~"
                      << bracket.upper.convert_to<double>() << ")\n";
            return kExitPass;
        }
    } catch (const lehmerk::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lehmerk::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lehmerk::Overflow& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCounterexample;
    }
    return kExitUsage;
}
