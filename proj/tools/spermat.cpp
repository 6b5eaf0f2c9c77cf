// spermat — exact counting of disjoint S-permutation matrix pairs, with
// brute-force verification oracles.
//
// Subcommands: classes, count, verify, convert, sample.
// Exit codes: 0 success, 1 verification mismatch, 2 input/validation error,
// 3 infeasible size.

#include "spermat/cache.hpp"
#include "spermat/counting.hpp"
#include "spermat/io.hpp"
#include "spermat/oracle.hpp"
#include "spermat/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace spermat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

bool ci_mode() {
    const char* env = std::getenv("SPERMAT_CI");
    return env && *env;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty())
        std::cout << content;
    else
        write_file(output_path, content);
}

// ---------------- classes ----------------

struct ClassesArgs {
    int n = 2;
    int k_filter = -1;
    std::string output;
    std::string format = "text";
    bool force = false;
    bool allow_large = false;
};

int run_classes(const ClassesArgs& args) {
    const auto table = load_or_enumerate(args.n, {args.allow_large}, args.force);

    ClassTable filtered = table;
    if (args.k_filter >= 0) {
        filtered.classes.clear();
        for (const auto& c : table.classes)
            if (c.k == args.k_filter) filtered.classes.push_back(c);
    }

    if (args.format == "json") {
        emit(to_json(args.k_filter >= 0 ? filtered : table), args.output);
        if (args.output.empty()) return kExitOk;  // machine output only
    } else if (args.format == "csv") {
        emit(to_csv(filtered), args.output);
        if (args.output.empty()) return kExitOk;
    } else if (!args.output.empty()) {
        throw ValidationError("--output for classes requires --format json or csv");
    }

    const int cells = args.n * args.n;
    std::cout << "n=" << args.n << ": " << table.classes.size() << " classes\n";
    std::ostringstream sums;
    bool all_match = true;
    for (int k = 0; k <= cells; ++k) {
        if (args.k_filter >= 0 && k != args.k_filter) continue;
        BigInt sum = 0;
        int count = 0;
        for (const auto& c : table.classes)
            if (c.k == k) {
                sum += c.orbit_size;
                ++count;
            }
        if (args.k_filter < 0) {
            sums << (k ? "," : "") << sum.str();
            if (sum != binomial(cells, k)) all_match = false;
        } else {
            std::cout << "k=" << k << ": " << count << " classes, orbit sum " << sum.str()
                      << (sum == binomial(cells, k) ? " = " : " != ") << "C(" << cells << ","
                      << k << ")\n";
        }
    }
    if (args.k_filter < 0)
        std::cout << "k-sums: " << sums.str() << (all_match ? " = " : " != ") << "C(" << cells
                  << ",k)\n";
    if (args.format == "text") {
        for (const auto& c : filtered.classes) {
            std::cout << "  k=" << c.k << " orbit=" << c.orbit_size << " psi=[";
            for (std::size_t i = 0; i < c.psi.psi.size(); ++i)
                std::cout << (i ? "," : "") << c.psi.psi[i];
            std::cout << "] weight=" << c.weight.str() << " canonical=";
            const auto rows = c.canonical.to_bit_rows();
            for (std::size_t i = 0; i < rows.size(); ++i) std::cout << (i ? "/" : "") << rows[i];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// ---------------- count ----------------

struct CountArgs {
    int n = 2;
    std::string output;
    std::string format = "text";
    int places = 6;
    bool force = false;
    bool allow_large = false;
};

int run_count(const CountArgs& args) {
    auto report = cached_full_report(args.n, {args.allow_large}, args.force);
    if (args.places != report.decimal_places && report.p) {
        report.decimal_places = args.places;
        report.p_decimal = decimal_string(*report.p, args.places);
    }

    std::ostringstream line;
    line << "xi=" << report.xi.str() << " eta=" << report.eta.str();
    if (report.p) {
        line << " p=" << boost::multiprecision::numerator(*report.p).str() << "/"
             << boost::multiprecision::denominator(*report.p).str();
        line << " ≈ " << report.p_decimal;
    } else {
        line << " p=undefined (n=1: there is no second matrix to compare with)";
    }

    const bool json_to_stdout = args.format == "json" && args.output.empty();
    if (!json_to_stdout) std::cout << line.str() << "\n";
    if (args.format == "json" || !args.output.empty()) emit(to_json(report), args.output);
    return kExitOk;
}

// ---------------- verify ----------------

struct VerifyArgs {
    int n = 2;
    std::uint64_t trials = 100000;
    bool trials_given = false;
    std::uint64_t seed = 1;
    int jobs = 0;
    bool allow_large = false;
};

class CheckReporter {
public:
    void check(const std::string& label, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << label;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        if (!ok) failures_++;
    }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

BinaryMatrix random_mask(int n, SplitMix64& gen) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, gen.next_below(2) == 1);
    return m;
}

int run_verify(const VerifyArgs& args) {
    CheckReporter rep;
    const auto table = load_or_enumerate(args.n, {args.allow_large}, false);
    const auto report = full_report(table);

    // internal identities of the formula side
    {
        const BigInt sigma = ipow(factorial(args.n), 2 * args.n);
        bool ok = report.q.front() == sigma && report.q.back() == 1 &&
                  2 * report.eta == sigma * report.xi;
        for (const auto& c : table.classes) {
            int sum = 0, weighted = 0;
            for (std::size_t i = 0; i < c.psi.psi.size(); ++i) {
                sum += c.psi.psi[i];
                weighted += static_cast<int>(i) * c.psi.psi[i];
            }
            if (sum != 2 * args.n || weighted != 2 * c.k) ok = false;
        }
        rep.check("table identities (q bounds, psi sums, 2*eta = sigma*xi)", ok,
                  "xi=" + report.xi.str() + " eta=" + report.eta.str());
    }

    if (args.n <= kExhaustiveLimit) {
        // fixed-reference counts, all equal to xi and independent of the reference
        std::vector<PiMatrix> refs;
        if (args.n <= 2) {
            PiEnumerator en(args.n);
            PiMatrix p = random_pi(args.n, args.seed);
            while (en.next(p)) refs.push_back(p);
        } else {
            for (int i = 0; i < 20; ++i) {
                SplitMix64 gen = SplitMix64::substream(args.seed, 1000 + static_cast<std::uint64_t>(i));
                refs.push_back(random_pi(args.n, gen));
            }
        }
        bool ok = true;
        BigInt first = -1;
        for (const auto& r : refs) {
            const BigInt c = count_disjoint_with(r);
            if (first < 0) first = c;
            if (c != first || c != report.xi) ok = false;
        }
        rep.check("fixed-reference oracle", ok,
                  "count " + first.str() + " = xi for " + std::to_string(refs.size()) +
                      " references");

        // Lemma spot checks: brute-force agreement count vs the closed form
        bool lemma_ok = true;
        for (int t = 0; t < 100; ++t) {
            SplitMix64 gen = SplitMix64::substream(args.seed, 2000 + t);
            const PiMatrix ref = random_pi(args.n, gen);
            const BinaryMatrix mask = random_mask(args.n, gen);
            if (count_agreeing(ref, mask) != agreement_count_formula(mask)) lemma_ok = false;
        }
        rep.check("agreement counts match the factorial product (100 random masks)", lemma_ok);
    }

    if (args.n <= 2 || (args.n == 3 && args.allow_large)) {
        const BigInt pairs = count_disjoint_pairs(args.n, {args.jobs, args.allow_large});
        rep.check("all-pairs oracle", pairs == report.eta,
                  "count " + pairs.str() + (pairs == report.eta ? " = eta" : " != eta"));
        if (args.n == 2) {
            // handshake: summing per-reference counts double-counts each pair
            PiEnumerator en(2);
            PiMatrix p = random_pi(2, 0);
            BigInt sum = 0;
            while (en.next(p)) sum += count_disjoint_with(p);
            rep.check("handshake identity", sum == 2 * pairs,
                      sum.str() + " = 2 * " + pairs.str());
        }
    }

    if (args.n >= 2 && (args.n > kExhaustiveLimit || args.trials_given)) {
        const auto mc = monte_carlo_p(args.n, args.trials, args.seed);
        const double p_formula =
            static_cast<double>(BigRat(*report.p).convert_to<double>());
        const double z = mc.standard_error > 0
                             ? (mc.estimate - p_formula) / mc.standard_error
                             : (mc.estimate == p_formula ? 0.0 : 1e9);
        std::ostringstream detail;
        detail.setf(std::ios::fixed);
        detail.precision(6);
        detail << "estimate " << mc.estimate << " vs formula " << p_formula << " (z="
               << std::abs(z) << ")";
        rep.check("Monte Carlo within 4 sigma of the formula value", std::abs(z) <= 4.0,
                  detail.str());
    }

    std::cout << (rep.failures() == 0 ? "verify: all checks passed\n"
                                      : "verify: " + std::to_string(rep.failures()) +
                                            " check(s) FAILED\n");
    return rep.failures() == 0 ? kExitOk : kExitVerifyMismatch;
}

// ---------------- convert ----------------

struct ConvertArgs {
    std::string input;
    std::string output;
    std::vector<std::string> check_disjoint;
};

bool looks_like_json(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

PiMatrix load_as_pi(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) return parse_pi_json(text);
    return sigma_to_pi(parse_s_perm_text(text));
}

int run_convert(const ConvertArgs& args) {
    if (!args.check_disjoint.empty()) {
        const PiMatrix a = load_as_pi(args.check_disjoint[0]);
        const PiMatrix b = load_as_pi(args.check_disjoint[1]);
        const BinaryMatrix coins = coincidence_matrix(a, b);
        if (coins.edge_count() == 0) {
            std::cout << "disjoint\n";
        } else {
            std::ostringstream where;
            bool first = true;
            for (int i = 0; i < coins.n(); ++i)
                for (int j = 0; j < coins.n(); ++j)
                    if (coins.at(i, j)) {
                        where << (first ? "" : ",") << "(" << i + 1 << "," << j + 1 << ")";
                        first = false;
                    }
            std::cout << "NOT disjoint; coincidences at " << where.str() << "\n";
        }
        return kExitOk;
    }

    const std::string text = read_file(args.input);
    if (looks_like_json(text)) {
        const PiMatrix p = parse_pi_json(text);
        emit(to_text(pi_to_sigma(p)), args.output);
    } else {
        const SPermMatrix m = parse_s_perm_text(text);
        emit(to_json(sigma_to_pi(m)), args.output);
    }
    return kExitOk;
}

// ---------------- sample ----------------

struct SampleArgs {
    int n = 3;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string output;
    bool allow_large = false;
};

int run_sample(const SampleArgs& args) {
    const auto start = std::chrono::steady_clock::now();
    const auto mc = monte_carlo_p(args.n, args.trials, args.seed);

    std::cout.setf(std::ios::fixed);
    std::cout.precision(6);
    std::cout << "n=" << args.n << " trials=" << mc.trials << " seed=" << mc.seed
              << " equal_redraws=" << mc.equal_redraws << "\n";
    std::cout << "estimate=" << mc.estimate << " stderr=" << mc.standard_error
              << (mc.degenerate ? " (degenerate sample; stderr unreliable)" : "") << "\n";

    // compare with the exact value when the class table is within reach
    const int limit = args.allow_large ? kLargeEnumerationLimit : kDefaultEnumerationLimit;
    if (args.n <= limit) {
        const auto table = load_or_enumerate(args.n, {args.allow_large}, false);
        const BigRat p = probability(table);
        const double p_formula = p.convert_to<double>();
        std::cout << "formula=" << decimal_string(p, 6);
        if (mc.standard_error > 0)
            std::cout << " z=" << (mc.estimate - p_formula) / mc.standard_error;
        std::cout << "\n";
    }

    if (!args.output.empty()) {
        OracleResult res;
        res.mode = "monte-carlo";
        res.n = args.n;
        res.count = mc.disjoint_count;
        res.monte_carlo = mc;
        res.elapsed_ms = seconds_since(start) * 1000.0;
        write_file(args.output, to_json(res));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and empirical counting of disjoint S-permutation matrix pairs"};
    app.set_version_flag("--version", std::string("spermat ") + kVersion);
    app.require_subcommand(1);

    ClassesArgs classes_args;
    auto* classes_cmd =
        app.add_subcommand("classes", "Enumerate binary-matrix classes under row/column permutation");
    classes_cmd->add_option("-n", classes_args.n, "Block size n")->required();
    classes_cmd->add_option("--k", classes_args.k_filter, "Only classes with this edge count");
    classes_cmd->add_option("--output", classes_args.output, "Write table to this file");
    classes_cmd->add_option("--format", classes_args.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    classes_cmd->add_flag("--force", classes_args.force, "Regenerate, ignoring the cache");
    classes_cmd->add_flag("--allow-large", classes_args.allow_large, "Permit n=5");

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Evaluate xi, eta and p(n) exactly");
    count_cmd->add_option("-n", count_args.n, "Block size n")->required();
    count_cmd->add_option("--output", count_args.output, "Write the JSON report to this file");
    count_cmd->add_option("--format", count_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    count_cmd->add_option("--places", count_args.places, "Decimal places for p (default 6)");
    count_cmd->add_flag("--force", count_args.force, "Regenerate the class table");
    count_cmd->add_flag("--allow-large", count_args.allow_large, "Permit n=5");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "Check the formula against brute-force oracles");
    verify_cmd->add_option("-n", verify_args.n, "Block size n")->required();
    auto* verify_trials =
        verify_cmd->add_option("--trials", verify_args.trials, "Monte Carlo trials");
    auto* verify_seed = verify_cmd->add_option("--seed", verify_args.seed, "PRNG seed");
    verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads (0 = all cores)");
    verify_cmd->add_flag("--allow-large", verify_args.allow_large,
                         "Permit the long n=3 all-pairs scan / n=5 tables");

    ConvertArgs convert_args;
    auto* convert_cmd =
        app.add_subcommand("convert", "Convert between S-permutation text and Pi JSON");
    convert_cmd->add_option("input", convert_args.input, "Input file");
    convert_cmd->add_option("--output", convert_args.output, "Output file (default stdout)");
    convert_cmd
        ->add_option("--check-disjoint", convert_args.check_disjoint,
                     "Two files: report disjointness and the coincidence positions")
        ->expected(2);

    SampleArgs sample_args;
    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo estimate of p(n)");
    sample_cmd->add_option("-n", sample_args.n, "Block size n")->required();
    sample_cmd->add_option("--trials", sample_args.trials, "Number of pairs to draw");
    auto* sample_seed = sample_cmd->add_option("--seed", sample_args.seed, "PRNG seed");
    sample_cmd->add_option("--output", sample_args.output, "Write a JSON report to this file");
    sample_cmd->add_flag("--allow-large", sample_args.allow_large,
                         "Permit the n=5 table for the formula comparison");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classes_cmd->parsed()) return run_classes(classes_args);
        if (count_cmd->parsed()) return run_count(count_args);
        if (verify_cmd->parsed()) {
            verify_args.trials_given = verify_trials->count() > 0;
            if (ci_mode() && verify_seed->count() == 0)
                throw ValidationError("SPERMAT_CI is set: verify requires an explicit --seed");
            return run_verify(verify_args);
        }
        if (convert_cmd->parsed()) {
            if (convert_args.check_disjoint.empty() && convert_args.input.empty())
                throw ValidationError("convert needs an input file or --check-disjoint A B");
            return run_convert(convert_args);
        }
        if (sample_cmd->parsed()) {
            if (ci_mode() && sample_seed->count() == 0)
                throw ValidationError("SPERMAT_CI is set: sample requires an explicit --seed");
            return run_sample(sample_args);
        }
    } catch (const InfeasibleSize& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const UndefinedForN1& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
