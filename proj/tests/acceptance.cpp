// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
//   spermat_acceptance <path-to-cli> [--with-all-pairs-n3]
//
// The long n=3 all-pairs criterion is off by default; enable it with the flag
// or SPERMAT_ACCEPT_ALL_PAIRS=1.

#include "spermat/cache.hpp"
#include "spermat/counting.hpp"
#include "spermat/io.hpp"
#include "spermat/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace spermat;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string output;
    double seconds = 0.0;
};

std::string g_cli_path;

CliRun run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " 2>&1";
    const auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    CliRun run;
    if (!pipe) {
        run.output = "popen failed";
        return run;
    }
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) run.output.append(buf, got);
    const int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok, double seconds, double budget,
            const std::string& detail = "") {
    const bool in_time = seconds <= budget;
    std::ostringstream line;
    line << (ok && in_time ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << label
         << " (" << std::fixed;
    line.precision(2);
    line << seconds << " s, budget " << budget << " s)";
    if (!detail.empty()) line << " — " << detail;
    std::cout << line.str() << "\n";
    if (!ok || !in_time) ++g_failures;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

double parse_after(const std::string& text, const std::string& key) {
    const auto pos = text.find(key);
    if (pos == std::string::npos) return -1.0;
    return std::atof(text.c_str() + pos + key.size());
}

std::vector<PiMatrix> all_pi(int n) {
    std::vector<PiMatrix> out;
    PiEnumerator en(n);
    PiMatrix p = random_pi(n, 0);
    while (en.next(p)) out.push_back(p);
    return out;
}

// ---- criterion bodies ----

void criterion_1_classes_n2() {
    const auto run = run_cli("classes -n 2 --force");
    bool ok = run.exit_code == 0 && contains(run.output, "n=2: 7 classes") &&
              contains(run.output, "k-sums: 1,4,6,4,1 = C(4,k)");

    const auto table = enumerate_classes(2);
    using Row = std::tuple<int, std::uint64_t, std::vector<int>>;
    std::vector<Row> rows;
    for (const auto& c : table.classes)
        if (c.k > 0) rows.emplace_back(c.k, c.orbit_size, c.psi.psi);
    std::vector<Row> expected = {
        {1, 4, {2, 2, 0}}, {2, 2, {0, 4, 0}}, {2, 2, {1, 2, 1}},
        {2, 2, {1, 2, 1}}, {3, 4, {0, 2, 2}}, {4, 1, {0, 0, 4}},
    };
    std::sort(rows.begin(), rows.end());
    std::sort(expected.begin(), expected.end());
    if (table.classes.size() != 7 || rows != expected) ok = false;

    report(1, "class catalogue n=2 exact", ok, run.seconds, 1.0);
}

void criterion_2_classes_n3() {
    const auto run = run_cli("classes -n 3 --force");
    bool ok = run.exit_code == 0 && contains(run.output, "n=3: 36 classes") &&
              contains(run.output, "k-sums: 1,9,36,84,126,126,84,36,9,1 = C(9,k)");

    static constexpr std::array<std::array<int, 4>, 35> catalogue = {{
        {9, 4, 2, 1},  {18, 2, 4, 2}, {9, 3, 2, 2},  {9, 3, 2, 2},  {6, 0, 6, 3},
        {18, 1, 4, 3}, {18, 1, 4, 3}, {36, 2, 2, 3}, {3, 2, 3, 3},  {3, 2, 3, 3},
        {9, 2, 0, 4},  {9, 0, 4, 4},  {36, 0, 4, 4}, {18, 1, 2, 4}, {18, 1, 2, 4},
        {18, 1, 3, 4}, {18, 1, 3, 4}, {9, 0, 4, 5},  {9, 0, 2, 5},  {36, 0, 2, 5},
        {18, 0, 3, 5}, {18, 0, 3, 5}, {18, 1, 1, 5}, {18, 1, 1, 5}, {6, 0, 0, 6},
        {18, 0, 1, 6}, {18, 0, 1, 6}, {36, 0, 2, 6}, {3, 1, 0, 6},  {3, 1, 0, 6},
        {18, 0, 0, 7}, {9, 0, 1, 7},  {9, 0, 1, 7},  {9, 0, 0, 8},  {1, 0, 0, 9},
    }};
    const auto table = enumerate_classes(3);
    std::vector<std::array<int, 4>> rows;
    for (const auto& c : table.classes)
        if (c.k > 0)
            rows.push_back({static_cast<int>(c.orbit_size), c.psi.psi[0], c.psi.psi[1], c.k});
    std::vector<std::array<int, 4>> expected(catalogue.begin(), catalogue.end());
    std::sort(rows.begin(), rows.end());
    std::sort(expected.begin(), expected.end());
    if (rows != expected) ok = false;
    try {
        require_complete(table);  // per-k orbit sums = C(9,k)
    } catch (const Error&) {
        ok = false;
    }

    report(2, "class catalogue n=3 matches the 35 published rows", ok, run.seconds, 10.0);
}

void criterion_3_formula_values() {
    // tables are cached by now; the reports must come out instantly
    const auto start = std::chrono::steady_clock::now();
    const auto r2 = full_report(load_or_enumerate(2));
    const auto r3 = full_report(load_or_enumerate(3));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const bool ok = r2.xi == 7 && r2.eta == 56 && r2.p && *r2.p == BigRat(7, 15) &&
                    r3.xi == 17972 && r3.eta == 419250816 && r3.p &&
                    *r3.p == BigRat(17972, 46655) && r3.p_decimal == "0.385211";
    report(3, "formula values xi/eta/p at n=2,3", ok, secs, 1.0,
           "xi3=" + r3.xi.str() + " eta3=" + r3.eta.str() + " p3=" + r3.p_decimal);
}

void criterion_4_oracle_n2() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = count_disjoint_pairs(2) == 56;
    const auto pis = all_pi(2);
    ok = ok && pis.size() == 16;
    for (const auto& p : pis)
        if (count_disjoint_with(p) != 7) ok = false;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(4, "exhaustive oracle n=2 (all-pairs 56/120, per-reference 7)", ok, secs, 1.0);
}

void criterion_5_oracle_n3() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    int checked = 0;
    for (int i = 0; i < 20; ++i) {
        SplitMix64 gen = SplitMix64::substream(1, 1000 + static_cast<std::uint64_t>(i));
        const auto ref = random_pi(3, gen);
        if (count_disjoint_with(ref) != 17972) ok = false;
        ++checked;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(5, "reference-independent oracle n=3 (17972 for 20 references)", ok, secs, 60.0,
           std::to_string(checked) + " references");
}

void criterion_6_lemma_oracle() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n : {2, 3}) {
        for (int t = 0; t < 100; ++t) {
            SplitMix64 gen = SplitMix64::substream(2, static_cast<std::uint64_t>(1000 * n + t));
            const auto ref = random_pi(n, gen);
            BinaryMatrix mask(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) mask.set(i, j, gen.next_below(2) == 1);
            if (count_agreeing(ref, mask) != agreement_count_formula(mask)) ok = false;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(6, "agreement counts equal the factorial product (100 masks each at n=2,3)", ok, secs,
           60.0);
}

void criterion_7_identity_suite() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        const auto table = load_or_enumerate(n);
        try {
            require_complete(table);
        } catch (const Error&) {
            ok = false;
        }
        for (const auto& c : table.classes) {
            int sum = 0, weighted = 0;
            for (std::size_t i = 0; i < c.psi.psi.size(); ++i) {
                sum += c.psi.psi[i];
                weighted += static_cast<int>(i) * c.psi.psi[i];
            }
            if (sum != 2 * n || weighted != 2 * c.k) ok = false;
        }
        const BigInt sigma = ipow(factorial(n), 2 * n);
        if (q_value(table, 0) != sigma) ok = false;
        if (q_value(table, n * n) != 1) ok = false;
        if (2 * eta(table) != sigma * xi(table)) ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(7, "identity suite n<=4 (psi sums, orbit sums, q bounds, eta identity)", ok, secs,
           60.0);
}

void criterion_8_monte_carlo() {
    // n=4 formula values must be reproduced exactly before the MC comparison
    const auto count4 = run_cli("count -n 4");
    bool pinned_ok = count4.exit_code == 0 &&
                     contains(count4.output, "xi=41685061617") &&
                     contains(count4.output, "eta=2294248126968596791296") &&
                     contains(count4.output, "0.378696");

    struct Case {
        std::string cmd;
        double p;
        std::string pinned_estimate;  // determinism guard for the fixed seed
    };
    const double p4 = BigRat(BigInt("41685061617"), BigInt("110075314175")).convert_to<double>();
    const std::vector<Case> cases = {
        {"sample -n 3 --trials 100000 --seed 42", 17972.0 / 46655.0, "estimate=0.389280"},
        {"sample -n 2 --trials 100000 --seed 7", 7.0 / 15.0, "estimate=0.465180"},
        {"sample -n 4 --trials 200000 --seed 11", p4, "estimate=0.378940"},
    };
    bool ok = pinned_ok;
    double total = count4.seconds;
    std::ostringstream detail;
    for (const auto& c : cases) {
        const auto run = run_cli(c.cmd);
        total += run.seconds;
        const double est = parse_after(run.output, "estimate=");
        const double se = parse_after(run.output, "stderr=");
        const bool in_band = run.exit_code == 0 && se > 0 && std::abs(est - c.p) <= 4.0 * se;
        const bool deterministic = contains(run.output, c.pinned_estimate);
        if (run.seconds > 120.0 || !in_band || !deterministic) ok = false;
        detail << "[n=" << c.cmd.substr(10, 1) << " z=" << std::abs(est - c.p) / se << "] ";
    }
    report(8, "Monte Carlo within 4 sigma at n=2,3,4 (n=4 values pinned)", ok, total, 360.0,
           detail.str());
}

void criterion_9_round_trip() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;

    const auto pis = all_pi(2);
    if (pis.size() != 16) ok = false;
    for (const auto& p : pis) {
        const auto a = pi_to_sigma(p);
        if (sigma_to_pi(a) != p) ok = false;
        if (SPermMatrix::validated_from_grid(a.expand()) != a) ok = false;
    }
    // disjointness transport on all 120 unordered pairs
    for (std::size_t i = 0; i < pis.size(); ++i)
        for (std::size_t j = i + 1; j < pis.size(); ++j)
            if (disjoint(pis[i], pis[j]) !=
                disjoint(pi_to_sigma(pis[i]), pi_to_sigma(pis[j])))
                ok = false;

    for (int n : {3, 4}) {
        for (int t = 0; t < 1000; ++t) {
            SplitMix64 gen = SplitMix64::substream(3, static_cast<std::uint64_t>(1000 * n + t));
            const auto p = random_pi(n, gen);
            const auto a = pi_to_sigma(p);
            if (sigma_to_pi(a) != p) ok = false;
            if (SPermMatrix::validated_from_grid(a.expand()) != a) ok = false;
            const auto q = random_pi(n, gen);
            if (disjoint(p, q) != disjoint(a, pi_to_sigma(q))) ok = false;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(9, "Sigma<->Pi round trip and disjointness transport", ok, secs, 120.0);
}

void criterion_10_all_pairs_n3() {
    const auto start = std::chrono::steady_clock::now();
    const BigInt pairs = count_disjoint_pairs(3, {0, true});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(10, "all-pairs n=3 equals 419250816 (optional)", pairs == 419250816, secs, 1800.0,
           "count=" + pairs.str());
}

}  // namespace

int main(int argc, char** argv) {
    g_cli_path = argc > 1 ? argv[1] : "./build/spermat";
    bool with_all_pairs = false;
    for (int i = 2; i < argc; ++i)
        if (std::string(argv[i]) == "--with-all-pairs-n3") with_all_pairs = true;
    if (const char* env = std::getenv("SPERMAT_ACCEPT_ALL_PAIRS"); env && *env)
        with_all_pairs = true;

    // isolated cache shared by this process and the CLI children
    const auto scratch =
        std::filesystem::temp_directory_path() / "spermat-acceptance-cache";
    std::filesystem::remove_all(scratch);
    std::filesystem::create_directories(scratch);
    setenv("SPERMAT_CACHE_DIR", scratch.string().c_str(), 1);

    const auto probe = run_cli("--version");
    if (probe.exit_code != 0) {
        std::cerr << "cannot run the CLI at '" << g_cli_path << "': " << probe.output << "\n";
        return 2;
    }

    criterion_1_classes_n2();
    criterion_2_classes_n3();
    criterion_3_formula_values();
    criterion_4_oracle_n2();
    criterion_5_oracle_n3();
    criterion_6_lemma_oracle();
    criterion_7_identity_suite();
    criterion_8_monte_carlo();
    criterion_9_round_trip();
    if (with_all_pairs)
        criterion_10_all_pairs_n3();
    else
        std::cout << "[SKIP] criterion 10: all-pairs n=3 (enable with --with-all-pairs-n3)\n";

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion/criteria FAILED\n";
    return 1;
}
