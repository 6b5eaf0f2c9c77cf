// End-to-end checks of the command-line surface: formats, exit codes,
// determinism. Run as: spermat_cli_smoke <path-to-cli>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
int g_failures = 0;

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliRun run;
    if (!pipe) return run;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) run.output.append(buf, got);
    const int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

void expect(bool ok, const std::string& label, const std::string& detail = "") {
    std::cout << (ok ? "[ok] " : "[FAILED] ") << label << "\n";
    if (!ok) {
        if (!detail.empty()) std::cout << "    " << detail << "\n";
        ++g_failures;
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    g_cli = argc > 1 ? argv[1] : "./build/spermat";

    const auto dir = std::filesystem::temp_directory_path() / "spermat-cli-smoke";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    setenv("SPERMAT_CACHE_DIR", (dir / "cache").string().c_str(), 1);

    // ---- count ----
    {
        const auto r = run_cli("count -n 2");
        expect(r.exit_code == 0 && contains(r.output, "xi=7 eta=56 p=7/15"),
               "count -n 2 prints the exact values", r.output);
        const auto r3 = run_cli("count -n 3");
        expect(r3.exit_code == 0 && contains(r3.output, "xi=17972 eta=419250816") &&
                   contains(r3.output, "0.385211"),
               "count -n 3 prints the exact values", r3.output);
        const auto r1 = run_cli("count -n 1");
        expect(r1.exit_code == 0 && contains(r1.output, "xi=0 eta=0") &&
                   contains(r1.output, "undefined"),
               "count -n 1 still prints xi and eta, p undefined", r1.output);

        const auto json_path = (dir / "report3.json").string();
        const auto rj = run_cli("count -n 3 --format json --output " + json_path);
        const std::string payload = slurp(json_path);
        expect(rj.exit_code == 0 && contains(payload, "\"xi\": \"17972\"") &&
                   contains(payload, "\"decimal\": \"0.385211\""),
               "count JSON report carries decimal strings", payload);
    }

    // ---- classes ----
    {
        const auto csv_path = (dir / "n3.csv").string();
        const auto r = run_cli("classes -n 3 --format csv --output " + csv_path);
        const std::string csv = slurp(csv_path);
        const auto rows = std::count(csv.begin(), csv.end(), '\n');
        expect(r.exit_code == 0 && rows == 37, "classes -n 3 CSV has 36 data rows",
               "rows=" + std::to_string(rows));

        const auto rk = run_cli("classes -n 3 --k 9");
        expect(rk.exit_code == 0 && contains(rk.output, "k=9: 1 classes, orbit sum 1 = C(9,9)"),
               "classes --k filters to one edge count", rk.output);

        const auto rbig = run_cli("classes -n 9");
        expect(rbig.exit_code == 3, "classes -n 9 exits 3 (infeasible)",
               "exit=" + std::to_string(rbig.exit_code));

        // byte-identical reruns once the cache exists
        const auto ja = (dir / "a.json").string();
        const auto jb = (dir / "b.json").string();
        run_cli("classes -n 2 --format json --output " + ja);
        run_cli("classes -n 2 --format json --output " + jb);
        expect(!slurp(ja).empty() && slurp(ja) == slurp(jb),
               "classes JSON reruns are byte-identical from the cache");
    }

    // ---- convert ----
    {
        const auto pi_prime = dir / "pi_prime.json";
        std::ofstream(pi_prime) << "{\"n\": 3, \"entries\": [[[1,2],[3,1],[2,3]],"
                                   "[[2,1],[3,3],[1,2]],[[3,3],[1,2],[2,1]]]}";
        const auto txt = (dir / "pi_prime.txt").string();
        const auto r = run_cli("convert " + pi_prime.string() + " --output " + txt);
        expect(r.exit_code == 0, "convert Pi JSON -> S-permutation text", r.output);
        const auto back = (dir / "back.json").string();
        const auto r2 = run_cli("convert " + txt + " --output " + back);
        const auto txt2 = (dir / "pi_prime2.txt").string();
        const auto r3 = run_cli("convert " + back + " --output " + txt2);
        expect(r2.exit_code == 0 && r3.exit_code == 0 && !slurp(txt).empty() &&
                   slurp(txt) == slurp(txt2),
               "the produced grid re-validates and round-trips", r2.output + r3.output);

        const auto pi2 = dir / "pi2.json";
        std::ofstream(pi2) << "{\"n\": 3, \"entries\": [[[1,3],[3,2],[2,1]],"
                              "[[3,1],[1,1],[2,2]],[[3,2],[1,3],[2,3]]]}";
        const auto pi3 = dir / "pi3.json";
        std::ofstream(pi3) << "{\"n\": 3, \"entries\": [[[1,2],[3,3],[2,1]],"
                              "[[2,1],[3,2],[1,2]],[[3,3],[1,1],[2,3]]]}";
        const auto rc = run_cli("convert --check-disjoint " + pi2.string() + " " + pi3.string());
        expect(rc.exit_code == 0 &&
                   contains(rc.output, "NOT disjoint; coincidences at (1,3),(3,3)"),
               "check-disjoint reports the two coincidences", rc.output);
        const auto rd = run_cli("convert --check-disjoint " + pi_prime.string() + " " +
                                pi2.string());
        expect(rd.exit_code == 0 && contains(rd.output, "disjoint") &&
                   !contains(rd.output, "NOT"),
               "check-disjoint confirms the disjoint pair", rd.output);

        const auto bad = dir / "bad.txt";
        std::ofstream(bad) << "2\n1 0 0 0\n0 0 1 0\n0 0 0 0\n0 1 0 0\n";
        const auto rb = run_cli("convert " + bad.string());
        expect(rb.exit_code == 2 && contains(rb.output, "RowViolation at row 3"),
               "malformed grid exits 2 naming the row", rb.output);

        const auto rmiss = run_cli("convert " + (dir / "nope.txt").string());
        expect(rmiss.exit_code == 2, "missing input file exits 2",
               "exit=" + std::to_string(rmiss.exit_code));
    }

    // ---- sample / verify ----
    {
        const auto r1 = run_cli("sample -n 1");
        expect(r1.exit_code == 2, "sample -n 1 exits 2 (p undefined)",
               "exit=" + std::to_string(r1.exit_code));

        const auto rs = run_cli("sample -n 2 --trials 2000 --seed 3");
        const auto rs2 = run_cli("sample -n 2 --trials 2000 --seed 3");
        expect(rs.exit_code == 0 && rs.output == rs2.output,
               "sample output is deterministic for a fixed seed");

        const auto json_path = (dir / "mc.json").string();
        run_cli("sample -n 2 --trials 500 --seed 9 --output " + json_path);
        const std::string payload = slurp(json_path);
        expect(contains(payload, "\"mode\": \"monte-carlo\"") &&
                   contains(payload, "\"seed\": 9") && contains(payload, "\"trials\": 500"),
               "sample JSON echoes seed and trials", payload);

        const int ci_status =
            std::system(("SPERMAT_CI=1 " + g_cli + " sample -n 2 --trials 10 >/dev/null 2>&1")
                            .c_str());
        expect(WIFEXITED(ci_status) && WEXITSTATUS(ci_status) == 2,
               "CI mode refuses a sample run without an explicit seed");

        const auto rv = run_cli("verify -n 2 --seed 1");
        expect(rv.exit_code == 0 && contains(rv.output, "all-pairs oracle") &&
                   contains(rv.output, "count 56"),
               "verify -n 2 passes and reports the all-pairs count", rv.output);
    }

    std::filesystem::remove_all(dir);
    if (g_failures == 0) {
        std::cout << "cli smoke: all checks passed\n";
        return 0;
    }
    std::cout << "cli smoke: " << g_failures << " check(s) FAILED\n";
    return 1;
}
