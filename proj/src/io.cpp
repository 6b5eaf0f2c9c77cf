#include "spermat/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace spermat {

namespace {

using nlohmann::json;

std::vector<std::vector<int>> parse_grid(const std::string& text, const char* what,
                                         bool binary) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    int n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (ls >> n) {
            std::string rest;
            if (ls >> rest) throw ParseError("expected a single integer n on the first line", lineno);
            break;
        }
        // allow leading blank lines
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError(std::string("expected n on the first line of ") + what, lineno);
    }
    if (n < 1) throw ParseError(std::string("missing or non-positive n in ") + what, lineno);

    const int side = n * n;
    const int min_value = binary ? 0 : 1;
    const int max_value = binary ? 1 : side;
    std::vector<std::vector<int>> grid;
    grid.reserve(static_cast<std::size_t>(side));
    while (static_cast<int>(grid.size()) < side && std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) {
            if (v < min_value || v > max_value)
                throw ParseError("value " + std::to_string(v) + " out of range at row " +
                                     std::to_string(grid.size() + 1),
                                 lineno);
            row.push_back(v);
        }
        std::string rest;
        if (ls.clear(), ls >> rest)
            throw ParseError("non-numeric token '" + rest + "'", lineno);
        if (static_cast<int>(row.size()) != side)
            throw ParseError("expected " + std::to_string(side) + " values, got " +
                                 std::to_string(row.size()),
                             lineno);
        grid.push_back(std::move(row));
    }
    if (static_cast<int>(grid.size()) != side)
        throw ParseError(std::string(what) + " ended after " + std::to_string(grid.size()) +
                             " of " + std::to_string(side) + " rows",
                         lineno);
    return grid;
}

json pi_to_json_value(const PiMatrix& p) {
    json entries = json::array();
    for (int i = 0; i < p.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < p.n(); ++j) {
            const PiEntry& e = p.at(i, j);
            row.push_back(json::array({e.a, e.b}));
        }
        entries.push_back(std::move(row));
    }
    return json{{"n", p.n()}, {"entries", std::move(entries)}};
}

}  // namespace

std::string to_text(const SPermMatrix& m) {
    std::ostringstream out;
    out << m.n() << "\n";
    const auto grid = m.expand();
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
        out << "\n";
    }
    return out.str();
}

SPermMatrix parse_s_perm_text(const std::string& text) {
    return SPermMatrix::validated_from_grid(parse_grid(text, "S-permutation grid", true));
}

std::string to_text(const SudokuMatrix& m) {
    std::ostringstream out;
    out << m.n() << "\n";
    for (int r = 0; r < m.side(); ++r) {
        for (int c = 0; c < m.side(); ++c) out << (c ? " " : "") << m.at(r, c);
        out << "\n";
    }
    return out.str();
}

SudokuMatrix parse_sudoku_text(const std::string& text) {
    return SudokuMatrix::validated(parse_grid(text, "Sudoku grid", false));
}

std::string to_json(const PiMatrix& p) { return pi_to_json_value(p).dump(2) + "\n"; }

PiMatrix parse_pi_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
            throw ParseError("PiMatrix JSON must be an object with \"n\" and \"entries\"");
        const int n = doc["n"].get<int>();
        if (n < 1) throw ParseError("n must be >= 1");
        const auto& entries = doc["entries"];
        if (!entries.is_array() || static_cast<int>(entries.size()) != n)
            throw ParseError("\"entries\" must be an array of n rows");
        std::vector<PiEntry> flat;
        flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto& row = entries[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError("row " + std::to_string(i + 1) + " must hold n pairs");
            for (int j = 0; j < n; ++j) {
                const auto& pair = row[static_cast<std::size_t>(j)];
                if (!pair.is_array() || pair.size() != 2)
                    throw ParseError("entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ") must be a [a,b] pair");
                flat.push_back({pair[0].get<int>(), pair[1].get<int>()});
            }
        }
        return PiMatrix::validated(n, std::move(flat));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("PiMatrix JSON: ") + e.what());
    }
}

std::string to_json(const ClassTable& table) {
    json classes = json::array();
    for (const auto& c : table.classes) {
        classes.push_back(json{{"k", c.k},
                               {"canonical", c.canonical.to_bit_rows()},
                               {"orbit_size", c.orbit_size},
                               {"psi", c.psi.psi},
                               {"weight", c.weight.str()}});
    }
    json doc{{"n", table.n},
             {"classes", std::move(classes)},
             {"meta", json{{"generator", table.generator}, {"created", table.created}}}};
    return doc.dump(2) + "\n";
}

ClassTable parse_class_table_json(const std::string& text) {
    ClassTable table;
    try {
        const json doc = json::parse(text);
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("classes"))
            throw ParseError("ClassTable JSON must be an object with \"n\" and \"classes\"");
        table.n = doc["n"].get<int>();
        if (doc.contains("meta")) {
            const auto& meta = doc["meta"];
            table.generator = meta.value("generator", "");
            table.created = meta.value("created", "");
        }
        for (const auto& jc : doc["classes"]) {
            GraphClass c;
            c.n = table.n;
            c.k = jc.at("k").get<int>();
            c.canonical =
                BinaryMatrix::from_bit_rows(jc.at("canonical").get<std::vector<std::string>>());
            c.orbit_size = jc.at("orbit_size").get<std::uint64_t>();
            c.psi.n = table.n;
            c.psi.psi = jc.at("psi").get<std::vector<int>>();
            c.weight = BigInt(jc.at("weight").get<std::string>());
            // a stored table is rechecked, never trusted: the derived fields
            // must recompute from the canonical representative
            if (c.canonical.n() != table.n || c.canonical.edge_count() != c.k)
                throw IncompleteTable("canonical/k mismatch in stored class");
            if (psi_vector(c.canonical) != c.psi)
                throw IncompleteTable("psi does not match canonical in stored class");
            if (class_weight(c.psi) != c.weight)
                throw IncompleteTable("weight does not match psi in stored class");
            table.classes.push_back(std::move(c));
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("ClassTable JSON: ") + e.what());
    }
    require_complete(table);
    return table;
}

std::string to_csv(const ClassTable& table) {
    std::ostringstream out;
    out << "k,orbit_size";
    for (int i = 0; i <= table.n; ++i) out << ",psi_" << i;
    out << ",weight\n";
    for (const auto& c : table.classes) {
        out << c.k << "," << c.orbit_size;
        for (int v : c.psi.psi) out << "," << v;
        out << "," << c.weight.str() << "\n";
    }
    return out.str();
}

std::string to_json(const CountReport& report) {
    json q = json::array();
    for (const auto& v : report.q) q.push_back(v.str());
    json p;
    if (report.p) {
        p = json{{"num", boost::multiprecision::numerator(*report.p).str()},
                 {"den", boost::multiprecision::denominator(*report.p).str()},
                 {"decimal", report.p_decimal}};
    } else {
        p = nullptr;  // undefined for n=1
    }
    json doc{{"n", report.n},
             {"sigma_count", report.sigma_count.str()},
             {"q", std::move(q)},
             {"xi", report.xi.str()},
             {"eta", report.eta.str()},
             {"p", std::move(p)}};
    return doc.dump(2) + "\n";
}

std::string to_json(const OracleResult& result) {
    // elapsed time lives under "meta" so reruns stay byte-identical elsewhere
    json doc{{"mode", result.mode},
             {"n", result.n},
             {"count", result.count.str()},
             {"meta", json{{"elapsed_ms", result.elapsed_ms}}}};
    if (result.reference) doc["reference"] = pi_to_json_value(*result.reference);
    if (result.monte_carlo) {
        const auto& mc = *result.monte_carlo;
        doc["trials"] = mc.trials;
        doc["seed"] = mc.seed;
        doc["disjoint_count"] = mc.disjoint_count;
        doc["equal_redraws"] = mc.equal_redraws;
        doc["estimate"] = mc.estimate;
        doc["stderr"] = mc.standard_error;
        doc["degenerate"] = mc.degenerate;
    }
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

}  // namespace spermat
