#include "spermat/graph_classes.hpp"

#include "spermat/version.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ctime>
#include <iostream>
#include <numeric>

namespace spermat {

namespace {

// Single-matrix group ops stay affordable through n=6 ((6!)^2 = 518400 pairs);
// beyond that is out of scope for this artifact.
constexpr int kGroupOpLimit = 6;

std::vector<std::vector<int>> index_permutations(int n) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

std::uint64_t transformed_code(const BinaryMatrix& m, const std::vector<int>& rho,
                               const std::vector<int>& sigma) {
    // new[i][j] = old[rho[i]][sigma[j]], packed MSB-first
    const int n = m.n();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            code = (code << 1) |
                   static_cast<std::uint64_t>(m.at(rho[static_cast<std::size_t>(i)],
                                                   sigma[static_cast<std::size_t>(j)]));
    return code;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

DegreeProfile psi_vector(const BinaryMatrix& m) {
    const int n = m.n();
    DegreeProfile d;
    d.n = n;
    d.psi.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) ++d.psi[static_cast<std::size_t>(m.row_sum(i))];
    for (int j = 0; j < n; ++j) ++d.psi[static_cast<std::size_t>(m.col_sum(j))];
    return d;
}

BinaryMatrix canonical_form(const BinaryMatrix& m) {
    const int n = m.n();
    if (n > kGroupOpLimit) throw InfeasibleSize(n, kGroupOpLimit, "canonical form");
    const auto perms = index_permutations(n);
    const int cells = n * n;

    std::uint64_t best = ~0ull;
    for (const auto& rho : perms) {
        for (const auto& sigma : perms) {
            // build row by row, abandoning as soon as the prefix exceeds best
            std::uint64_t acc = 0;
            bool abandoned = false;
            for (int i = 0; i < n; ++i) {
                std::uint64_t row = 0;
                for (int j = 0; j < n; ++j)
                    row = (row << 1) |
                          static_cast<std::uint64_t>(m.at(rho[static_cast<std::size_t>(i)],
                                                          sigma[static_cast<std::size_t>(j)]));
                acc = (acc << n) | row;
                const int remaining = cells - (i + 1) * n;
                if (acc > (best >> remaining)) {
                    abandoned = true;
                    break;
                }
            }
            if (!abandoned && acc < best) best = acc;
        }
    }
    return BinaryMatrix::from_code(n, best);
}

std::uint64_t orbit_size(const BinaryMatrix& m) {
    const int n = m.n();
    if (n > kGroupOpLimit) throw InfeasibleSize(n, kGroupOpLimit, "orbit size");
    const auto perms = index_permutations(n);
    const std::uint64_t self = m.code();
    std::uint64_t stabilizer = 0;
    for (const auto& rho : perms)
        for (const auto& sigma : perms)
            if (transformed_code(m, rho, sigma) == self) ++stabilizer;
    const std::uint64_t group = static_cast<std::uint64_t>(perms.size()) *
                                static_cast<std::uint64_t>(perms.size());
    return group / stabilizer;  // orbit–stabilizer; divides exactly
}

BigInt class_weight(const DegreeProfile& psi) {
    BigInt w = 1;
    for (int i = 0; i <= psi.n - 2; ++i)
        w *= ipow(factorial(psi.n - i), psi.psi[static_cast<std::size_t>(i)]);
    return w;
}

BigInt class_weight(const GraphClass& c) { return class_weight(c.psi); }

std::vector<const GraphClass*> ClassTable::with_edge_count(int k) const {
    std::vector<const GraphClass*> out;
    for (const auto& c : classes)
        if (c.k == k) out.push_back(&c);
    return out;
}

ClassTable enumerate_classes(int n, const EnumerateOptions& options) {
    const int limit = options.allow_large ? kLargeEnumerationLimit : kDefaultEnumerationLimit;
    if (n < 1 || n > limit) throw InfeasibleSize(n, limit, "class enumeration");
    if (n == kLargeEnumerationLimit)
        std::cerr << "warning: enumerating all 2^25 matrices at n=5; this takes a few seconds\n";

    const int cells = n * n;
    const std::uint64_t total = 1ull << cells;
    const std::uint64_t row_mask = (1ull << n) - 1;

    // column-swap lookup tables: colswap[c][v] = row value v with bits for
    // columns c and c+1 exchanged (column j lives at bit n-1-j)
    std::vector<std::vector<std::uint32_t>> colswap(static_cast<std::size_t>(n - 1));
    for (int c = 0; c + 1 < n; ++c) {
        auto& tab = colswap[static_cast<std::size_t>(c)];
        tab.resize(1u << n);
        const int hi = n - 1 - c, lo = n - 2 - c;
        for (std::uint32_t v = 0; v < (1u << n); ++v) {
            const std::uint32_t b1 = (v >> hi) & 1u, b2 = (v >> lo) & 1u;
            std::uint32_t w = v & ~((1u << hi) | (1u << lo));
            w |= b2 << hi;
            w |= b1 << lo;
            tab[v] = w;
        }
    }

    std::vector<bool> visited(total, false);
    std::vector<std::uint32_t> stack;
    ClassTable table;
    table.n = n;

    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        // ascending scan: the first unvisited member of an orbit is its lex-min
        visited[start] = true;
        stack.push_back(static_cast<std::uint32_t>(start));
        std::uint64_t orbit = 0;
        while (!stack.empty()) {
            const std::uint64_t code = stack.back();
            stack.pop_back();
            ++orbit;
            // adjacent row swaps
            for (int r = 0; r + 1 < n; ++r) {
                const int s_hi = (n - 1 - r) * n, s_lo = s_hi - n;
                const std::uint64_t a = (code >> s_hi) & row_mask;
                const std::uint64_t b = (code >> s_lo) & row_mask;
                const std::uint64_t next = (code & ~((row_mask << s_hi) | (row_mask << s_lo))) |
                                           (b << s_hi) | (a << s_lo);
                if (!visited[next]) {
                    visited[next] = true;
                    stack.push_back(static_cast<std::uint32_t>(next));
                }
            }
            // adjacent column swaps, row field by row field
            for (int c = 0; c + 1 < n; ++c) {
                const auto& tab = colswap[static_cast<std::size_t>(c)];
                std::uint64_t next = 0;
                for (int i = 0; i < n; ++i) {
                    const int shift = (n - 1 - i) * n;
                    next |= static_cast<std::uint64_t>(tab[(code >> shift) & row_mask]) << shift;
                }
                if (!visited[next]) {
                    visited[next] = true;
                    stack.push_back(static_cast<std::uint32_t>(next));
                }
            }
        }

        GraphClass cls;
        cls.n = n;
        cls.k = std::popcount(start);
        cls.canonical = BinaryMatrix::from_code(n, start);
        cls.orbit_size = orbit;
        cls.psi = psi_vector(cls.canonical);
        cls.weight = class_weight(cls.psi);
        table.classes.push_back(std::move(cls));
    }

    std::sort(table.classes.begin(), table.classes.end(),
              [](const GraphClass& a, const GraphClass& b) {
                  if (a.k != b.k) return a.k < b.k;
                  return a.canonical.code() < b.canonical.code();
              });
    table.generator = std::string("spermat ") + kVersion;
    table.created = utc_timestamp();
    return table;
}

void require_complete(const ClassTable& table) {
    const int n = table.n;
    if (n < 1) throw IncompleteTable("n must be >= 1");
    const int cells = n * n;
    std::vector<BigInt> sums(static_cast<std::size_t>(cells) + 1, 0);
    for (const auto& c : table.classes) {
        if (c.n != n) throw IncompleteTable("class with mismatched n");
        if (c.k < 0 || c.k > cells) throw IncompleteTable("class with edge count out of range");
        sums[static_cast<std::size_t>(c.k)] += c.orbit_size;
    }
    for (int k = 0; k <= cells; ++k)
        if (sums[static_cast<std::size_t>(k)] != binomial(cells, k))
            throw IncompleteTable("orbit sizes for k=" + std::to_string(k) +
                                  " do not sum to C(n^2,k)");
}

}  // namespace spermat
