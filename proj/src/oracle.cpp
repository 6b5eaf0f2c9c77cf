#include "spermat/oracle.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace spermat {

PackedPi PackedPi::pack(const PiMatrix& p) {
    const int n = p.n();
    if (n > kExhaustiveLimit) throw InfeasibleSize(n, kExhaustiveLimit, "packed Pi encoding");
    PackedPi out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int cell = i * n + j;
            const PiEntry& e = p.at(i, j);
            const std::uint64_t code = static_cast<std::uint64_t>((e.a - 1) * n + (e.b - 1));
            out.words[static_cast<std::size_t>(cell / 8)] |=
                code << (8 * (cell % 8));
        }
    return out;
}

std::array<std::uint64_t, 2> packed_pad_mask(int n) {
    std::array<std::uint64_t, 2> pad{};
    for (int cell = n * n; cell < 16; ++cell)
        pad[static_cast<std::size_t>(cell / 8)] |= 0xFFull << (8 * (cell % 8));
    return pad;
}

PiEnumerator::PiEnumerator(int n) : n_(n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (n > kExhaustiveLimit) throw InfeasibleSize(n, kExhaustiveLimit, "Pi_n enumeration");
    perms_ = Permutation::all(n);
    ranks_.assign(static_cast<std::size_t>(2 * n), 0);
}

BigInt PiEnumerator::total() const {
    return ipow(factorial(n_), 2 * n_);
}

bool PiEnumerator::next(PiMatrix& out) {
    if (done_) return false;
    std::vector<Permutation> rhos, sigmas;
    rhos.reserve(static_cast<std::size_t>(n_));
    sigmas.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) rhos.push_back(perms_[ranks_[static_cast<std::size_t>(i)]]);
    for (int j = 0; j < n_; ++j)
        sigmas.push_back(perms_[ranks_[static_cast<std::size_t>(n_ + j)]]);
    out = PiMatrix::from_permutations(rhos, sigmas);

    // odometer, last digit fastest
    int d = 2 * n_ - 1;
    while (d >= 0) {
        if (++ranks_[static_cast<std::size_t>(d)] < perms_.size()) break;
        ranks_[static_cast<std::size_t>(d)] = 0;
        --d;
    }
    if (d < 0) done_ = true;
    return true;
}

std::vector<PackedPi> all_packed_pi(int n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (n > kExhaustiveLimit) throw InfeasibleSize(n, kExhaustiveLimit, "Pi_n enumeration");

    const auto perms = Permutation::all(n);
    const std::size_t f = perms.size();

    // per-permutation byte contributions: row i under rho, column j under sigma
    // cell (i,j) code = (rho_i(j)-1)*n + (sigma_j(i)-1); split into the two
    // summands so each digit of the odometer contributes one precomputed word pair
    struct WordPair {
        std::uint64_t w0 = 0, w1 = 0;
    };
    // row_part[i][r]: contribution of rho_i = perms[r] to all cells of row i
    // col_part[j][r]: contribution of sigma_j = perms[r]
    std::vector<std::vector<WordPair>> row_part(static_cast<std::size_t>(n)),
        col_part(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& parts = row_part[static_cast<std::size_t>(i)];
        parts.resize(f);
        for (std::size_t r = 0; r < f; ++r)
            for (int j = 0; j < n; ++j) {
                const int cell = i * n + j;
                const std::uint64_t v =
                    static_cast<std::uint64_t>((perms[r].value_at(j + 1) - 1) * n);
                if (cell < 8)
                    parts[r].w0 |= v << (8 * cell);
                else
                    parts[r].w1 |= v << (8 * (cell - 8));
            }
    }
    for (int j = 0; j < n; ++j) {
        auto& parts = col_part[static_cast<std::size_t>(j)];
        parts.resize(f);
        for (std::size_t r = 0; r < f; ++r)
            for (int i = 0; i < n; ++i) {
                const int cell = i * n + j;
                const std::uint64_t v = static_cast<std::uint64_t>(perms[r].value_at(i + 1) - 1);
                if (cell < 8)
                    parts[r].w0 |= v << (8 * cell);
                else
                    parts[r].w1 |= v << (8 * (cell - 8));
            }
    }

    std::size_t total = 1;
    for (int d = 0; d < 2 * n; ++d) total *= f;

    std::vector<PackedPi> out;
    out.reserve(total);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(2 * n), 0);
    for (std::size_t count = 0; count < total; ++count) {
        PackedPi p;
        // cell code (a-1)*n + (b-1) assembled by addition: the row summand
        // (a-1)*n and column summand (b-1) share bits, and per-byte sums stay
        // below 256, so word-wide adds never carry across byte lanes
        for (int i = 0; i < n; ++i) {
            const auto& wp = row_part[static_cast<std::size_t>(i)][ranks[static_cast<std::size_t>(i)]];
            p.words[0] += wp.w0;
            p.words[1] += wp.w1;
        }
        for (int j = 0; j < n; ++j) {
            const auto& wp =
                col_part[static_cast<std::size_t>(j)][ranks[static_cast<std::size_t>(n + j)]];
            p.words[0] += wp.w0;
            p.words[1] += wp.w1;
        }
        out.push_back(p);
        int d = 2 * n - 1;
        while (d >= 0) {
            if (++ranks[static_cast<std::size_t>(d)] < f) break;
            ranks[static_cast<std::size_t>(d)] = 0;
            --d;
        }
    }
    return out;
}

BigInt count_disjoint_with(const PiMatrix& reference) {
    const int n = reference.n();
    if (n > kExhaustiveLimit)
        throw InfeasibleSize(n, kExhaustiveLimit, "exhaustive disjoint count");
    const auto all = all_packed_pi(n);
    const PackedPi ref = PackedPi::pack(reference);
    const auto pad = packed_pad_mask(n);
    std::uint64_t count = 0;
    for (const auto& p : all)
        if (packed_disjoint(ref, p, pad)) ++count;
    return count;
}

BigInt count_disjoint_pairs(int n, const PairCountOptions& options) {
    const int limit = options.allow_large ? 3 : 2;
    if (n < 1 || n > limit) throw InfeasibleSize(n, limit, "all-pairs disjoint count");

    const auto all = all_packed_pi(n);
    const auto pad = packed_pad_mask(n);
    const std::size_t count = all.size();

    int jobs = options.jobs > 0 ? options.jobs
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    // triangle split into fixed chunks of first indices; chunk totals are
    // plain integer sums, so the result is independent of the schedule
    const std::size_t chunk = 64;
    const std::size_t n_chunks = (count + chunk - 1) / chunk;
    std::atomic<std::size_t> next_chunk{0};
    std::atomic<std::uint64_t> total{0};

    auto worker = [&]() {
        std::uint64_t local = 0;
        for (;;) {
            const std::size_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks) break;
            const std::size_t lo = c * chunk;
            const std::size_t hi = std::min(lo + chunk, count);
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = i + 1; j < count; ++j)
                    if (packed_disjoint(all[i], all[j], pad)) ++local;
        }
        total.fetch_add(local);
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return BigInt(total.load());
}

BigInt count_agreeing(const PiMatrix& reference, const BinaryMatrix& mask) {
    const int n = reference.n();
    if (mask.n() != n) throw SizeMismatch(n, mask.n());
    if (n > kExhaustiveLimit)
        throw InfeasibleSize(n, kExhaustiveLimit, "exhaustive agreement count");

    // byte positions that must match the reference
    std::vector<int> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mask.at(i, j)) cells.push_back(i * n + j);

    const PackedPi ref = PackedPi::pack(reference);
    const auto all = all_packed_pi(n);
    auto byte_at = [](const PackedPi& p, int cell) {
        return (p.words[static_cast<std::size_t>(cell / 8)] >> (8 * (cell % 8))) & 0xFF;
    };
    std::uint64_t count = 0;
    for (const auto& p : all) {
        bool ok = true;
        for (int cell : cells)
            if (byte_at(p, cell) != byte_at(ref, cell)) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

BigInt agreement_count_formula(const BinaryMatrix& mask) {
    const int n = mask.n();
    BigInt product = 1;
    for (int i = 0; i < n; ++i) product *= factorial(n - mask.row_sum(i));
    for (int j = 0; j < n; ++j) product *= factorial(n - mask.col_sum(j));
    return product;
}

MonteCarloResult monte_carlo_p(int n, std::uint64_t trials, std::uint64_t seed) {
    if (n == 1) throw UndefinedForN1();
    if (n < 1) throw ValidationError("n must be >= 1");
    if (trials < 1) throw ValidationError("trials must be >= 1");

    MonteCarloResult r;
    r.n = n;
    r.trials = trials;
    r.seed = seed;

    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 gen = SplitMix64::substream(seed, t);
        for (;;) {
            const PiMatrix first = random_pi(n, gen);
            const PiMatrix second = random_pi(n, gen);
            if (first == second) {  // conditioning on distinct pairs
                ++r.equal_redraws;
                continue;
            }
            if (disjoint(first, second)) ++r.disjoint_count;
            break;
        }
    }

    r.estimate = static_cast<double>(r.disjoint_count) / static_cast<double>(trials);
    r.standard_error =
        std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
    r.degenerate = trials < 2 || r.estimate == 0.0 || r.estimate == 1.0;
    return r;
}

}  // namespace spermat
