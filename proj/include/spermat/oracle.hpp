#pragma once

#include "spermat/bigint.hpp"
#include "spermat/binary_matrix.hpp"
#include "spermat/pi_matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spermat {

/// Exhaustive enumeration is capped at n=3 (|Pi_3| = 46 656); anything larger
/// is out of reach for this design and is validated by Monte Carlo instead.
inline constexpr int kExhaustiveLimit = 3;

/// A Pi matrix flattened to one byte per cell, code (a-1)*n + (b-1), packed
/// into 64-bit words. Disjointness of two matrices is then "the XOR of the
/// byte strings has no zero byte", one SWAR test per word.
struct PackedPi {
    std::array<std::uint64_t, 2> words{};  // enough for n <= 3 (9 cells)

    static PackedPi pack(const PiMatrix& p);
    bool operator==(const PackedPi&) const = default;
};

/// Pad bytes (cell index >= n^2) forced nonzero so they never look like a
/// coincidence.
std::array<std::uint64_t, 2> packed_pad_mask(int n);

inline bool packed_disjoint(const PackedPi& x, const PackedPi& y,
                            const std::array<std::uint64_t, 2>& pad) {
    for (int w = 0; w < 2; ++w) {
        const std::uint64_t v = (x.words[static_cast<std::size_t>(w)] ^
                                 y.words[static_cast<std::size_t>(w)]) |
                                pad[static_cast<std::size_t>(w)];
        if ((v - 0x0101010101010101ull) & ~v & 0x8080808080808080ull) return false;
    }
    return true;
}

/// Streams each of the (n!)^{2n} Pi_n matrices exactly once, in lexicographic
/// order of the (2n)-tuple of permutation ranks (rho_1,...,rho_n,
/// sigma_1,...,sigma_n; the last rank varies fastest).
class PiEnumerator {
public:
    explicit PiEnumerator(int n);  // throws InfeasibleSize for n > 3

    /// False once the stream is exhausted.
    bool next(PiMatrix& out);

    BigInt total() const;  // (n!)^{2n}

private:
    int n_;
    std::vector<Permutation> perms_;  // all n! permutations, lex order
    std::vector<std::size_t> ranks_;  // 2n digits, base n!
    bool done_ = false;
};

/// All of Pi_n in enumeration order, packed (n <= 3).
std::vector<PackedPi> all_packed_pi(int n);

/// Number of pi' in Pi_n disjoint from the reference. The reference itself is
/// never counted (it coincides with itself everywhere).
BigInt count_disjoint_with(const PiMatrix& reference);

struct PairCountOptions {
    int jobs = 0;              // 0 = hardware concurrency
    bool allow_large = false;  // opt-in for the ~1.09e9 pair tests at n=3
};

/// Number of unordered disjoint pairs {pi, pi'}. n <= 2 by default; n = 3
/// behind allow_large; larger refused.
BigInt count_disjoint_pairs(int n, const PairCountOptions& options = {});

/// Brute-force count of pi' agreeing with the reference at every masked
/// position (extra agreements elsewhere permitted).
BigInt count_agreeing(const PiMatrix& reference, const BinaryMatrix& mask);

/// The Lemma-1 closed form for the same quantity:
/// prod over rows i of (n - rowdeg_i)! times prod over columns j of
/// (n - coldeg_j)!. Independent of the reference.
BigInt agreement_count_formula(const BinaryMatrix& mask);

struct MonteCarloResult {
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t disjoint_count = 0;
    std::uint64_t equal_redraws = 0;  // equal pairs discarded and redrawn
    double estimate = 0.0;
    double standard_error = 0.0;
    bool degenerate = false;  // too few trials, or estimate hit 0 or 1
};

/// Estimates p(n) from `trials` independent uniform pairs. Equal pairs are
/// discarded and redrawn (counted in equal_redraws), so the estimator
/// conditions on distinct matrices exactly as p(n)'s denominator
/// (n!)^{2n} - 1 does. One PRNG substream per trial: results are identical
/// for any parallel schedule.
MonteCarloResult monte_carlo_p(int n, std::uint64_t trials, std::uint64_t seed);

/// One oracle run, ready for reporting.
struct OracleResult {
    std::string mode;  // fixed-reference | all-pairs | agreement | monte-carlo
    int n = 0;
    BigInt count;
    std::optional<PiMatrix> reference;
    std::optional<MonteCarloResult> monte_carlo;
    double elapsed_ms = 0.0;
};

}  // namespace spermat
