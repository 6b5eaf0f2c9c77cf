#pragma once

#include "spermat/binary_matrix.hpp"
#include "spermat/errors.hpp"
#include "spermat/permutation.hpp"
#include "spermat/rng.hpp"

#include <cstdint>
#include <vector>

namespace spermat {

/// Ordered pair <a,b> with a,b in [n], 1-based.
struct PiEntry {
    int a = 0;
    int b = 0;
    bool operator==(const PiEntry&) const = default;
};

/// An n x n matrix of ordered pairs where, for every row, the first
/// components form a permutation of [n], and for every column the second
/// components form a permutation of [n]. Entry (i,j) is <rho_i(j), sigma_j(i)>:
/// first component indexed along the row, second along the column.
///
/// Immutable after construction; construction validates.
class PiMatrix {
public:
    /// Throws RowFirstComponentNotPermutation / ColumnSecondComponentNotPermutation.
    static PiMatrix validated(int n, std::vector<PiEntry> entries);

    /// Assembles entries[i][j] = <rho_i(j), sigma_j(i)> from row permutations
    /// rho_1..rho_n and column permutations sigma_1..sigma_n. Always valid.
    static PiMatrix from_permutations(const std::vector<Permutation>& rhos,
                                      const std::vector<Permutation>& sigmas);

    int n() const { return n_; }
    const PiEntry& at(int i, int j) const { return entries_[idx(i, j)]; }  // 0-based
    const std::vector<PiEntry>& entries() const { return entries_; }

    Permutation row_permutation(int i) const;     // rho_i (first components of row i)
    Permutation column_permutation(int j) const;  // sigma_j (second components of column j)

    bool operator==(const PiMatrix&) const = default;

private:
    PiMatrix(int n, std::vector<PiEntry> entries) : n_(n), entries_(std::move(entries)) {}
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }
    int n_;
    std::vector<PiEntry> entries_;  // row-major
};

/// True iff no position holds component-wise equal pairs. Symmetric,
/// antireflexive. Throws SizeMismatch.
bool disjoint(const PiMatrix& p, const PiMatrix& q);

/// 0/1 matrix with a 1 exactly at the component-wise-equal positions; its
/// edge count is the number of coincidences (0 iff disjoint).
BinaryMatrix coincidence_matrix(const PiMatrix& p, const PiMatrix& q);

/// Uniform draw: 2n independent Fisher–Yates permutations (rho_1..rho_n then
/// sigma_1..sigma_n) from the given generator; uniform over Pi_n because the
/// (2n)-tuple of permutations <-> Pi_n map is a bijection.
PiMatrix random_pi(int n, SplitMix64& gen);
PiMatrix random_pi(int n, std::uint64_t seed);

}  // namespace spermat
