#pragma once

#include "spermat/s_permutation.hpp"

#include <vector>

namespace spermat {

/// An n^2 x n^2 matrix over [n^2] whose rows, columns and n x n blocks are
/// all permutations of [n^2].
class SudokuMatrix {
public:
    /// Throws InvalidSudoku naming the first violated row/column/block.
    static SudokuMatrix validated(const std::vector<std::vector<int>>& cells);

    int n() const { return n_; }
    int side() const { return n_ * n_; }
    int at(int r, int c) const {  // 0-based
        return cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(side()) +
                      static_cast<std::size_t>(c)];
    }
    std::vector<std::vector<int>> grid() const;

    bool operator==(const SudokuMatrix&) const = default;

private:
    SudokuMatrix(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {}
    int n_;
    std::vector<int> cells_;  // row-major
};

/// M = sum_t t * A_t for a family of exactly n^2 pairwise-disjoint
/// S-permutation matrices. Throws FamilySizeWrong, SizeMismatch,
/// FamilyNotPairwiseDisjoint (1-based indices of the first offending pair),
/// or CellUncovered (defensive; unreachable for a disjoint family).
SudokuMatrix compose_sudoku(const std::vector<SPermMatrix>& family);

/// Partition by value: A_t has ones exactly where M = t. Inverse of
/// compose_sudoku up to value labels.
std::vector<SPermMatrix> decompose_sudoku(const SudokuMatrix& m);

}  // namespace spermat
