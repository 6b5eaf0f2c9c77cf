#pragma once

#include "spermat/pi_matrix.hpp"

#include <vector>

namespace spermat {

/// An n^2 x n^2 S-permutation matrix: exactly one 1 in every row, every
/// column, and every n x n block. Stored compactly as the within-block
/// coordinates of the single 1 of each block (O(n^2) instead of O(n^4));
/// the full grid is materialized only for I/O and validation.
class SPermMatrix {
public:
    /// Validates an n^2 x n^2 0/1 grid. Throws DimensionNotSquareOfSquare,
    /// RowViolation, ColumnViolation, or BlockViolation (1-based indices).
    static SPermMatrix validated_from_grid(const std::vector<std::vector<int>>& grid);

    /// block_one(i,j) placed at within-block coordinates, already known valid
    /// (used by pi_to_sigma; revalidates cheaply in debug form via PiMatrix).
    static SPermMatrix from_block_ones(int n, std::vector<PiEntry> block_ones);

    int n() const { return n_; }
    int side() const { return n_ * n_; }

    /// Within-block coordinates <a,b> of the 1 in block (i,j); 0-based i,j,
    /// 1-based a,b.
    const PiEntry& block_one(int i, int j) const {
        return block_ones_[static_cast<std::size_t>(i * n_ + j)];
    }

    /// Full n^2 x n^2 0/1 grid.
    std::vector<std::vector<int>> expand() const;

    bool operator==(const SPermMatrix&) const = default;

private:
    SPermMatrix(int n, std::vector<PiEntry> block_ones)
        : n_(n), block_ones_(std::move(block_ones)) {}
    int n_;
    std::vector<PiEntry> block_ones_;  // row-major over blocks
};

/// Theorem-1 bijection, Sigma -> Pi: entry (i,j) of the image is the
/// within-block coordinate pair of the 1 in block (i,j).
PiMatrix sigma_to_pi(const SPermMatrix& a);

/// Theorem-1 bijection, Pi -> Sigma (inverse of sigma_to_pi).
SPermMatrix pi_to_sigma(const PiMatrix& p);

/// True iff the expanded grids share no common 1 position. Computed on the
/// Sigma side; Proposition 2 says it must agree with disjoint() on the Pi
/// images (tested, not assumed).
bool disjoint(const SPermMatrix& a, const SPermMatrix& b);

}  // namespace spermat
