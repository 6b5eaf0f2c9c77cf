#include "spermat/s_permutation.hpp"

#include <cmath>

namespace spermat {

namespace {

int side_to_n(std::size_t side) {
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(side))));
    if (n < 1 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != side)
        throw DimensionNotSquareOfSquare(static_cast<int>(side));
    return n;
}

}  // namespace

SPermMatrix SPermMatrix::validated_from_grid(const std::vector<std::vector<int>>& grid) {
    const std::size_t side = grid.size();
    const int n = side_to_n(side);

    for (const auto& row : grid)
        if (row.size() != side) throw DimensionNotSquareOfSquare(static_cast<int>(side));

    // exactly one 1 per row, per column, per block
    for (std::size_t r = 0; r < side; ++r) {
        int ones = 0;
        for (std::size_t c = 0; c < side; ++c) {
            const int v = grid[r][c];
            if (v != 0 && v != 1)
                throw ValidationError("cell (" + std::to_string(r + 1) + "," +
                                      std::to_string(c + 1) + ") is not 0/1");
            ones += v;
        }
        if (ones != 1) throw RowViolation(static_cast<int>(r) + 1);
    }
    for (std::size_t c = 0; c < side; ++c) {
        int ones = 0;
        for (std::size_t r = 0; r < side; ++r) ones += grid[r][c];
        if (ones != 1) throw ColumnViolation(static_cast<int>(c) + 1);
    }

    std::vector<PiEntry> block_ones(side, PiEntry{0, 0});
    for (int bi = 0; bi < n; ++bi)
        for (int bj = 0; bj < n; ++bj) {
            int ones = 0;
            PiEntry where{0, 0};
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (grid[static_cast<std::size_t>(bi * n + a)]
                            [static_cast<std::size_t>(bj * n + b)]) {
                        ++ones;
                        where = {a + 1, b + 1};
                    }
            if (ones != 1) throw BlockViolation(bi + 1, bj + 1);
            block_ones[static_cast<std::size_t>(bi * n + bj)] = where;
        }
    return SPermMatrix(n, std::move(block_ones));
}

SPermMatrix SPermMatrix::from_block_ones(int n, std::vector<PiEntry> block_ones) {
    // Reuse the Pi-side validator: the block coordinates of an S-permutation
    // matrix satisfy exactly conditions ii) and iii).
    PiMatrix::validated(n, block_ones);
    return SPermMatrix(n, std::move(block_ones));
}

std::vector<std::vector<int>> SPermMatrix::expand() const {
    const int s = side();
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(s),
                                       std::vector<int>(static_cast<std::size_t>(s), 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const PiEntry& e = block_one(i, j);
            grid[static_cast<std::size_t>(i * n_ + e.a - 1)]
                [static_cast<std::size_t>(j * n_ + e.b - 1)] = 1;
        }
    return grid;
}

PiMatrix sigma_to_pi(const SPermMatrix& a) {
    std::vector<PiEntry> entries;
    entries.reserve(static_cast<std::size_t>(a.n()) * static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) entries.push_back(a.block_one(i, j));
    return PiMatrix::validated(a.n(), std::move(entries));
}

SPermMatrix pi_to_sigma(const PiMatrix& p) {
    return SPermMatrix::from_block_ones(p.n(), p.entries());
}

bool disjoint(const SPermMatrix& a, const SPermMatrix& b) {
    if (a.n() != b.n()) throw SizeMismatch(a.n(), b.n());
    // Sigma-side route over the expanded grids; agreement with the Pi-side
    // test is a checked property, not an assumption.
    const auto ga = a.expand();
    const auto gb = b.expand();
    for (std::size_t r = 0; r < ga.size(); ++r)
        for (std::size_t c = 0; c < ga.size(); ++c)
            if (ga[r][c] == 1 && gb[r][c] == 1) return false;
    return true;
}

}  // namespace spermat
