#include "spermat/sudoku.hpp"

#include <cmath>

namespace spermat {

namespace {

void check_permutation_of_side(const std::vector<int>& values, int side,
                               const std::string& what) {
    std::vector<char> seen(static_cast<std::size_t>(side), 0);
    for (int v : values) {
        if (v < 1 || v > side || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidSudoku(what + " is not a permutation of [" + std::to_string(side) + "]");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

}  // namespace

SudokuMatrix SudokuMatrix::validated(const std::vector<std::vector<int>>& cells) {
    const std::size_t side = cells.size();
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(side))));
    if (n < 1 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != side)
        throw DimensionNotSquareOfSquare(static_cast<int>(side));
    for (const auto& row : cells)
        if (row.size() != side) throw DimensionNotSquareOfSquare(static_cast<int>(side));

    const int s = static_cast<int>(side);
    std::vector<int> scratch(static_cast<std::size_t>(s));
    for (int r = 0; r < s; ++r)
        check_permutation_of_side(cells[static_cast<std::size_t>(r)], s,
                                  "row " + std::to_string(r + 1));
    for (int c = 0; c < s; ++c) {
        for (int r = 0; r < s; ++r)
            scratch[static_cast<std::size_t>(r)] =
                cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        check_permutation_of_side(scratch, s, "column " + std::to_string(c + 1));
    }
    for (int bi = 0; bi < n; ++bi)
        for (int bj = 0; bj < n; ++bj) {
            int t = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    scratch[static_cast<std::size_t>(t++)] =
                        cells[static_cast<std::size_t>(bi * n + a)]
                             [static_cast<std::size_t>(bj * n + b)];
            check_permutation_of_side(scratch, s,
                                      "block (" + std::to_string(bi + 1) + "," +
                                          std::to_string(bj + 1) + ")");
        }

    std::vector<int> flat;
    flat.reserve(side * side);
    for (const auto& row : cells) flat.insert(flat.end(), row.begin(), row.end());
    return SudokuMatrix(n, std::move(flat));
}

std::vector<std::vector<int>> SudokuMatrix::grid() const {
    const int s = side();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(s));
    for (int r = 0; r < s; ++r) {
        out[static_cast<std::size_t>(r)].assign(
            cells_.begin() + static_cast<std::ptrdiff_t>(r) * s,
            cells_.begin() + static_cast<std::ptrdiff_t>(r + 1) * s);
    }
    return out;
}

SudokuMatrix compose_sudoku(const std::vector<SPermMatrix>& family) {
    if (family.empty()) throw FamilySizeWrong(0, 1);
    const int n = family.front().n();
    const std::size_t want = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (family.size() != want) throw FamilySizeWrong(family.size(), want);
    for (const auto& m : family)
        if (m.n() != n) throw SizeMismatch(n, m.n());
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!disjoint(family[i], family[j]))
                throw FamilyNotPairwiseDisjoint(static_cast<int>(i) + 1,
                                                static_cast<int>(j) + 1);

    const int s = n * n;
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(s),
                                        std::vector<int>(static_cast<std::size_t>(s), 0));
    for (std::size_t t = 0; t < family.size(); ++t) {
        const auto grid = family[t].expand();
        for (int r = 0; r < s; ++r)
            for (int c = 0; c < s; ++c)
                if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])
                    cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        static_cast<int>(t) + 1;
    }
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c)
            if (cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 0)
                throw CellUncovered(r + 1, c + 1);
    return SudokuMatrix::validated(cells);
}

std::vector<SPermMatrix> decompose_sudoku(const SudokuMatrix& m) {
    const int s = m.side();
    std::vector<SPermMatrix> family;
    family.reserve(static_cast<std::size_t>(s));
    for (int t = 1; t <= s; ++t) {
        std::vector<std::vector<int>> grid(static_cast<std::size_t>(s),
                                           std::vector<int>(static_cast<std::size_t>(s), 0));
        for (int r = 0; r < s; ++r)
            for (int c = 0; c < s; ++c)
                if (m.at(r, c) == t) grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
        family.push_back(SPermMatrix::validated_from_grid(grid));
    }
    return family;
}

}  // namespace spermat
