#pragma once

#include "spermat/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spermat {

/// An n x n 0/1 matrix. Doubles as a bipartite graph on n row vertices and
/// n column vertices: entry (i,j)=1 is the edge r_i -- c_j, so the edge
/// count k is the number of ones.
class BinaryMatrix {
public:
    explicit BinaryMatrix(int n);  // zero matrix

    /// Rows as bit strings, e.g. {"010","110","000"}.
    static BinaryMatrix from_bit_rows(const std::vector<std::string>& rows);

    /// Packed row-major code with entry (0,0) in the most significant bit,
    /// so integer order == lexicographic order of the row-major bit string.
    /// Requires n <= 7 (49 bits).
    static BinaryMatrix from_code(int n, std::uint64_t code);
    std::uint64_t code() const;

    int n() const { return n_; }
    int edge_count() const;

    // 0-based accessors; external formats are 1-based.
    bool at(int i, int j) const { return bits_[idx(i, j)] != 0; }
    void set(int i, int j, bool v) { bits_[idx(i, j)] = v ? 1 : 0; }

    int row_sum(int i) const;
    int col_sum(int j) const;

    std::vector<std::string> to_bit_rows() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }
    int n_;
    std::vector<std::uint8_t> bits_;
};

}  // namespace spermat
