#include "spermat/binary_matrix.hpp"

#include <numeric>

namespace spermat {

BinaryMatrix::BinaryMatrix(int n) : n_(n) {
    if (n < 1) throw ValidationError("matrix size must be >= 1");
    bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

BinaryMatrix BinaryMatrix::from_bit_rows(const std::vector<std::string>& rows) {
    const int n = static_cast<int>(rows.size());
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw ValidationError("bit row " + std::to_string(i + 1) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            const char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != '0' && c != '1')
                throw ValidationError("bit row " + std::to_string(i + 1) +
                                      " contains a character other than 0/1");
            m.set(i, j, c == '1');
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_code(int n, std::uint64_t code) {
    if (n > 7) throw InfeasibleSize(n, 7, "packed bit code");
    BinaryMatrix m(n);
    const int cells = n * n;
    for (int p = 0; p < cells; ++p) {
        if ((code >> (cells - 1 - p)) & 1u) m.set(p / n, p % n, true);
    }
    return m;
}

std::uint64_t BinaryMatrix::code() const {
    if (n_ > 7) throw InfeasibleSize(n_, 7, "packed bit code");
    std::uint64_t code = 0;
    for (std::uint8_t b : bits_) code = (code << 1) | b;
    return code;
}

int BinaryMatrix::edge_count() const {
    return std::accumulate(bits_.begin(), bits_.end(), 0);
}

int BinaryMatrix::row_sum(int i) const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += bits_[idx(i, j)];
    return s;
}

int BinaryMatrix::col_sum(int j) const {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += bits_[idx(i, j)];
    return s;
}

std::vector<std::string> BinaryMatrix::to_bit_rows() const {
    std::vector<std::string> rows;
    rows.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        std::string r(static_cast<std::size_t>(n_), '0');
        for (int j = 0; j < n_; ++j)
            if (at(i, j)) r[static_cast<std::size_t>(j)] = '1';
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace spermat
