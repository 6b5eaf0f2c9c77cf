#include "spermat/pi_matrix.hpp"

namespace spermat {

PiMatrix PiMatrix::validated(int n, std::vector<PiEntry> entries) {
    if (n < 1) throw ValidationError("Pi matrix size must be >= 1");
    if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw ValidationError("Pi matrix entry count does not match n");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {  // condition ii): row-wise first components
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            const int a = entries[static_cast<std::size_t>(i * n + j)].a;
            if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)])
                throw RowFirstComponentNotPermutation(i + 1);
            seen[static_cast<std::size_t>(a - 1)] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {  // condition iii): column-wise second components
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            const int b = entries[static_cast<std::size_t>(i * n + j)].b;
            if (b < 1 || b > n || seen[static_cast<std::size_t>(b - 1)])
                throw ColumnSecondComponentNotPermutation(j + 1);
            seen[static_cast<std::size_t>(b - 1)] = 1;
        }
    }
    return PiMatrix(n, std::move(entries));
}

PiMatrix PiMatrix::from_permutations(const std::vector<Permutation>& rhos,
                                     const std::vector<Permutation>& sigmas) {
    const int n = static_cast<int>(rhos.size());
    if (static_cast<int>(sigmas.size()) != n)
        throw ValidationError("need n row and n column permutations");
    for (const auto& p : rhos)
        if (p.n() != n) throw ValidationError("row permutation of wrong size");
    for (const auto& p : sigmas)
        if (p.n() != n) throw ValidationError("column permutation of wrong size");

    std::vector<PiEntry> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            entries[static_cast<std::size_t>(i * n + j)] = {
                rhos[static_cast<std::size_t>(i)].value_at(j + 1),
                sigmas[static_cast<std::size_t>(j)].value_at(i + 1)};
    return PiMatrix(n, std::move(entries));
}

Permutation PiMatrix::row_permutation(int i) const {
    std::vector<int> image(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) image[static_cast<std::size_t>(j)] = at(i, j).a;
    return Permutation::from_image(std::move(image));
}

Permutation PiMatrix::column_permutation(int j) const {
    std::vector<int> image(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) image[static_cast<std::size_t>(i)] = at(i, j).b;
    return Permutation::from_image(std::move(image));
}

bool disjoint(const PiMatrix& p, const PiMatrix& q) {
    if (p.n() != q.n()) throw SizeMismatch(p.n(), q.n());
    const auto& pe = p.entries();
    const auto& qe = q.entries();
    for (std::size_t c = 0; c < pe.size(); ++c)
        if (pe[c] == qe[c]) return false;
    return true;
}

BinaryMatrix coincidence_matrix(const PiMatrix& p, const PiMatrix& q) {
    if (p.n() != q.n()) throw SizeMismatch(p.n(), q.n());
    const int n = p.n();
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.at(i, j) == q.at(i, j)) m.set(i, j, true);
    return m;
}

PiMatrix random_pi(int n, SplitMix64& gen) {
    if (n < 1) throw ValidationError("n must be >= 1");
    std::vector<Permutation> rhos, sigmas;
    rhos.reserve(static_cast<std::size_t>(n));
    sigmas.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rhos.push_back(Permutation::random(n, gen));
    for (int j = 0; j < n; ++j) sigmas.push_back(Permutation::random(n, gen));
    return PiMatrix::from_permutations(rhos, sigmas);
}

PiMatrix random_pi(int n, std::uint64_t seed) {
    SplitMix64 gen(seed);
    return random_pi(n, gen);
}

}  // namespace spermat
