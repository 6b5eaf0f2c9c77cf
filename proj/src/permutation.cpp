#include "spermat/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace spermat {

Permutation Permutation::from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    if (n < 1) throw ValidationError("permutation must have n >= 1");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : image) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw ValidationError("image is not a bijection on [n]");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    return Permutation(std::move(image));
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

Permutation Permutation::random(int n, SplitMix64& gen) {
    return Permutation(random_permutation_image(n, gen));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(image));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

}  // namespace spermat
