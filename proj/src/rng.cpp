#include "spermat/rng.hpp"

#include <numeric>
#include <utility>

namespace spermat {

std::vector<int> random_permutation_image(int n, SplitMix64& gen) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    for (int i = n - 1; i >= 1; --i) {
        const auto j = static_cast<int>(gen.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
    }
    return image;
}

}  // namespace spermat
