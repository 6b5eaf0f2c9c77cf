#pragma once

#include "spermat/errors.hpp"
#include "spermat/rng.hpp"

#include <vector>

namespace spermat {

/// A permutation of [n] = {1,...,n}, stored as its image sequence:
/// value_at(i) is the i-th element (1-based, like the paper's rho(i)).
class Permutation {
public:
    /// Validates that `image` is a bijection on [n].
    static Permutation from_image(std::vector<int> image);
    static Permutation identity(int n);
    static Permutation random(int n, SplitMix64& gen);

    /// All n! permutations of [n] in lexicographic order of their images.
    static std::vector<Permutation> all(int n);

    int n() const { return static_cast<int>(image_.size()); }
    int value_at(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& image() const { return image_; }

    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
    std::vector<int> image_;
};

}  // namespace spermat
