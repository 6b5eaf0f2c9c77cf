#pragma once

#include "spermat/bigint.hpp"
#include "spermat/graph_classes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spermat {

/// Everything the inclusion–exclusion formula yields for one n. All values
/// exact; decimal rendering of p is the only rounding anywhere.
struct CountReport {
    int n = 0;
    BigInt sigma_count;           // (n!)^{2n} = |Sigma_{n^2}| = |Pi_n|
    std::vector<BigInt> q;        // q[k], k = 0..n^2
    BigInt xi;                    // disjoint partners of a fixed matrix
    BigInt eta;                   // unordered disjoint pairs
    std::optional<BigRat> p;      // xi / (sigma_count - 1); nullopt for n=1
    std::string p_decimal;        // round-half-even rendering, empty for n=1
    int decimal_places = 6;
};

/// q(n,k) = sum over classes with edge count k of orbit_size * weight.
BigInt q_value(const ClassTable& table, int k);

/// xi_n = sum_{k=0}^{n^2} (-1)^k q(n,k). The k=0 term is (n!)^{2n}, so this
/// single alternating sum equals the split "leading term + sum_{k>=1}" form.
BigInt xi(const ClassTable& table);

/// eta_n = (n!)^{2n} / 2 * xi_n, exact (the product is even for n >= 1).
BigInt eta(const ClassTable& table);

/// p(n) = xi_n / ((n!)^{2n} - 1), reduced. Throws UndefinedForN1.
BigRat probability(const ClassTable& table);

CountReport full_report(const ClassTable& table, int decimal_places = 6);

}  // namespace spermat
