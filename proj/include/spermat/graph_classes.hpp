#pragma once

#include "spermat/bigint.hpp"
#include "spermat/binary_matrix.hpp"
#include "spermat/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spermat {

/// <psi>(g): psi[i] = number of the 2n bipartite-graph vertices incident to
/// exactly i edges, i = 0..n. For a binary matrix: rows with row-sum i plus
/// columns with column-sum i. Invariants: sum psi_i = 2n, sum i*psi_i = 2k.
struct DegreeProfile {
    int n = 0;
    std::vector<int> psi;  // length n+1
    bool operator==(const DegreeProfile&) const = default;
};

DegreeProfile psi_vector(const BinaryMatrix& m);

/// Lexicographically smallest matrix (row-major bit string, '0' < '1') over
/// all n! * n! row/column permutation pairs. Two matrices lie in the same
/// class iff their canonical forms are equal. Note the transpose is NOT in
/// the group: row and column permutations act independently.
BinaryMatrix canonical_form(const BinaryMatrix& m);

/// Number of distinct matrices reachable by row/column permutations,
/// computed as (n!)^2 / |stabilizer| (orbit–stabilizer).
std::uint64_t orbit_size(const BinaryMatrix& m);

/// The Lemma-1 weight prod_{i=0}^{n-2} [(n-i)!]^{psi_i}. Empty product (n=1)
/// is 1. The i <= n form is identical since 1! = 0! = 1.
BigInt class_weight(const DegreeProfile& psi);

/// One equivalence class of n x n binary matrices under independent row and
/// column permutations.
struct GraphClass {
    int n = 0;
    int k = 0;                    // edge count
    BinaryMatrix canonical{1};    // lex-min representative
    std::uint64_t orbit_size = 0; // |class|
    DegreeProfile psi;
    BigInt weight;                // class_weight(psi)
};

BigInt class_weight(const GraphClass& c);

/// All classes for one n, every k = 0..n^2, sorted by (k, canonical code).
struct ClassTable {
    int n = 0;
    std::vector<GraphClass> classes;
    // provenance (segregated metadata; excluded from content comparison)
    std::string generator;
    std::string created;

    /// Classes with the given edge count (contiguous slice).
    std::vector<const GraphClass*> with_edge_count(int k) const;
};

struct EnumerateOptions {
    bool allow_large = false;  // permits n=5 (with a stderr warning)
};

/// Scans all 2^(n^2) matrices, grouping by orbit; provably complete at these
/// sizes. Default limit n <= 4; n=5 behind allow_large; larger refused
/// (InfeasibleSize).
ClassTable enumerate_classes(int n, const EnumerateOptions& options = {});

/// Orbit-sum check: for every k, sum of orbit sizes over classes with edge
/// count k must equal C(n^2, k). Throws IncompleteTable otherwise.
void require_complete(const ClassTable& table);

inline constexpr int kDefaultEnumerationLimit = 4;
inline constexpr int kLargeEnumerationLimit = 5;

}  // namespace spermat
