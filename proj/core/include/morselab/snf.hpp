#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace morselab {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; each column lists (row, value) with distinct rows.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> columns;

    std::size_t nonzeros() const;
};

struct SmithInvariants {
    std::size_t rank = 0;
    /// Invariant factors greater than one, each dividing the next.
    std::vector<BigInt> torsion;
};

/// Invariant factors over the integers.  Unit pivots are eliminated sparsely in
/// 64-bit arithmetic (switching to big integers on overflow); the remainder is
/// reduced densely with exact big integers.
SmithInvariants smith_invariants(const SparseIntMatrix& m);

/// Rank over the prime field F_p.
std::size_t rank_mod_p(const SparseIntMatrix& m, long long p);

/// Diagonal of the Smith normal form of a dense matrix (nonzero entries only, in order).
std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a);

}  // namespace morselab
