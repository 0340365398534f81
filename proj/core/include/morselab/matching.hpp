#pragma once

#include "morselab/face_poset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace morselab::morse {

/// (lower, upper) with `lower` a codimension-one face of `upper`.
using CellPair = std::pair<int, int>;

/**
 * Acyclic partial matching on the Hasse diagram of a face poset.
 *
 * Cells of the host's boundary mask count as boundary cells; all other cells
 * are interior.  Instances are only created through validate(), so every
 * MorseMatching is a genuine discrete Morse matching.
 */
class MorseMatching {
public:
    MorseMatching() = default;

    /// Raises MatchingError for a repeated cell, a pair that is not a cover
    /// relation, or a closed V-path (with the cycle as witness).
    static MorseMatching validate(PosetPtr host, std::vector<CellPair> pairs);

    const FacePoset& host() const { return *host_; }
    const PosetPtr& host_ptr() const { return host_; }
    const std::vector<CellPair>& pairs() const { return pairs_; }

    /// Matched partner of c, or -1 when c is critical.
    int partner(int c) const { return partner_[static_cast<std::size_t>(c)]; }
    bool is_critical(int c) const { return partner(c) < 0; }
    std::vector<int> critical_cells() const;

    /// c_k for k = 0..max_dim.
    const std::vector<long long>& critical_counts() const { return critical_; }
    /// Critical k-cells not on the boundary.
    const std::vector<long long>& interior_critical_counts() const { return interior_critical_; }
    long long c(int k) const;
    long long c_int(int k) const;

    /// No pair touches a boundary cell.
    bool boundary_critical() const;
    /// Boundary-critical, no interior critical vertex and exactly one interior critical top cell.
    bool equatorial() const;
    /// Host without boundary cells; one critical vertex and one critical top cell.
    bool polar() const;
    long long euler_sum() const;

    /// Pairs with both cells interior.
    std::vector<CellPair> interior_pairs() const;

private:
    PosetPtr host_;
    std::vector<CellPair> pairs_;
    std::vector<int> partner_;
    std::vector<long long> critical_;
    std::vector<long long> interior_critical_;
};

/// Closed V-path among the pairs (cells in traversal order), empty when acyclic.
std::vector<int> find_vpath_cycle(const FacePoset& p, const std::vector<int>& partner);

/// Integer discrete Morse function realising the matching: a linear extension of
/// the modified Hasse digraph (matched covers reversed).
std::vector<long long> matching_to_function(const MorseMatching& m);

struct FormanCheck {
    bool is_morse = false;
    std::string reason;
    /// Pairs (face, coface) with f(face) >= f(coface).
    std::vector<CellPair> pairs;
    std::vector<int> critical;
};

/// Checks the discrete Morse function definition cell by cell and reads off its pairs.
FormanCheck check_discrete_morse_function(const FacePoset& p, const std::vector<long long>& values);

}  // namespace morselab::morse
