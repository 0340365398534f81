#pragma once

#include "morselab/collapse.hpp"
#include "morselab/complex.hpp"
#include "morselab/matching.hpp"

#include <string>
#include <vector>

namespace morselab::calculus {

enum class Transfer {
    /// Boundary-critical f on M -> plain F on sd M.
    bc_to_plain,
    /// Any f on M -> boundary-critical F on sd M.
    plain_to_bc,
};

const char* to_string(Transfer t);
Transfer parse_transfer(const std::string& text);

/// Matching on the face poset of sd(link_M face).
struct LinkMatching {
    std::vector<std::string> face;
    morse::MorseMatching matching;
};

struct SubdivisionResult {
    SimplicialComplex complex;
    morse::MorseMatching matching;
    /// Link matchings used, one per face of dimension below d, in face-poset order.
    std::vector<LinkMatching> links;
    /// Critical counts predicted from f and the link matchings (c_k for
    /// bc_to_plain, c^int_k for plain_to_bc), and the counts of the result.
    std::vector<long long> expected;
    std::vector<long long> actual;
    bool formula_holds = false;
};

/**
 * Transfers f to the barycentric subdivision.  Cells of sd M are grouped by their
 * lowest element σ, giving a cone σ̂ ∗ sd link(σ) per face; each group is matched
 * by coning a link matching, and each pair (σ, Σ) of f is realised by one extra
 * pair between the groups of Σ and σ.
 *
 * Interior faces need a polar link matching, boundary faces a matching with one
 * critical vertex (bc_to_plain) or an equatorial one (plain_to_bc).  Supplied
 * matchings are used when they fit; a face whose link matching must be pinned
 * to a specific top cell is re-pinned.  Missing ones are constructed.
 */
SubdivisionResult subdivide_morse(const SimplicialComplex& m, const morse::MorseMatching& f, Transfer direction,
                                  const std::vector<LinkMatching>& supplied = {},
                                  const morse::CollapseOptions& search = {});

}  // namespace morselab::calculus
