#pragma once

#include "morselab/complex.hpp"
#include "morselab/face_poset.hpp"
#include "morselab/matching.hpp"

#include <string>
#include <vector>

namespace morselab::calculus {

using morse::CellPair;
using morse::MorseMatching;

/**
 * Dual block decomposition M* of a pseudo-manifold, as a face poset.
 *
 * One block σ* of dimension d - dim σ per cell σ of M, and one block δ◇ of
 * dimension d - 1 - dim δ per boundary cell δ.  σ* covers τ* when τ is a
 * codimension-one coface of σ, δ* covers δ◇, and γ◇ covers δ◇ when δ is a
 * codimension-one coface of γ inside ∂M.  The ◇ blocks form the boundary.
 */
struct DualBlockPoset {
    PosetPtr host;
    PosetPtr dual;
    /// Host cell -> its σ* block.
    std::vector<int> star;
    /// Host cell -> its δ◇ block, -1 for interior cells.
    std::vector<int> diamond;
    /// Dual cell -> host cell it comes from.
    std::vector<int> origin;
    std::vector<char> is_diamond;
};

DualBlockPoset dual_block_poset(const PosetPtr& m);
DualBlockPoset dual_block_poset(const SimplicialComplex& m);

enum class DualMode {
    /// Boundary-critical f on M -> plain f* on M* with c_{d-k}(f*) = c^int_k(f).
    bc_to_plain,
    /// Any f on M -> boundary-critical f* on M* with c^int_{d-k}(f*) = c_k(f).
    plain_to_bc,
};

const char* to_string(DualMode mode);
DualMode parse_dual_mode(const std::string& text);

MorseMatching dualize_matching(const DualBlockPoset& dual, const MorseMatching& f, DualMode mode);

/// Boundary-critical matching whose only critical top cell (among interior top
/// cells) is `top`; closed complexes get a polar matching with `pole` (default:
/// the first vertex outside `top`) as critical vertex.
MorseMatching pin_critical(const PosetPtr& p, int top, int pole = -1);

struct Patched {
    SimplicialComplex complex;
    MorseMatching matching;
};

/**
 * Glues equatorial f on M1 and g on M2 along a boundary-critical h on M1 ∩ M2.
 * The pinned cell σ (labels) must be the only critical (d-1)-cell of h, and the
 * facets of M1 and M2 containing σ the only critical top cells of f and g.
 */
Patched patch_morse(const SimplicialComplex& m1, const SimplicialComplex& m2, const MorseMatching& f,
                    const MorseMatching& g, const MorseMatching& h, const std::vector<std::string>& sigma);

/// v ∗ f on v ∗ M.  f must be boundary-critical with no interior critical vertex
/// when ∂M ≠ ∅, and polar when M is closed.
Patched cone_morse(const SimplicialComplex& m, const MorseMatching& f, const std::string& apex);

/// Inverse of cone_morse: reads f(σ) = g(v ∗ σ) on the base M = link of the apex.
Patched uncone_morse(const SimplicialComplex& cone, const MorseMatching& g, const std::string& apex);

/// Cell of a simplicial poset given by labels; raises not_a_face otherwise.
int cell_by_labels(const FacePoset& p, const std::vector<std::string>& labels);

}  // namespace morselab::calculus
