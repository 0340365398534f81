#pragma once

#include "morselab/collapse.hpp"
#include "morselab/complex.hpp"
#include "morselab/face_poset.hpp"
#include "morselab/homology.hpp"
#include "morselab/matching.hpp"

#include <optional>
#include <string>
#include <vector>

namespace morselab::morse {

/// Facts about the host used to refuse searches early.
struct TopologyInfo {
    bool known = false;
    bool homology_manifold = false;
    /// Minimal number of generators of H_i(M; Z), i = 0..d.
    std::vector<long long> generators;
};

TopologyInfo topology_info(const SimplicialComplex& m);

/// Upper bound on collapse depth implied by the Morse inequalities, with the reason.
struct DepthBound {
    int bound = 0;
    std::string reason;
};

/// Uses the relative inequalities (homology manifolds with boundary) or the
/// classical ones (no boundary).  `bound` equals d when nothing is implied.
DepthBound homology_depth_bound(const FacePoset& p, const TopologyInfo& info);

enum class DepthStatus { lower_bound, exact_by_dimension, exact_by_obstruction, exact_by_exhaustion, indeterminate };

const char* to_string(DepthStatus s);

struct DepthOptions {
    CollapseOptions collapse;
    /// Facets tried per depth (0 = all, in cell order).
    std::size_t max_facets = 0;
    bool use_obstructions = true;
};

/// cdepth >= k witnessed by M - Δ collapsing onto ∂M plus a (d-k)-complex.
struct DepthCertificate {
    int dim = -1;
    int k = 0;
    DepthStatus status = DepthStatus::indeterminate;
    /// Top cell removed before collapsing (cell id of the host poset), -1 if none.
    int delta = -1;
    CollapseSequence sequence;
    std::optional<MorseMatching> witness;
    DepthBound upper;
    std::uint64_t expansions = 0;
    bool budget_exhausted = false;
};

/// Collapse problem for cdepth >= k with facet `delta` removed.
CollapseProblem depth_problem(const PosetPtr& p, int delta, int k);

DepthCertificate collapse_depth(const PosetPtr& p, const TopologyInfo& info, const DepthOptions& options = {});
DepthCertificate collapse_depth(const SimplicialComplex& m, const DepthOptions& options = {});

struct EndoResult {
    SearchStatus status = SearchStatus::indeterminate;
    /// Search result when one was run.
    DepthCertificate certificate;
    bool obstructed = false;
    std::string reason;
};

EndoResult is_endo_collapsible(const PosetPtr& p, const TopologyInfo& info, const DepthOptions& options = {});
EndoResult is_endo_collapsible(const SimplicialComplex& m, const DepthOptions& options = {});

/// Checks that a poset is a pseudo-manifold: pure, ridges in at most two top
/// cells, and top cells connected through ridges.
bool is_pseudomanifold_poset(const FacePoset& p, std::string* reason = nullptr);

/**
 * Boundary-critical matching with `delta` as the only critical top cell and no
 * interior critical vertex.  Built from a spanning tree of the dual graph rooted
 * at delta, a greedy collapse protecting the boundary, and a re-matching of the
 * interior vertices along a forest grown from the boundary.
 * Requires d >= 2 and a nonempty boundary.
 */
MorseMatching boundary_critical_morse(const PosetPtr& p, int delta);
MorseMatching boundary_critical_morse(const SimplicialComplex& m, const Simplex& delta);

/// Closed analogue: `pole` is the only critical vertex and `delta` the only critical top cell
/// produced by construction (other critical cells may remain in middle dimensions).
MorseMatching polar_morse(const PosetPtr& p, int delta, int pole);
MorseMatching polar_morse(const SimplicialComplex& m, const Simplex& delta, Vertex pole);

/// Same constructions without the dimension restriction (d = 0 and d = 1 included).
MorseMatching pinned_morse(const PosetPtr& p, int delta, std::optional<int> pole);

struct InequalityRow {
    int k = 0;
    /// Homology degree compared against k-cells (d - k in the relative form).
    int degree = 0;
    long long homology = 0;
    long long critical = 0;
    bool holds = true;
};

struct InequalityReport {
    bool relative = false;
    std::vector<InequalityRow> rows;
    long long euler_sum = 0;
    long long euler_characteristic = 0;
    bool euler_ok = false;
    bool all_hold = false;
};

/// Relative form compares H_{d-k}(M) with c^int_k and requires a boundary-critical matching;
/// the classical form compares H_k(M) with c_k.  Homology is counted by minimal generators.
InequalityReport verify_morse_inequalities(const SimplicialComplex& m, const MorseMatching& f, bool relative);

}  // namespace morselab::morse
