#pragma once

#include "morselab/collapse.hpp"
#include "morselab/complex.hpp"
#include "morselab/homology.hpp"
#include "morselab/morse.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace morselab::recognition {

enum class Verdict { yes, no, indeterminate };

const char* to_string(Verdict v);

struct SearchOptions {
    /// Node expansions per property search.
    std::uint64_t budget = 200'000;
    morse::CollapseOptions collapse;
    /// Property searches of one report run on up to this many threads.
    unsigned jobs = 1;
};

struct ShellingResult {
    Verdict verdict = Verdict::indeterminate;
    /// Facet indices into K.facets() in shelling order.
    std::vector<int> order;
    std::uint64_t expansions = 0;
    std::string reason;
};

/// Backtracking over facet orders.  Whether a facet may come next depends only on
/// the set of facets placed before it, so failed sets are memoised.
ShellingResult find_shelling(const SimplicialComplex& k, const SearchOptions& options = {});

/// True when every F_j meets the union of the earlier facets in a pure (d-1)-complex.
bool is_shelling_order(const SimplicialComplex& k, const std::vector<int>& order);

/// Node of a constructibility certificate.  A split node says complex = left ∪ right
/// with left ∩ right = meet; an `iso` node refers to an earlier node certifying an
/// isomorphic complex.
struct ConstructionNode {
    enum class Kind { simplex, points, split, iso };
    Kind kind = Kind::simplex;
    SimplicialComplex complex;
    int left = -1;
    int right = -1;
    int meet = -1;
    int same_as = -1;
};

struct ConstructibilityResult {
    Verdict verdict = Verdict::indeterminate;
    /// Certificate nodes; the root is nodes.back() when verdict is yes.
    std::vector<ConstructionNode> nodes;
    std::uint64_t expansions = 0;
    std::string reason;
};

ConstructibilityResult is_constructible(const SimplicialComplex& k, const SearchOptions& options = {});

/// Replays a construction certificate; empty string when every node checks out.
std::string check_construction(const std::vector<ConstructionNode>& nodes);

struct HamiltonianDepth {
    int value = 0;
    morse::DepthStatus status = morse::DepthStatus::indeterminate;
    /// k-faces of the witness beyond the (k-1)-skeleton.
    std::vector<Simplex> witness_faces;
    std::uint64_t expansions = 0;
    bool budget_exhausted = false;
    std::string reason;
};

/// Largest k with a collapsible k-subcomplex containing the full (k-1)-skeleton.
/// Disconnected input reports 0.  Only exhausted levels count as proved impossible.
HamiltonianDepth hamiltonian_depth(const SimplicialComplex& k, const SearchOptions& options = {});

struct BallSphereLabel {
    /// "sphere", "ball" or "indeterminate".
    std::string label;
    morse::EndoResult endo;
    homology::HomologyProfile profile;
    std::optional<homology::HomologyProfile> boundary_profile;
    std::string evidence;
};

/// Labels M only when an endo-collapse certificate exists, after checking the
/// homology agrees.  A contradiction raises an internal error.
BallSphereLabel certify_ball_or_sphere(const SimplicialComplex& m, const SearchOptions& options = {});

struct PropertyVerdict {
    std::string name;
    Verdict verdict = Verdict::indeterminate;
    std::string evidence;
};

struct HierarchyReport {
    int dim = -1;
    bool closed = true;
    /// Depth-order and H_1 violations are only checked on homology manifolds.
    bool manifold = false;
    /// shellable, constructible, endo-collapsible, LC, h1-vanishes (in implication order).
    std::vector<PropertyVerdict> properties;
    morse::DepthCertificate cdepth;
    HamiltonianDepth hdepth;
    homology::DepthReport adepth;
    /// Implication or depth-order violations; empty for a consistent report.
    std::vector<std::string> violations;

    const PropertyVerdict& property(const std::string& name) const;
    bool consistent() const { return violations.empty(); }
};

HierarchyReport hierarchy_report(const SimplicialComplex& m, const SearchOptions& options = {});

std::string to_json(const HierarchyReport& report);

}  // namespace morselab::recognition
