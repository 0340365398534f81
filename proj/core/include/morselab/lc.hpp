#pragma once

#include "morselab/complex.hpp"
#include "morselab/matching.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace morselab::lc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A d-ball of N simplices whose dual graph is a tree.
struct TreeOfSimplices {
    int d = 0;
    SimplicialComplex complex;
    /// Index into complex.facets() of the facet the dual tree is rooted at.
    int root = 0;
    /// Dual tree edges (facet a, facet b, shared ridge as a face index of dimension d-1).
    std::vector<std::array<int, 3>> edges;

    std::size_t size() const { return complex.facet_count(); }
    /// dN - N + 2 for every valid tree.
    std::size_t boundary_facet_count() const;
};

/// Checks purity, the tree shape of the dual graph and the boundary count.
TreeOfSimplices tree_from_complex(const SimplicialComplex& k, int root = 0);

/// Grows a tree by gluing a new simplex onto a random boundary facet N - 1 times.
TreeOfSimplices random_tree_of_simplices(int d, int n, std::uint64_t seed);

struct TreeEnumeration {
    int d = 0;
    int n = 0;
    /// One representative per combinatorial type, in canonical-form order.
    std::vector<TreeOfSimplices> types;
    /// Labelled growth processes Π_{k<N} (k(d-1)+2): each step picks a boundary facet.
    BigInt labeled_processes;
    std::uint64_t expansions = 0;
    bool complete = true;
};

/// All combinatorial types of trees of N d-simplices.  `budget` caps the number of
/// candidate trees generated (0 = unlimited); a truncated run has complete = false.
TreeEnumeration enumerate_trees(int d, int n, std::uint64_t budget = 0);

/// Identification of two boundary facets of the current quotient, given by tree labels.
struct Gluing {
    std::vector<std::string> a;
    std::vector<std::string> b;
    /// Vertex of `a` -> vertex of `b`.
    std::vector<std::pair<std::string, std::string>> bijection;
    /// Ridge of `a` shared with `b` when the gluing happens (phase b only).
    std::vector<std::string> shared_ridge;
};

struct GluingScript {
    std::vector<Gluing> phase_a;
    std::vector<Gluing> phase_b;
};

struct Assembly {
    SimplicialComplex complex;
    /// Read off the construction; empty when the quotient is not simplicial (permissive mode).
    std::optional<morse::MorseMatching> matching;
    bool simplicial = true;
};

/// Executes the script on the tree.  Strict mode raises as soon as a facet gets a
/// repeated vertex, two facets share a vertex set, or the final quotient is not a
/// simplicial complex; permissive mode reports these through `simplicial`.
Assembly lc_assemble(const TreeOfSimplices& tree, const GluingScript& script, bool strict = true);

struct Disassembly {
    TreeOfSimplices tree;
    GluingScript script;
};

/// Cuts M open along the interior ridges not crossed by the dual tree of f's (d-1, d)
/// pairs.  Needs a boundary-critical matching on face_poset(m) with one interior critical
/// top cell.  Vertex copies are labelled "<label>#<k>".
Disassembly lc_disassemble(const SimplicialComplex& m, const morse::MorseMatching& f);

std::string script_to_json(const TreeOfSimplices& tree, const GluingScript& script);
/// Parses the JSON form; the tree is rebuilt from its facets and rooted at facet 0.
Disassembly script_from_json(const std::string& text);

/// binom(dN, N) / ((d-1)N + 1).
BigInt fuss_catalan(int d, int n);

/// Default rational upper bound for e.
BigRational default_e_bound();

struct Bound {
    BigRational value;
    BigInt ceiling;
};

/// Upper bound on the number of combinatorial types of d-manifolds with N facets
/// admitting a boundary-critical matching with m interior critical (d-1)-cells,
/// with e replaced by `e_bound`.  m = 0 gives (de)^N 2^{d(dN-N+2)}.
Bound enumeration_bound(int d, int n, int m, const BigRational& e_bound = default_e_bound());

}  // namespace morselab::lc
