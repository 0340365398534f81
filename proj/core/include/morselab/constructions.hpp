#pragma once

#include "morselab/complex.hpp"
#include "morselab/face_poset.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace morselab {

struct PseudoManifoldInfo {
    bool pure = false;
    bool strongly_connected = false;
    /// Largest number of facets sharing a ridge.
    std::size_t max_ridge_degree = 0;
    bool is_pseudomanifold = false;
    /// Ridges lying in exactly one facet, closed under faces.  Void when closed.
    SimplicialComplex boundary;
    bool closed() const { return boundary.is_void(); }
};

PseudoManifoldInfo pseudomanifold_check(const SimplicialComplex& k);

/// Ridges in exactly one facet.  Raises for impure complexes.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

/// {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}.  The link of a facet is {∅}.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);
/// Closed star: all faces of facets containing σ.
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);
/// Faces not containing σ; σ may be any vertex set.
SimplicialComplex deletion(const SimplicialComplex& k, const Simplex& sigma);
/// Faces whose closure misses the relative interior of σ; σ must be a face.
SimplicialComplex removal(const SimplicialComplex& k, const Simplex& sigma);

/// Full subcomplex on the given vertices.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& vertices);
/// Faces of dimension at most `k`.
SimplicialComplex skeleton(const SimplicialComplex& k, int dim);
/// Complex generated by a subset of the facets of k.
SimplicialComplex subcomplex_of_facets(const SimplicialComplex& k, const std::vector<std::size_t>& facet_ids);

struct DualGraph {
    std::size_t nodes = 0;
    /// (facet a, facet b, index of the shared ridge among faces(dim-1))
    std::vector<std::array<int, 3>> edges;
    std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbour, ridge)
};

/// Facets joined when they share a ridge.  Raises for impure complexes.
DualGraph dual_graph(const SimplicialComplex& k);

/// v ∗ K.  Raises when the apex label is already used.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);
/// Join with a pair of new vertices.
SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north = "N",
                             const std::string& south = "S");
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Text label used for the barycentre of a face.
std::string barycenter_label(const SimplicialComplex& k, const Simplex& face);

/// Chains of nonempty faces.  Vertex labels come from barycenter_label().
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Complex of chains of a graded poset, vertex i labelled by cell name or id.
SimplicialComplex order_complex(const FacePoset& p);

/// Union of two complexes over a shared label space.
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
/// Faces common to both complexes (by labels).
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Replaces the facets containing `face` by the cone from a new vertex over
/// (star boundary), i.e. stellar subdivision at the barycentre of `face`.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Simplex& face,
                                      const std::string& new_label);

/// Relabels the vertices by a label map (old label -> new label).
SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<std::string>& new_labels);

}  // namespace morselab
