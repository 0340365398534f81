#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace morselab {

using Vertex = std::int32_t;

/// A face given by strictly increasing vertex ids of its complex.
using Simplex = std::vector<Vertex>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Strict weak order on labels: integer-looking labels first (numerically), then text.
bool label_less(const std::string& a, const std::string& b);

/**
 * Finite abstract simplicial complex, stored by its inclusion-maximal facets.
 *
 * Vertices carry text labels and are numbered 0..n-1 in label order, so two
 * complexes over the same label set agree on ids.  The complex with no faces
 * at all is the void complex; the complex whose only face is the empty one is
 * written {∅} and arises as the link of a facet.
 *
 * Instances are immutable.  The face lattice is built on first use and shared
 * between copies.
 */
class SimplicialComplex {
public:
    SimplicialComplex();

    /// Builds from label lists.  Rejects empty input and repeated vertices in a facet.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
    static SimplicialComplex from_facets(const std::vector<std::vector<long long>>& facets);

    /// Builds from vertex ids into `labels`.  Unused labels are dropped, non-maximal
    /// faces removed.  An empty facet list gives the void complex; a single empty
    /// facet gives {∅}.
    static SimplicialComplex from_ids(const std::vector<std::string>& labels,
                                      std::vector<Simplex> facets);

    /// The complex {∅}.
    static SimplicialComplex empty_face();

    bool is_void() const { return facets_.empty(); }
    bool is_empty_face_only() const { return facets_.size() == 1 && facets_[0].empty(); }

    /// Dimension; -1 for the void complex and for {∅}.
    int dim() const { return dim_; }

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::optional<Vertex> find_vertex(const std::string& label) const;

    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    bool is_pure() const;

    /// All k-faces in lexicographic order (k >= 0).
    const std::vector<Simplex>& faces(int k) const;
    std::optional<int> face_index(const Simplex& face) const;
    bool contains(const Simplex& face) const;
    std::vector<std::size_t> f_vector() const;
    std::size_t face_count() const;
    long long euler_characteristic() const;

    std::vector<std::string> labels_of(const Simplex& face) const;
    /// Translates labels to a sorted simplex; std::nullopt when a label is unknown.
    std::optional<Simplex> simplex_of(const std::vector<std::string>& labels) const;
    /// Like simplex_of but raises not_a_face when the labels do not span a face.
    Simplex face_of(const std::vector<std::string>& labels) const;

    std::string to_string(const Simplex& face) const;

    bool operator==(const SimplicialComplex& other) const
    {
        return labels_ == other.labels_ && facets_ == other.facets_;
    }
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

private:
    struct Lattice;
    struct LatticeCache;

    const Lattice& lattice() const;

    std::vector<std::string> labels_;
    std::vector<Simplex> facets_;
    int dim_ = -1;
    std::shared_ptr<LatticeCache> cache_;
};

/// Subsets of `facet` of each size, ascending by size then lexicographically.
std::vector<Simplex> proper_faces(const Simplex& facet);

/// True when `a` is a subset of `b` (both sorted).
bool is_subset(const Simplex& a, const Simplex& b);

/// Sorted set difference a \ b.
Simplex set_minus(const Simplex& a, const Simplex& b);

/// Sorted set union.
Simplex set_union(const Simplex& a, const Simplex& b);

/// Sorted intersection.
Simplex set_intersection(const Simplex& a, const Simplex& b);

}  // namespace morselab
