#pragma once

#include "morselab/complex.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace morselab {

/**
 * Graded poset of nonempty cells with its cover relation.
 *
 * Cells are numbered 0..size()-1, usually by increasing dimension.  `faces(c)` lists the
 * cells covered by c (its codimension-one faces); `cofaces(c)` the cells covering
 * it.  An optional boundary mask marks the cells of the boundary subcomplex.
 * Posets built from a simplicial complex also remember each cell's vertices.
 */
class FacePoset {
public:
    FacePoset() = default;

    /// Builds from per-cell dimensions and codimension-one faces.  Rejects
    /// out-of-range ids, repeated faces and covers that do not drop dimension by one.
    static FacePoset from_cells(std::vector<int> dims, std::vector<std::vector<int>> faces);

    std::size_t size() const { return dims_.size(); }
    int dim(int c) const { return dims_[static_cast<std::size_t>(c)]; }
    int max_dim() const { return max_dim_; }
    const std::vector<int>& faces(int c) const { return faces_[static_cast<std::size_t>(c)]; }
    const std::vector<int>& cofaces(int c) const { return cofaces_[static_cast<std::size_t>(c)]; }
    const std::vector<int>& cells_of_dim(int k) const;
    std::vector<std::size_t> counts_by_dim() const;
    long long euler_characteristic() const;

    bool has_boundary_mask() const { return !boundary_.empty(); }
    bool on_boundary(int c) const
    {
        return !boundary_.empty() && boundary_[static_cast<std::size_t>(c)] != 0;
    }
    const std::vector<char>& boundary_mask() const { return boundary_; }
    /// Installs a boundary mask; it must be closed under taking faces.
    void set_boundary_mask(std::vector<char> mask);

    bool is_simplicial() const { return static_cast<bool>(simplicial_); }
    const Simplex& vertices(int c) const { return simplicial_->vertices[static_cast<std::size_t>(c)]; }
    std::optional<int> find(const Simplex& s) const;
    const std::vector<std::string>& vertex_labels() const { return simplicial_->labels; }
    std::vector<std::string> cell_labels(int c) const;
    /// Finds the cell with the given vertex labels (simplicial posets only).
    std::optional<int> find_labels(std::vector<std::string> labels) const;

    void set_names(std::vector<std::string> names) { names_ = std::move(names); }
    std::string cell_name(int c) const;

    /// FNV-1a digest of dimensions and cover relations (independent of names).
    std::uint64_t structural_hash() const;

    /// Every interval of length two has exactly two middle elements.
    bool has_diamond_property() const;
    /// The mod-2 cellular boundary squares to zero.
    bool boundary_squared_vanishes_mod2() const;
    bool is_graded() const;

    /// Same cells with reversed order; cell c keeps id c and gets dimension max_dim - dim(c).
    /// Ids are therefore no longer sorted by dimension, which the poset tolerates.
    FacePoset opposite() const;

    /// Restriction to a set of cells closed under faces.  `old_to_new` receives the id map.
    FacePoset restrict_to(const std::vector<char>& keep, std::vector<int>* old_to_new = nullptr) const;

private:
    friend FacePoset face_poset(const SimplicialComplex&);

    struct SimplicialData {
        std::vector<std::string> labels;
        std::vector<Simplex> vertices;
        std::unordered_map<Simplex, int, SimplexHash> index;
    };

    void finish();

    std::vector<int> dims_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::vector<int>> cofaces_;
    std::vector<std::vector<int>> by_dim_;
    std::vector<char> boundary_;
    std::vector<std::string> names_;
    std::shared_ptr<const SimplicialData> simplicial_;
    int max_dim_ = -1;
};

/// Face poset of a simplicial complex (cells ordered by dimension, then lexicographically).
/// When the complex is pure the boundary mask marks the faces of its boundary complex.
FacePoset face_poset(const SimplicialComplex& k);

using PosetPtr = std::shared_ptr<const FacePoset>;

inline PosetPtr share(FacePoset p) { return std::make_shared<const FacePoset>(std::move(p)); }

}  // namespace morselab
