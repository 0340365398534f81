#pragma once

#include "morselab/complex.hpp"
#include "morselab/face_poset.hpp"
#include "morselab/snf.hpp"

#include <string>
#include <vector>

namespace morselab::homology {

struct Coefficients {
    enum class Kind { integers, rationals, prime };
    Kind kind = Kind::integers;
    long long prime = 0;

    static Coefficients Z() { return {Kind::integers, 0}; }
    static Coefficients Q() { return {Kind::rationals, 0}; }
    static Coefficients F(long long p);

    bool is_field() const { return kind != Kind::integers; }
    /// "z", "q", "f2", "fp:<p>".
    std::string name() const;
    bool operator==(const Coefficients& o) const { return kind == o.kind && prime == o.prime; }
};

/// Accepts z, q, f2, fp:<p> (also fp<p>).
Coefficients parse_coefficients(const std::string& text);

/**
 * Boundary maps of a chain complex.  `ranks[k]` is the number of k-cells and
 * `boundary[k]` maps C_k to C_{k-1} (`boundary[0]` is the augmentation when
 * reduced, otherwise empty).  Entries are integers; over a field they are
 * interpreted modulo the characteristic.
 */
struct ChainComplex {
    Coefficients coefficients;
    bool reduced = false;
    std::vector<std::size_t> ranks;
    std::vector<SparseIntMatrix> boundary;
};

/// Oriented simplicial chains with the usual alternating signs.
ChainComplex chain_complex(const SimplicialComplex& k, Coefficients coefficients = Coefficients::Z(),
                           bool reduced = false);

/// Cellular chains of a poset with all incidences equal to one.  Only meaningful
/// over F_2; other coefficients raise a precondition error with a remediation hint.
ChainComplex chain_complex(const FacePoset& p, Coefficients coefficients, bool reduced = false);

/// Checks that consecutive boundary maps compose to zero (in the coefficient ring).
bool boundary_squares_to_zero(const ChainComplex& c);

struct HomologyProfile {
    Coefficients coefficients;
    bool reduced = false;
    /// betti[i] is the rank of H_{i + first_dim}; first_dim is -1 for reduced homology.
    int first_dim = 0;
    std::vector<long long> betti;
    /// Integer coefficients only: invariant factors of the torsion part per degree.
    std::vector<std::vector<BigInt>> torsion;

    long long betti_at(int i) const;
    const std::vector<BigInt>& torsion_at(int i) const;
    /// Rank plus number of torsion summands: the minimal number of generators of H_i.
    long long generators_at(int i) const;
    bool is_zero_at(int i) const { return generators_at(i) == 0; }
    int top_dim() const { return first_dim + static_cast<int>(betti.size()) - 1; }
    long long euler_characteristic() const;
    /// Betti numbers as "(b0,b1,...)".
    std::string betti_text() const;
    std::string to_json() const;
};

HomologyProfile homology(const ChainComplex& c);
HomologyProfile homology(const SimplicialComplex& k, Coefficients coefficients = Coefficients::Z(),
                         bool reduced = false);
HomologyProfile homology(const FacePoset& p, Coefficients coefficients, bool reduced = false);

/// True when every reduced homology group vanishes.
bool is_acyclic(const SimplicialComplex& k, Coefficients coefficients = Coefficients::Z());

/// Reduced homology equal to that of a sphere of the given dimension.
bool has_sphere_homology(const SimplicialComplex& k, int dim, Coefficients coefficients = Coefficients::Z());

struct DepthReport {
    int dim = -1;
    Coefficients field;
    int adepth = 0;
    bool cohen_macaulay = false;
    /// A face whose link realises the minimum (empty means the whole complex).
    Simplex witness_face;
    int witness_degree = -1;
};

/// Largest m such that every face σ (including ∅) has vanishing reduced link
/// homology below degree m - dim σ - 1; capped at dim K.
DepthReport algebraic_depth(const SimplicialComplex& k, Coefficients field = Coefficients::Q());

/// Every vertex link has the reduced homology of a (d-1)-sphere or is acyclic,
/// recursively for all nonempty faces: the homology-manifold test used to gate
/// homological obstructions.
bool is_homology_manifold(const SimplicialComplex& k, Coefficients field = Coefficients::Z());

}  // namespace morselab::homology
