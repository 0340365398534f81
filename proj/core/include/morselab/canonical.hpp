#pragma once

#include "morselab/complex.hpp"

#include <string>
#include <vector>

namespace morselab {

/// Isomorphism-invariant encoding of a complex.  Two complexes are isomorphic
/// exactly when their canonical forms are equal.
std::string canonical_form(const SimplicialComplex& k);

/// Vertex v of `k` becomes canonical vertex result[v].
std::vector<Vertex> canonical_labeling(const SimplicialComplex& k);

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace morselab
