#pragma once

#include "morselab/complex.hpp"
#include "morselab/face_poset.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace morselab {

using CubeCoord = std::array<int, 3>;

/// A tube drilled downward through a pile of unit cubes.
///
/// `path` lists the removed cubes in order.  It starts in the top layer, moves
/// one face at a time, stays away from the side walls and ends in the layer
/// directly above the bottom one.  Cubes that are three or more steps apart
/// along the path must not touch, not even at a corner.
struct KnotSpec {
    int nx = 0;
    int ny = 0;
    int nz = 0;
    std::vector<CubeCoord> path;

    /// Trefoil-knotted tube in a 9×5×19 pile.
    static KnotSpec trefoil();
    /// Straight vertical tube in an n×n×n pile (unknotted control case).
    static KnotSpec straight(int n);
};

struct PileOfCubes {
    int nx = 0, ny = 0, nz = 0;
    std::vector<CubeCoord> cubes;
    /// Vertices, edges, squares and cubes of the union, with boundary mask.
    FacePoset cubical;
    /// Each cube split into six tetrahedra around its main diagonal.
    SimplicialComplex triangulation;
};

/// Label of the grid point (x, y, z) in an nx×ny×nz pile.
std::string grid_label(int nx, int ny, int x, int y, int z);

/// nx×ny×nz cubes minus `removed`, which must be interior cubes whose removal
/// keeps the cubes face-connected.
PileOfCubes pile_of_cubes(int nx, int ny, int nz, const std::vector<CubeCoord>& removed = {});

struct FurchBall {
    PileOfCubes pile;
    /// Interior edge with both endpoints on the boundary, directly beneath the tube end.
    std::array<std::string, 2> spanning_edge;
    const SimplicialComplex& ball() const { return pile.triangulation; }
};

FurchBall furch_ball(const KnotSpec& spec);

SimplicialComplex simplex_complex(int dim);
SimplicialComplex boundary_of_simplex(int dim);
/// Boundary of the (d+1)-dimensional cross-polytope, a d-sphere on 2d+2 vertices.
SimplicialComplex cross_polytope_boundary(int d);
/// Six-vertex real projective plane.
SimplicialComplex rp2_six();
/// Seven-vertex torus.
SimplicialComplex torus_seven();
/// Annulus from six triangles.
SimplicialComplex annulus();
/// Two triangles sharing a single vertex; a pseudo-manifold only in the weak sense.
SimplicialComplex bowtie();

/// Boundary of a stacked (d+1)-polytope with d+2+steps vertices.
SimplicialComplex stacked_sphere(int d, int steps, std::uint64_t seed);
/// Stacked d-ball with 1+steps facets (a tree of simplices).
SimplicialComplex stacked_ball(int d, int steps, std::uint64_t seed);
/// Applies `steps` random stellar subdivisions of faces of dimension >= 1.
SimplicialComplex random_stellar(const SimplicialComplex& k, int steps, std::uint64_t seed);

}  // namespace morselab
