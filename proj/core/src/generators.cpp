#include "morselab/generators.hpp"

#include "morselab/constructions.hpp"
#include "morselab/error.hpp"
#include "morselab/rng.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace morselab {

namespace {

using Key = std::array<int, 3>;  // doubled coordinates of a cell centre

int cell_dim(const Key& k) { return (k[0] & 1) + (k[1] & 1) + (k[2] & 1); }

bool inside(const CubeCoord& c, int nx, int ny, int nz)
{
    return c[0] >= 0 && c[1] >= 0 && c[2] >= 0 && c[0] < nx && c[1] < ny && c[2] < nz;
}

std::string coord_text(const CubeCoord& c)
{
    return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

bool face_connected(const std::vector<CubeCoord>& cubes)
{
    if (cubes.empty()) return false;
    std::set<CubeCoord> all(cubes.begin(), cubes.end());
    std::set<CubeCoord> seen{cubes.front()};
    std::vector<CubeCoord> stack{cubes.front()};
    while (!stack.empty()) {
        auto c = stack.back();
        stack.pop_back();
        for (int axis = 0; axis < 3; ++axis)
            for (int s : {-1, 1}) {
                auto n = c;
                n[static_cast<std::size_t>(axis)] += s;
                if (all.count(n) && seen.insert(n).second) stack.push_back(n);
            }
    }
    return seen.size() == all.size();
}

PileOfCubes build_pile(int nx, int ny, int nz, std::vector<CubeCoord> cubes)
{
    PileOfCubes pile;
    pile.nx = nx;
    pile.ny = ny;
    pile.nz = nz;
    std::sort(cubes.begin(), cubes.end());
    pile.cubes = cubes;

    // Cubical cells keyed by doubled centre coordinates.
    std::map<Key, int> cube_count;  // number of cubes containing each cell
    for (const auto& c : cubes)
        for (int dx = 0; dx <= 2; ++dx)
            for (int dy = 0; dy <= 2; ++dy)
                for (int dz = 0; dz <= 2; ++dz) ++cube_count[{2 * c[0] + dx, 2 * c[1] + dy, 2 * c[2] + dz}];
    std::vector<Key> keys;
    for (const auto& [k, n] : cube_count) keys.push_back(k);
    std::stable_sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) { return cell_dim(a) < cell_dim(b); });
    std::map<Key, int> id;
    for (std::size_t i = 0; i < keys.size(); ++i) id[keys[i]] = static_cast<int>(i);
    std::vector<int> dims;
    std::vector<std::vector<int>> faces;
    std::vector<std::string> names;
    for (const auto& k : keys) {
        dims.push_back(cell_dim(k));
        std::vector<int> f;
        for (std::size_t axis = 0; axis < 3; ++axis) {
            if (!(k[axis] & 1)) continue;
            for (int s : {-1, 1}) {
                auto n = k;
                n[axis] += s;
                f.push_back(id.at(n));
            }
        }
        faces.push_back(std::move(f));
        names.push_back("<" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ">");
    }
    pile.cubical = FacePoset::from_cells(std::move(dims), std::move(faces));
    pile.cubical.set_names(std::move(names));
    std::vector<char> mask(keys.size(), 0);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (cell_dim(keys[i]) != 2 || pile.cubical.cofaces(static_cast<int>(i)).size() != 1) continue;
        std::vector<int> stack{static_cast<int>(i)};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            if (mask[static_cast<std::size_t>(c)]) continue;
            mask[static_cast<std::size_t>(c)] = 1;
            for (int f : pile.cubical.faces(c)) stack.push_back(f);
        }
    }
    pile.cubical.set_boundary_mask(std::move(mask));

    // Six tetrahedra per cube along the (0,0,0)-(1,1,1) diagonal; neighbouring
    // cubes then cut every shared square along the same diagonal.
    std::vector<std::string> labels;
    std::map<int, Vertex> vertex_of;
    auto vertex = [&](int x, int y, int z) {
        const int key = x + (nx + 1) * (y + (ny + 1) * z);
        auto [it, inserted] = vertex_of.emplace(key, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(std::to_string(key));
        return it->second;
    };
    std::vector<Simplex> tets;
    std::array<int, 3> perm{0, 1, 2};
    for (const auto& c : cubes) {
        perm = {0, 1, 2};
        do {
            std::array<int, 3> p = c;
            Simplex t{vertex(p[0], p[1], p[2])};
            for (int axis : perm) {
                ++p[static_cast<std::size_t>(axis)];
                t.push_back(vertex(p[0], p[1], p[2]));
            }
            tets.push_back(std::move(t));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    pile.triangulation = SimplicialComplex::from_ids(labels, std::move(tets));
    return pile;
}

}  // namespace

std::string grid_label(int nx, int ny, int x, int y, int z)
{
    return std::to_string(x + (nx + 1) * (y + (ny + 1) * z));
}

PileOfCubes pile_of_cubes(int nx, int ny, int nz, const std::vector<CubeCoord>& removed)
{
    if (nx < 1 || ny < 1 || nz < 1) fail(ErrorKind::invalid_input, "pile dimensions must be positive");
    std::set<CubeCoord> gone;
    for (const auto& c : removed) {
        if (!inside(c, nx, ny, nz)) fail(ErrorKind::invalid_input, "cube " + coord_text(c) + " is outside the grid");
        if (c[0] == 0 || c[1] == 0 || c[2] == 0 || c[0] == nx - 1 || c[1] == ny - 1 || c[2] == nz - 1)
            fail(ErrorKind::invalid_input, "cube " + coord_text(c) + " is not interior");
        gone.insert(c);
    }
    std::vector<CubeCoord> cubes;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int z = 0; z < nz; ++z)
                if (!gone.count({x, y, z})) cubes.push_back({x, y, z});
    if (cubes.empty()) fail(ErrorKind::invalid_input, "every cube was removed");
    if (!face_connected(cubes)) fail(ErrorKind::invalid_input, "removal disconnects the pile");
    return build_pile(nx, ny, nz, std::move(cubes));
}

FurchBall furch_ball(const KnotSpec& spec)
{
    const int nx = spec.nx, ny = spec.ny, nz = spec.nz;
    if (nx < 3 || ny < 3 || nz < 3) fail(ErrorKind::invalid_input, "grid must be at least 3×3×3");
    const auto& path = spec.path;
    if (path.empty()) fail(ErrorKind::invalid_input, "tube path is empty");
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& c = path[i];
        if (c[2] <= 0 && c[0] >= 0 && c[1] >= 0 && c[0] < nx && c[1] < ny)
            fail(ErrorKind::invalid_input, "tube perforates the bottom at step " + std::to_string(i));
        if (!inside(c, nx, ny, nz) || c[0] == 0 || c[1] == 0 || c[0] == nx - 1 || c[1] == ny - 1)
            fail(ErrorKind::invalid_input, "tube exits the grid at step " + std::to_string(i) + " " + coord_text(c));
        if (i == 0 && c[2] != nz - 1) fail(ErrorKind::invalid_input, "tube must start in the top layer");
        if (i > 0 && c[2] == nz - 1) fail(ErrorKind::invalid_input, "tube returns to the top layer at step " + std::to_string(i));
        if (i > 0) {
            const auto& p = path[i - 1];
            const int step = std::abs(c[0] - p[0]) + std::abs(c[1] - p[1]) + std::abs(c[2] - p[2]);
            if (step != 1) fail(ErrorKind::invalid_input, "tube makes a non-unit step at " + std::to_string(i));
        }
        for (std::size_t j = 0; j + 3 <= i; ++j) {
            const auto& q = path[j];
            const int cheb = std::max({std::abs(c[0] - q[0]), std::abs(c[1] - q[1]), std::abs(c[2] - q[2])});
            if (cheb < 2)
                fail(ErrorKind::invalid_input,
                     "tube touches itself at steps " + std::to_string(j) + " and " + std::to_string(i));
        }
        for (std::size_t j = 0; j < i; ++j)
            if (path[j] == c) fail(ErrorKind::invalid_input, "tube revisits cube " + coord_text(c));
    }
    if (path.back()[2] != 1) fail(ErrorKind::invalid_input, "tube must stop in the layer above the bottom");

    std::set<CubeCoord> tube(path.begin(), path.end());
    std::vector<CubeCoord> cubes;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int z = 0; z < nz; ++z)
                if (!tube.count({x, y, z})) cubes.push_back({x, y, z});

    FurchBall ball;
    ball.pile = build_pile(nx, ny, nz, std::move(cubes));
    const auto& end = path.back();
    ball.spanning_edge = {grid_label(nx, ny, end[0], end[1], 0), grid_label(nx, ny, end[0], end[1], 1)};
    return ball;
}

KnotSpec KnotSpec::trefoil()
{
    // Two passes through a three-crossing braid region, joined by a return column at x = 7.
    static const CubeCoord turns[] = {
        {1, 3, 18}, {1, 3, 15}, {1, 1, 15}, {5, 1, 15}, {5, 3, 15}, {5, 3, 11}, {3, 3, 11},
        {3, 3, 7},  {1, 3, 7},  {1, 3, 3},  {1, 1, 3},  {5, 1, 3},  {5, 3, 3},  {5, 3, 1},
        {7, 3, 1},  {7, 3, 17}, {3, 3, 17}, {3, 3, 13}, {1, 3, 13}, {1, 3, 9},  {1, 1, 9},
        {5, 1, 9},  {5, 3, 9},  {5, 3, 5},  {3, 3, 5},  {3, 3, 1},  {1, 3, 1}};
    KnotSpec spec;
    spec.nx = 9;
    spec.ny = 5;
    spec.nz = 19;
    spec.path.push_back(turns[0]);
    for (std::size_t i = 1; i < std::size(turns); ++i) {
        CubeCoord cur = turns[i - 1];
        while (cur != turns[i]) {
            for (int axis = 0; axis < 3; ++axis)
                if (cur[axis] != turns[i][axis]) {
                    cur[axis] += cur[axis] < turns[i][axis] ? 1 : -1;
                    break;
                }
            spec.path.push_back(cur);
        }
    }
    return spec;
}

KnotSpec KnotSpec::straight(int n)
{
    KnotSpec spec;
    spec.nx = spec.ny = spec.nz = n;
    for (int z = n - 1; z >= 1; --z) spec.path.push_back({n / 2, n / 2, z});
    return spec;
}

SimplicialComplex simplex_complex(int dim)
{
    std::vector<long long> f;
    for (int i = 1; i <= dim + 1; ++i) f.push_back(i);
    return SimplicialComplex::from_facets(std::vector<std::vector<long long>>{f});
}

SimplicialComplex boundary_of_simplex(int dim)
{
    std::vector<std::vector<long long>> facets;
    for (int skip = 1; skip <= dim + 2; ++skip) {
        std::vector<long long> f;
        for (int i = 1; i <= dim + 2; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cross_polytope_boundary(int d)
{
    const int n = d + 1;
    std::vector<std::vector<long long>> facets;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<long long> f;
        for (int i = 0; i < n; ++i) f.push_back(2 * i + 1 + ((mask >> i) & 1));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex rp2_six()
{
    return SimplicialComplex::from_facets(std::vector<std::vector<long long>>{
        {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex torus_seven()
{
    std::vector<std::vector<long long>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        facets.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex annulus()
{
    return SimplicialComplex::from_facets(std::vector<std::vector<long long>>{
        {1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {3, 5, 6}, {1, 3, 6}, {1, 4, 6}});
}

SimplicialComplex bowtie()
{
    return SimplicialComplex::from_facets(std::vector<std::vector<long long>>{{1, 2, 3}, {1, 4, 5}});
}

namespace {

SimplicialComplex stack_facets(SimplicialComplex k, int steps, std::uint64_t seed, int first_label)
{
    Rng rng(seed);
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : k.facets()) facets.push_back(k.labels_of(f));
    int next = first_label;
    for (int s = 0; s < steps; ++s) {
        const std::size_t pick = static_cast<std::size_t>(rng.below(facets.size()));
        auto target = facets[pick];
        facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(pick));
        const std::string v = std::to_string(next++);
        for (std::size_t i = 0; i < target.size(); ++i) {
            auto f = target;
            f[i] = v;
            facets.push_back(f);
        }
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace

SimplicialComplex stacked_sphere(int d, int steps, std::uint64_t seed)
{
    if (d < 1) fail(ErrorKind::invalid_input, "stacked sphere needs dimension >= 1");
    return stack_facets(boundary_of_simplex(d), steps, seed, d + 3);
}

SimplicialComplex stacked_ball(int d, int steps, std::uint64_t seed)
{
    if (d < 1) fail(ErrorKind::invalid_input, "stacked ball needs dimension >= 1");
    // Glue a new simplex onto a random boundary ridge each step.
    Rng rng(seed);
    std::vector<std::vector<long long>> facets;
    std::vector<long long> first;
    for (int i = 1; i <= d + 1; ++i) first.push_back(i);
    facets.push_back(first);
    std::map<std::vector<long long>, int> ridge_use;
    auto add_ridges = [&](const std::vector<long long>& f) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto r = f;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
            std::sort(r.begin(), r.end());
            ++ridge_use[r];
        }
    };
    add_ridges(first);
    long long next = d + 2;
    for (int s = 0; s < steps; ++s) {
        std::vector<std::vector<long long>> free;
        for (const auto& [r, n] : ridge_use)
            if (n == 1) free.push_back(r);
        auto r = free[static_cast<std::size_t>(rng.below(free.size()))];
        r.push_back(next++);
        facets.push_back(r);
        add_ridges(r);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex random_stellar(const SimplicialComplex& k, int steps, std::uint64_t seed)
{
    Rng rng(seed);
    SimplicialComplex out = k;
    long long next = 0;
    for (const auto& l : k.labels()) {
        try {
            next = std::max(next, std::stoll(l) + 1);
        } catch (...) {
        }
    }
    for (int s = 0; s < steps; ++s) {
        std::vector<Simplex> candidates;
        for (int d = 1; d <= out.dim(); ++d)
            for (const auto& f : out.faces(d)) candidates.push_back(f);
        if (candidates.empty()) break;
        const auto& face = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
        std::string label = std::to_string(next++);
        while (out.find_vertex(label)) label = std::to_string(next++);
        out = stellar_subdivision(out, face, label);
    }
    return out;
}

}  // namespace morselab
