#include "morselab/constructions.hpp"

#include "morselab/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace morselab {

namespace {

void require_face(const SimplicialComplex& k, const Simplex& sigma)
{
    if (sigma.empty()) return;
    if (!k.contains(sigma)) fail(ErrorKind::not_a_face, k.to_string(sigma) + " is not a face of the complex");
}

// Ridges of a pure complex with the facets containing them.
std::map<Simplex, std::vector<int>> ridge_table(const SimplicialComplex& k)
{
    std::map<Simplex, std::vector<int>> ridges;
    const auto& facets = k.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto& f = facets[i];
        for (std::size_t j = 0; j < f.size(); ++j) {
            Simplex r;
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != j) r.push_back(f[t]);
            ridges[r].push_back(static_cast<int>(i));
        }
    }
    return ridges;
}

}  // namespace

SimplicialComplex boundary_complex(const SimplicialComplex& k)
{
    if (!k.is_pure()) fail(ErrorKind::precondition, "boundary complex requires a pure complex");
    if (k.is_void() || k.dim() < 0) return SimplicialComplex();
    std::vector<Simplex> out;
    for (const auto& [r, owners] : ridge_table(k))
        if (owners.size() == 1) out.push_back(r);
    return SimplicialComplex::from_ids(k.labels(), std::move(out));
}

PseudoManifoldInfo pseudomanifold_check(const SimplicialComplex& k)
{
    PseudoManifoldInfo info;
    info.pure = k.is_pure() && !k.is_void();
    if (!info.pure) return info;
    auto ridges = ridge_table(k);
    std::vector<Simplex> boundary;
    for (const auto& [r, owners] : ridges) {
        info.max_ridge_degree = std::max(info.max_ridge_degree, owners.size());
        if (owners.size() == 1) boundary.push_back(r);
    }
    if (k.dim() >= 1) info.boundary = SimplicialComplex::from_ids(k.labels(), std::move(boundary));

    // Strong connectivity through ridges.
    const std::size_t n = k.facet_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::size_t components = n;
    for (const auto& [r, owners] : ridges)
        for (std::size_t i = 1; i < owners.size(); ++i) {
            int a = find(owners[0]), b = find(owners[i]);
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                --components;
            }
        }
    info.strongly_connected = components == 1;
    info.is_pseudomanifold = info.strongly_connected && info.max_ridge_degree <= 2;
    return info;
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma)
{
    require_face(k, sigma);
    std::vector<Simplex> out;
    for (const auto& f : k.facets())
        if (is_subset(sigma, f)) out.push_back(set_minus(f, sigma));
    return SimplicialComplex::from_ids(k.labels(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma)
{
    require_face(k, sigma);
    std::vector<Simplex> out;
    for (const auto& f : k.facets())
        if (is_subset(sigma, f)) out.push_back(f);
    return SimplicialComplex::from_ids(k.labels(), std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& k, const Simplex& sigma)
{
    if (sigma.empty()) return SimplicialComplex();
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        if (!is_subset(sigma, f)) {
            out.push_back(f);
            continue;
        }
        for (Vertex u : sigma) out.push_back(set_minus(f, Simplex{u}));
    }
    return SimplicialComplex::from_ids(k.labels(), std::move(out));
}

SimplicialComplex removal(const SimplicialComplex& k, const Simplex& sigma)
{
    if (sigma.empty() || !k.contains(sigma))
        fail(ErrorKind::not_a_face, k.to_string(sigma) + " is not a face of the complex");
    return deletion(k, sigma);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& vertices)
{
    Simplex keep = vertices;
    std::sort(keep.begin(), keep.end());
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        auto s = set_intersection(f, keep);
        if (!s.empty()) out.push_back(std::move(s));
    }
    return SimplicialComplex::from_ids(k.labels(), std::move(out));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int dim)
{
    if (dim < 0) return k.is_void() ? SimplicialComplex() : SimplicialComplex::empty_face();
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        if (static_cast<int>(f.size()) - 1 <= dim) {
            out.push_back(f);
            continue;
        }
        for (const auto& s : proper_faces(f))
            if (static_cast<int>(s.size()) - 1 == dim) out.push_back(s);
    }
    return SimplicialComplex::from_ids(k.labels(), std::move(out));
}

SimplicialComplex subcomplex_of_facets(const SimplicialComplex& k, const std::vector<std::size_t>& facet_ids)
{
    std::vector<Simplex> out;
    for (auto i : facet_ids) out.push_back(k.facets().at(i));
    return SimplicialComplex::from_ids(k.labels(), std::move(out));
}

DualGraph dual_graph(const SimplicialComplex& k)
{
    if (!k.is_pure()) fail(ErrorKind::precondition, "dual graph requires a pure complex");
    DualGraph g;
    g.nodes = k.facet_count();
    g.adjacency.resize(g.nodes);
    if (k.dim() < 1) return g;
    for (const auto& [r, owners] : ridge_table(k)) {
        if (owners.size() < 2) continue;
        const int ridge = *k.face_index(r);
        for (std::size_t i = 0; i < owners.size(); ++i)
            for (std::size_t j = i + 1; j < owners.size(); ++j) {
                g.edges.push_back({owners[i], owners[j], ridge});
                g.adjacency[static_cast<std::size_t>(owners[i])].push_back({owners[j], ridge});
                g.adjacency[static_cast<std::size_t>(owners[j])].push_back({owners[i], ridge});
            }
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex)
{
    if (k.find_vertex(apex)) fail(ErrorKind::invalid_input, "apex '" + apex + "' is already a vertex");
    auto labels = k.labels();
    const Vertex v = static_cast<Vertex>(labels.size());
    labels.push_back(apex);
    std::vector<Simplex> out;
    for (auto f : k.facets()) {
        f.push_back(v);
        out.push_back(std::move(f));
    }
    if (out.empty()) out.push_back({v});
    return SimplicialComplex::from_ids(labels, std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    auto labels = a.labels();
    const Vertex offset = static_cast<Vertex>(labels.size());
    for (const auto& l : b.labels()) {
        if (a.find_vertex(l)) fail(ErrorKind::invalid_input, "join requires disjoint vertex labels ('" + l + "')");
        labels.push_back(l);
    }
    std::vector<Simplex> out;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            Simplex s = f;
            for (Vertex v : g) s.push_back(v + offset);
            out.push_back(std::move(s));
        }
    return SimplicialComplex::from_ids(labels, std::move(out));
}

SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north, const std::string& south)
{
    auto poles = SimplicialComplex::from_facets(std::vector<std::vector<std::string>>{{north}, {south}});
    return join(k, poles);
}

std::string barycenter_label(const SimplicialComplex& k, const Simplex& face)
{
    std::string out = "[";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out += ",";
        out += k.label(face[i]);
    }
    return out + "]";
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k)
{
    std::vector<std::string> labels;
    std::unordered_map<Simplex, Vertex, SimplexHash> id;
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.faces(d)) {
            id.emplace(s, static_cast<Vertex>(labels.size()));
            labels.push_back(barycenter_label(k, s));
        }
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        if (f.empty()) continue;
        // Every ordering of the vertices gives a maximal chain of prefixes.
        Simplex order = f;
        do {
            Simplex chain;
            Simplex prefix;
            for (Vertex v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(id.at(prefix));
            }
            out.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex::from_ids(labels, std::move(out));
}

SimplicialComplex order_complex(const FacePoset& p)
{
    if (!p.is_graded()) fail(ErrorKind::invalid_input, "order complex requires a graded poset");
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < p.size(); ++c) labels.push_back(p.cell_name(static_cast<int>(c)));
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            for (std::size_t c = 0; c < p.size(); ++c) labels[c] = std::to_string(c);
    }
    std::vector<Simplex> out;
    Simplex chain;
    std::function<void(int)> descend = [&](int c) {
        chain.push_back(c);
        if (p.faces(c).empty()) {
            out.push_back(chain);
        } else {
            for (int f : p.faces(c)) descend(f);
        }
        chain.pop_back();
    };
    for (std::size_t c = 0; c < p.size(); ++c)
        if (p.cofaces(static_cast<int>(c)).empty()) descend(static_cast<int>(c));
    return SimplicialComplex::from_ids(labels, std::move(out));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<std::string> labels = a.labels();
    std::vector<Simplex> out = a.facets();
    std::vector<Vertex> map_b;
    for (const auto& l : b.labels()) {
        if (auto v = a.find_vertex(l)) {
            map_b.push_back(*v);
        } else {
            map_b.push_back(static_cast<Vertex>(labels.size()));
            labels.push_back(l);
        }
    }
    for (const auto& f : b.facets()) {
        Simplex s;
        for (Vertex v : f) s.push_back(map_b[static_cast<std::size_t>(v)]);
        out.push_back(std::move(s));
    }
    return SimplicialComplex::from_ids(labels, std::move(out));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<Simplex> out;
    for (int d = 0; d <= std::min(a.dim(), b.dim()); ++d)
        for (const auto& s : a.faces(d)) {
            auto t = b.simplex_of(a.labels_of(s));
            if (t && b.contains(*t)) out.push_back(s);
        }
    return SimplicialComplex::from_ids(a.labels(), std::move(out));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Simplex& face, const std::string& new_label)
{
    if (face.empty() || !k.contains(face))
        fail(ErrorKind::not_a_face, k.to_string(face) + " is not a face of the complex");
    if (k.find_vertex(new_label)) fail(ErrorKind::invalid_input, "label '" + new_label + "' is already a vertex");
    auto labels = k.labels();
    const Vertex v = static_cast<Vertex>(labels.size());
    labels.push_back(new_label);
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        if (!is_subset(face, f)) {
            out.push_back(f);
            continue;
        }
        for (Vertex u : face) {
            Simplex s = set_minus(f, Simplex{u});
            s.push_back(v);
            out.push_back(std::move(s));
        }
    }
    return SimplicialComplex::from_ids(labels, std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<std::string>& new_labels)
{
    if (new_labels.size() != k.vertex_count()) fail(ErrorKind::invalid_input, "relabel: wrong number of labels");
    return SimplicialComplex::from_ids(new_labels, k.facets());
}

}  // namespace morselab
