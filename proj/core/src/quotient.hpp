#pragma once

#include "morselab/complex.hpp"
#include "morselab/error.hpp"
#include "morselab/lc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace morselab::lc::detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

inline std::string join_labels(const std::vector<std::string>& labels)
{
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : " ") + l;
    return "{" + out + "}";
}

/// Quotient of a tree under facet identifications, tracked on vertices and on faces.
class Quotient {
public:
    explicit Quotient(const TreeOfSimplices& tree) : k_(tree.complex), d_(tree.d), vertices_(k_.vertex_count()), faces_(0)
    {
        std::size_t total = 0;
        for (int j = 0; j <= d_; ++j) {
            offset_.push_back(total);
            total += k_.faces(j).size();
        }
        faces_ = UnionFind(total);
        ridge_uses_.assign(k_.faces(d_ - 1).size(), 0);
        for (const auto& f : k_.facets())
            for (const auto& r : facet_ridges(f)) ++ridge_uses_[static_cast<std::size_t>(*k_.face_index(r))];
        glued_.assign(ridge_uses_.size(), 0);
    }

    const SimplicialComplex& tree_complex() const { return k_; }
    int dim() const { return d_; }

    /// Boundary ridges of the tree that have not been glued yet.
    std::vector<Simplex> open_ridges() const
    {
        std::vector<Simplex> out;
        const auto& ridges = k_.faces(d_ - 1);
        for (std::size_t i = 0; i < ridges.size(); ++i)
            if (ridge_uses_[i] == 1 && !glued_[i]) out.push_back(ridges[i]);
        return out;
    }

    int vertex_class(Vertex v) { return vertices_.find(v); }
    int face_class(const Simplex& s) { return faces_.find(face_id(s)); }

    /// Class representative of every tree vertex.
    std::vector<int> vertex_partition()
    {
        std::vector<int> out(k_.vertex_count());
        for (std::size_t v = 0; v < out.size(); ++v) out[v] = vertices_.find(static_cast<int>(v));
        return out;
    }

    /// Face id of a tree face across all dimensions.
    int face_id(const Simplex& s) const
    {
        return static_cast<int>(offset_[s.size() - 1]) + *k_.face_index(s);
    }

    Simplex tree_ridge(const std::vector<std::string>& labels, const char* role) const
    {
        if (labels.size() != static_cast<std::size_t>(d_))
            fail(ErrorKind::invalid_input, std::string(role) + " " + join_labels(labels) + " is not a (d-1)-face");
        auto s = k_.simplex_of(labels);
        if (!s || !k_.contains(*s))
            fail(ErrorKind::not_a_face, std::string(role) + " " + join_labels(labels) + " is not a face of the tree");
        const auto idx = static_cast<std::size_t>(*k_.face_index(*s));
        if (ridge_uses_[idx] != 1)
            fail(ErrorKind::precondition, std::string(role) + " " + join_labels(labels) + " is not a boundary facet of the tree");
        if (glued_[idx])
            fail(ErrorKind::precondition, std::string(role) + " " + join_labels(labels) + " was already glued");
        return *s;
    }

    /// Bijection as a map from vertices of `a` to vertices of `b`.
    std::map<Vertex, Vertex> bijection(const Simplex& a, const Simplex& b, const Gluing& g) const
    {
        std::map<Vertex, Vertex> map;
        std::set<Vertex> image;
        for (const auto& [x, y] : g.bijection) {
            const auto vx = k_.find_vertex(x);
            const auto vy = k_.find_vertex(y);
            if (!vx || !vy || !std::binary_search(a.begin(), a.end(), *vx) || !std::binary_search(b.begin(), b.end(), *vy))
                fail(ErrorKind::invalid_input, "bijection entry " + x + " -> " + y + " leaves the glued facets");
            if (!map.emplace(*vx, *vy).second || !image.insert(*vy).second)
                fail(ErrorKind::invalid_input, "bijection repeats a vertex");
        }
        if (map.size() != a.size()) fail(ErrorKind::invalid_input, "bijection must cover every vertex of the glued facet");
        return map;
    }

    bool same_class(const Simplex& a, const Simplex& b) { return faces_.find(face_id(a)) == faces_.find(face_id(b)); }

    /// The shared ridge, when every vertex is fixed by the bijection up to identification.
    bool adjacent(const Simplex& ridge, const std::map<Vertex, Vertex>& map)
    {
        Simplex image;
        for (Vertex v : ridge) {
            const Vertex w = map.at(v);
            if (vertices_.find(v) != vertices_.find(w)) return false;
            image.push_back(w);
        }
        std::sort(image.begin(), image.end());
        return same_class(ridge, image);
    }

    void glue(const Simplex& a, const Simplex& b, const std::map<Vertex, Vertex>& map)
    {
        if (a == b || same_class(a, b)) fail(ErrorKind::precondition, "a facet cannot be glued to itself");
        for (const auto& [x, y] : map) vertices_.unite(x, y);
        for (const auto& sub : proper_faces(a)) {
            if (sub.empty()) continue;
            Simplex image;
            for (Vertex v : sub) image.push_back(map.at(v));
            std::sort(image.begin(), image.end());
            faces_.unite(face_id(sub), face_id(image));
        }
        Simplex image;
        for (Vertex v : a) image.push_back(map.at(v));
        std::sort(image.begin(), image.end());
        faces_.unite(face_id(a), face_id(image));
        glued_[static_cast<std::size_t>(*k_.face_index(a))] = 1;
        glued_[static_cast<std::size_t>(*k_.face_index(b))] = 1;
    }

    /// Vertex classes of a tree face, sorted.
    std::vector<int> classes(const Simplex& s)
    {
        std::vector<int> out;
        for (Vertex v : s) out.push_back(vertices_.find(v));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Empty when every facet has distinct vertex classes and no two facets coincide.
    std::string facet_defect()
    {
        std::set<std::vector<int>> seen;
        for (const auto& f : k_.facets()) {
            auto c = classes(f);
            if (std::adjacent_find(c.begin(), c.end()) != c.end()) return "a facet has a repeated vertex";
            if (!seen.insert(std::move(c)).second) return "two facets share a vertex set";
        }
        return {};
    }

    /// Face classes agree with vertex-set classes in every dimension.
    bool faces_consistent()
    {
        for (int j = 0; j <= d_; ++j) {
            std::set<int> by_face;
            std::set<std::vector<int>> by_vertices;
            for (const auto& s : k_.faces(j)) {
                by_face.insert(faces_.find(face_id(s)));
                by_vertices.insert(classes(s));
            }
            if (by_face.size() != by_vertices.size()) return false;
        }
        return facet_defect().empty();
    }

    /// Smallest tree label in each vertex class.
    std::vector<std::string> class_labels()
    {
        std::vector<std::string> out(k_.vertex_count());
        for (std::size_t v = 0; v < out.size(); ++v) {
            auto& slot = out[static_cast<std::size_t>(vertices_.find(static_cast<int>(v)))];
            const auto& l = k_.label(static_cast<Vertex>(v));
            if (slot.empty() || label_less(l, slot)) slot = l;
        }
        for (std::size_t v = 0; v < out.size(); ++v) out[v] = out[static_cast<std::size_t>(vertices_.find(static_cast<int>(v)))];
        return out;
    }

    std::vector<std::string> labels_of(const Simplex& s, const std::vector<std::string>& names)
    {
        std::set<std::string> out;
        for (Vertex v : s) out.insert(names[static_cast<std::size_t>(v)]);
        return {out.begin(), out.end()};
    }

    /// Vertex-set quotient labelled by class_labels().
    SimplicialComplex complex()
    {
        const auto names = class_labels();
        std::vector<std::vector<std::string>> facets;
        for (const auto& f : k_.facets()) facets.push_back(labels_of(f, names));
        return SimplicialComplex::from_facets(facets);
    }

    static std::vector<Simplex> facet_ridges(const Simplex& f)
    {
        std::vector<Simplex> out;
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto r = f;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    SimplicialComplex k_;
    int d_;
    UnionFind vertices_;
    UnionFind faces_;
    std::vector<std::size_t> offset_;
    std::vector<int> ridge_uses_;
    std::vector<char> glued_;
};

}  // namespace morselab::lc::detail
