#include "morselab/complex.hpp"

#include "morselab/error.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace morselab {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::precondition: return "precondition violated";
    case ErrorKind::not_a_face: return "not a face";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::io: return "i/o error";
    case ErrorKind::internal: return "internal error";
    }
    return "error";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    return boost::hash_range(s.begin(), s.end());
}

namespace {

std::optional<long long> as_integer(const std::string& s)
{
    if (s.empty()) return std::nullopt;
    long long value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

}  // namespace

bool label_less(const std::string& a, const std::string& b)
{
    auto ia = as_integer(a);
    auto ib = as_integer(b);
    if (ia && ib) {
        if (*ia != *ib) return *ia < *ib;
        return a < b;
    }
    if (ia != ib && (ia || ib)) return static_cast<bool>(ia);
    return a < b;
}

bool is_subset(const Simplex& a, const Simplex& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex set_minus(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex set_union(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex set_intersection(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Simplex> proper_faces(const Simplex& facet)
{
    const std::size_t n = facet.size();
    std::vector<Simplex> out;
    if (n == 0) return out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(facet[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Simplex& x, const Simplex& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

struct SimplicialComplex::Lattice {
    std::vector<std::vector<Simplex>> by_dim;
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index;
};

struct SimplicialComplex::LatticeCache {
    std::once_flag once;
    std::unique_ptr<Lattice> lattice;
};

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<LatticeCache>()) {}

SimplicialComplex SimplicialComplex::empty_face()
{
    SimplicialComplex k;
    k.facets_.push_back({});
    k.dim_ = -1;
    return k;
}

SimplicialComplex SimplicialComplex::from_ids(const std::vector<std::string>& labels,
                                              std::vector<Simplex> facets)
{
    SimplicialComplex k;
    if (facets.empty()) return k;

    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            fail(ErrorKind::invalid_input, "facet repeats a vertex");
        for (Vertex v : f)
            if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
                fail(ErrorKind::invalid_input, "vertex id out of range");
    }

    // Relabel the used vertices into label order.
    std::vector<Vertex> used;
    for (const auto& f : facets) used.insert(used.end(), f.begin(), f.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::sort(used.begin(), used.end(), [&](Vertex a, Vertex b) {
        return label_less(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
    });
    for (std::size_t i = 1; i < used.size(); ++i)
        if (labels[static_cast<std::size_t>(used[i - 1])] == labels[static_cast<std::size_t>(used[i])])
            fail(ErrorKind::invalid_input, "duplicate vertex label '" +
                                               labels[static_cast<std::size_t>(used[i])] + "'");
    std::unordered_map<Vertex, Vertex> remap;
    k.labels_.reserve(used.size());
    for (std::size_t i = 0; i < used.size(); ++i) {
        remap[used[i]] = static_cast<Vertex>(i);
        k.labels_.push_back(labels[static_cast<std::size_t>(used[i])]);
    }
    for (auto& f : facets) {
        for (auto& v : f) v = remap.at(v);
        std::sort(f.begin(), f.end());
    }

    // Keep inclusion-maximal faces only.
    std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<std::vector<std::size_t>> containing(k.labels_.size());
    std::vector<Simplex> kept;
    for (auto& f : facets) {
        bool dominated = false;
        if (f.empty()) {
            dominated = !kept.empty();
        } else if (!kept.empty() && kept.front().size() > f.size()) {
            for (std::size_t idx : containing[static_cast<std::size_t>(f.front())]) {
                if (kept[idx].size() > f.size() && is_subset(f, kept[idx])) {
                    dominated = true;
                    break;
                }
            }
        }
        if (dominated) continue;
        for (Vertex v : f) containing[static_cast<std::size_t>(v)].push_back(kept.size());
        kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    k.facets_ = std::move(kept);
    k.dim_ = -1;
    for (const auto& f : k.facets_) k.dim_ = std::max(k.dim_, static_cast<int>(f.size()) - 1);
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets)
{
    if (facets.empty()) fail(ErrorKind::invalid_input, "no facets given");
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<Simplex> simplices;
    for (const auto& facet : facets) {
        if (facet.empty()) fail(ErrorKind::invalid_input, "empty facet");
        Simplex s;
        for (const auto& label : facet) {
            auto [it, inserted] = ids.emplace(label, static_cast<Vertex>(labels.size()));
            if (inserted) labels.push_back(label);
            s.push_back(it->second);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(ErrorKind::invalid_input, "facet repeats a vertex");
        simplices.push_back(std::move(s));
    }
    return from_ids(labels, std::move(simplices));
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<long long>>& facets)
{
    std::vector<std::vector<std::string>> text;
    text.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<std::string> row;
        for (long long v : f) row.push_back(std::to_string(v));
        text.push_back(std::move(row));
    }
    return from_facets(text);
}

std::optional<Vertex> SimplicialComplex::find_vertex(const std::string& label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label, label_less);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

bool SimplicialComplex::is_pure() const
{
    for (const auto& f : facets_)
        if (static_cast<int>(f.size()) - 1 != dim_) return false;
    return true;
}

const SimplicialComplex::Lattice& SimplicialComplex::lattice() const
{
    std::call_once(cache_->once, [this] {
        auto lat = std::make_unique<Lattice>();
        const int d = std::max(dim_, -1);
        lat->by_dim.resize(static_cast<std::size_t>(d + 1));
        lat->index.resize(static_cast<std::size_t>(d + 1));
        std::vector<std::unordered_set<Simplex, SimplexHash>> seen(static_cast<std::size_t>(d + 1));
        for (const auto& f : facets_) {
            const std::size_t n = f.size();
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                Simplex s;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) s.push_back(f[i]);
                seen[s.size() - 1].insert(std::move(s));
            }
        }
        for (int k = 0; k <= d; ++k) {
            auto& v = lat->by_dim[static_cast<std::size_t>(k)];
            v.assign(seen[static_cast<std::size_t>(k)].begin(), seen[static_cast<std::size_t>(k)].end());
            std::sort(v.begin(), v.end());
            auto& idx = lat->index[static_cast<std::size_t>(k)];
            idx.reserve(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) idx.emplace(v[i], static_cast<int>(i));
        }
        cache_->lattice = std::move(lat);
    });
    return *cache_->lattice;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const
{
    static const std::vector<Simplex> none;
    const auto& lat = lattice();
    if (k < 0 || k >= static_cast<int>(lat.by_dim.size())) return none;
    return lat.by_dim[static_cast<std::size_t>(k)];
}

std::optional<int> SimplicialComplex::face_index(const Simplex& face) const
{
    if (face.empty()) return std::nullopt;
    const auto& lat = lattice();
    const std::size_t k = face.size() - 1;
    if (k >= lat.index.size()) return std::nullopt;
    auto it = lat.index[k].find(face);
    if (it == lat.index[k].end()) return std::nullopt;
    return it->second;
}

bool SimplicialComplex::contains(const Simplex& face) const
{
    if (face.empty()) return !is_void();
    return face_index(face).has_value();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (int k = 0; k <= dim_; ++k) f.push_back(faces(k).size());
    return f;
}

std::size_t SimplicialComplex::face_count() const
{
    std::size_t n = 0;
    for (auto c : f_vector()) n += c;
    return n;
}

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    auto f = f_vector();
    for (std::size_t k = 0; k < f.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(f[k]);
    return chi;
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& face) const
{
    std::vector<std::string> out;
    out.reserve(face.size());
    for (Vertex v : face) out.push_back(label(v));
    return out;
}

std::optional<Simplex> SimplicialComplex::simplex_of(const std::vector<std::string>& labels) const
{
    Simplex s;
    for (const auto& l : labels) {
        auto v = find_vertex(l);
        if (!v) return std::nullopt;
        s.push_back(*v);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
    return s;
}

Simplex SimplicialComplex::face_of(const std::vector<std::string>& labels) const
{
    auto s = simplex_of(labels);
    if (!s || !contains(*s)) {
        std::string text = "{";
        for (std::size_t i = 0; i < labels.size(); ++i) text += (i ? "," : "") + labels[i];
        fail(ErrorKind::not_a_face, text + "} is not a face of the complex");
    }
    return *s;
}

std::string SimplicialComplex::to_string(const Simplex& face) const
{
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out += ",";
        out += label(face[i]);
    }
    return out + "}";
}

}  // namespace morselab
