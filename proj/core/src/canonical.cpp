#include "morselab/canonical.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <map>
#include <optional>

namespace morselab {

namespace {

// Colour refinement on the vertex/facet incidence graph with individualisation.
class Canonizer {
public:
    explicit Canonizer(const SimplicialComplex& k) : k_(k)
    {
        n_ = static_cast<int>(k.vertex_count());
        incident_.resize(static_cast<std::size_t>(n_));
        const auto& facets = k.facets();
        for (std::size_t f = 0; f < facets.size(); ++f)
            for (Vertex v : facets[f]) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
    }

    std::vector<Vertex> run()
    {
        std::vector<int> colours(static_cast<std::size_t>(n_), 0);
        std::vector<std::uint64_t> trace;
        search(colours, trace);
        std::vector<Vertex> out(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = best_colours_[static_cast<std::size_t>(v)];
        return out;
    }

    std::string best_code() const { return best_code_; }

private:
    // Refines vertex colours to equitable, returning a digest of the refinement.
    std::uint64_t refine(std::vector<int>& vc) const
    {
        const auto& facets = k_.facets();
        std::vector<int> fc(facets.size());
        std::uint64_t digest = 0;
        std::size_t classes = 0;
        for (int round = 0;; ++round) {
            // Facet colours from vertex colours.
            std::vector<std::vector<int>> fsig(facets.size());
            for (std::size_t f = 0; f < facets.size(); ++f) {
                for (Vertex v : facets[f]) fsig[f].push_back(vc[static_cast<std::size_t>(v)]);
                std::sort(fsig[f].begin(), fsig[f].end());
            }
            renumber(fsig, fc, digest);
            // Vertex colours from facet colours.
            std::vector<std::vector<int>> vsig(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                auto& s = vsig[static_cast<std::size_t>(v)];
                s.push_back(vc[static_cast<std::size_t>(v)]);
                std::vector<int> around;
                for (int f : incident_[static_cast<std::size_t>(v)]) around.push_back(fc[static_cast<std::size_t>(f)]);
                std::sort(around.begin(), around.end());
                s.insert(s.end(), around.begin(), around.end());
            }
            const std::size_t now = renumber(vsig, vc, digest);
            if (now == classes && round > 0) break;
            classes = now;
        }
        return digest;
    }

    static std::size_t renumber(const std::vector<std::vector<int>>& sig, std::vector<int>& out, std::uint64_t& digest)
    {
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t i = 0; i < sig.size(); ++i)
            out[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[i]) - uniq.begin());
        std::size_t h = static_cast<std::size_t>(digest);
        for (const auto& u : uniq) {
            boost::hash_combine(h, std::count(sig.begin(), sig.end(), u));
            boost::hash_range(h, u.begin(), u.end());
        }
        digest = h;
        return uniq.size();
    }

    std::string encode(const std::vector<int>& vc) const
    {
        std::vector<std::vector<int>> facets;
        for (const auto& f : k_.facets()) {
            std::vector<int> g;
            for (Vertex v : f) g.push_back(vc[static_cast<std::size_t>(v)]);
            std::sort(g.begin(), g.end());
            facets.push_back(std::move(g));
        }
        std::sort(facets.begin(), facets.end());
        std::string code = std::to_string(n_) + ":";
        for (const auto& f : facets) {
            code += "(";
            for (std::size_t i = 0; i < f.size(); ++i) code += (i ? "," : "") + std::to_string(f[i]);
            code += ")";
        }
        return code;
    }

    // True when swapping u and v maps the facet set onto itself.
    bool transposition_is_automorphism(int u, int v) const
    {
        const auto& facets = k_.facets();
        for (int f : incident_[static_cast<std::size_t>(u)]) {
            const auto& s = facets[static_cast<std::size_t>(f)];
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex t = s;
            std::replace(t.begin(), t.end(), static_cast<Vertex>(u), static_cast<Vertex>(v));
            std::sort(t.begin(), t.end());
            if (!std::binary_search(facets.begin(), facets.end(), t)) return false;
        }
        return incident_[static_cast<std::size_t>(u)].size() == incident_[static_cast<std::size_t>(v)].size();
    }

    void search(std::vector<int> vc, std::vector<std::uint64_t>& trace)
    {
        trace.push_back(refine(vc));
        // Prune against the best path by trace prefix.
        const std::size_t depth = trace.size();
        if (have_best_) {
            const std::size_t common = std::min(depth, best_trace_.size());
            for (std::size_t i = 0; i < common; ++i) {
                if (trace[i] > best_trace_[i]) {
                    trace.pop_back();
                    return;
                }
                if (trace[i] < best_trace_[i]) break;
            }
        }
        // Find the first non-singleton colour class.
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < n_; ++v) cells[vc[static_cast<std::size_t>(v)]].push_back(v);
        const std::vector<int>* target = nullptr;
        for (const auto& [c, members] : cells)
            if (members.size() > 1) {
                target = &members;
                break;
            }
        if (!target) {
            std::string code = encode(vc);
            bool better = !have_best_;
            if (have_best_) {
                if (trace != best_trace_) {
                    better = trace < best_trace_;
                } else {
                    better = code < best_code_;
                }
            }
            if (better) {
                have_best_ = true;
                best_trace_ = trace;
                best_code_ = std::move(code);
                best_colours_ = vc;
            }
            trace.pop_back();
            return;
        }
        std::vector<int> tried;
        for (int v : *target) {
            bool redundant = false;
            for (int u : tried)
                if (transposition_is_automorphism(u, v)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);
            std::vector<int> child(vc.size());
            for (std::size_t i = 0; i < vc.size(); ++i) child[i] = 2 * vc[i];
            child[static_cast<std::size_t>(v)] += 1;
            search(std::move(child), trace);
        }
        trace.pop_back();
    }

    const SimplicialComplex& k_;
    int n_ = 0;
    std::vector<std::vector<int>> incident_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_trace_;
    std::string best_code_;
    std::vector<int> best_colours_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const SimplicialComplex& k)
{
    Canonizer c(k);
    return c.run();
}

std::string canonical_form(const SimplicialComplex& k)
{
    if (k.is_void()) return "void";
    if (k.is_empty_face_only()) return "{}";
    Canonizer c(k);
    c.run();
    return c.best_code();
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) return false;
    if (a.f_vector() != b.f_vector()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace morselab
