#include "morselab/morse.hpp"

#include "morselab/constructions.hpp"
#include "morselab/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace morselab::morse {

const char* to_string(DepthStatus s)
{
    switch (s) {
    case DepthStatus::lower_bound: return "lower_bound";
    case DepthStatus::exact_by_dimension: return "exact_by_dimension";
    case DepthStatus::exact_by_obstruction: return "exact_by_obstruction";
    case DepthStatus::exact_by_exhaustion: return "exact_by_exhaustion";
    case DepthStatus::indeterminate: return "indeterminate";
    }
    return "?";
}

TopologyInfo topology_info(const SimplicialComplex& m)
{
    TopologyInfo info;
    info.known = true;
    const auto h = homology::homology(m, homology::Coefficients::Z());
    for (int i = 0; i <= m.dim(); ++i) info.generators.push_back(h.generators_at(i));
    info.homology_manifold = homology::is_homology_manifold(m);
    return info;
}

namespace {

bool has_boundary(const FacePoset& p)
{
    for (std::size_t c = 0; c < p.size(); ++c)
        if (p.on_boundary(static_cast<int>(c))) return true;
    return false;
}

long long generators(const TopologyInfo& info, int i)
{
    return i >= 0 && i < static_cast<int>(info.generators.size()) ? info.generators[static_cast<std::size_t>(i)] : 0;
}

}  // namespace

DepthBound homology_depth_bound(const FacePoset& p, const TopologyInfo& info)
{
    const int d = p.max_dim();
    DepthBound b{d, {}};
    if (!info.known || d < 1) return b;
    if (!has_boundary(p)) {
        for (int j = d - 1; j >= 1; --j)
            if (generators(info, j) > 0 && d - j < b.bound) {
                b.bound = d - j;
                b.reason = "H_" + std::to_string(j) + " != 0 forces a critical " + std::to_string(j) + "-cell";
            }
        return b;
    }
    if (!info.homology_manifold) return b;
    for (int i = 1; i < d; ++i)
        if (generators(info, i) > 0) {
            b.bound = i;
            b.reason = "H_" + std::to_string(i) + " != 0 forces an interior critical " + std::to_string(d - i) + "-cell";
            break;
        }
    return b;
}

bool is_pseudomanifold_poset(const FacePoset& p, std::string* reason)
{
    auto bad = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    const int d = p.max_dim();
    if (d < 0) return bad("empty poset");
    for (std::size_t c = 0; c < p.size(); ++c)
        if (p.cofaces(static_cast<int>(c)).empty() && p.dim(static_cast<int>(c)) != d)
            return bad("not pure: " + p.cell_name(static_cast<int>(c)) + " is maximal");
    if (d >= 1)
        for (int r : p.cells_of_dim(d - 1))
            if (p.cofaces(r).size() > 2) return bad("ridge " + p.cell_name(r) + " lies in more than two facets");
    const auto& top = p.cells_of_dim(d);
    std::vector<char> seen(p.size(), 0);
    std::deque<int> queue{top.front()};
    seen[static_cast<std::size_t>(top.front())] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int r : p.faces(f))
            for (int g : p.cofaces(r))
                if (!seen[static_cast<std::size_t>(g)]) {
                    seen[static_cast<std::size_t>(g)] = 1;
                    ++reached;
                    queue.push_back(g);
                }
    }
    if (d >= 1 && reached != top.size()) return bad("not strongly connected");
    if (d == 0 && top.size() > 2) return bad("more than two points");
    return true;
}

CollapseProblem depth_problem(const PosetPtr& p, int delta, int k)
{
    const int d = p->max_dim();
    const bool closed = !has_boundary(*p);
    CollapseProblem problem;
    problem.poset = p;
    problem.present.assign(p->size(), 1);
    if (delta >= 0) problem.present[static_cast<std::size_t>(delta)] = 0;
    problem.protect.assign(p->size(), 0);
    for (std::size_t c = 0; c < p->size(); ++c) problem.protect[c] = p->on_boundary(static_cast<int>(c)) ? 1 : 0;
    problem.min_dim = (k >= d && !closed) ? 0 : d - k + 1;
    problem.description = closed ? "a " + std::to_string(d - k) + "-complex"
                                 : "the boundary plus a " + std::to_string(d - k) + "-complex";
    return problem;
}

DepthCertificate collapse_depth(const PosetPtr& p, const TopologyInfo& info, const DepthOptions& options)
{
    std::string why;
    if (!is_pseudomanifold_poset(*p, &why)) fail(ErrorKind::precondition, "not a pseudo-manifold: " + why);
    DepthCertificate cert;
    const int d = p->max_dim();
    cert.dim = d;
    cert.upper = options.use_obstructions ? homology_depth_bound(*p, info) : DepthBound{d, {}};
    if (d == 0) {
        cert.k = 0;
        cert.status = DepthStatus::exact_by_dimension;
        return cert;
    }
    auto facets = p->cells_of_dim(d);
    const bool all_facets = options.max_facets == 0 || options.max_facets >= facets.size();
    if (!all_facets) facets.resize(options.max_facets);

    bool above_refuted = false;
    for (int k = cert.upper.bound; k >= 1; --k) {
        bool all_impossible = true;
        for (int delta : facets) {
            auto r = collapse_search(depth_problem(p, delta, k), options.collapse);
            cert.expansions += r.expansions;
            cert.budget_exhausted = cert.budget_exhausted || r.budget_exhausted;
            if (r.status == SearchStatus::found) {
                cert.k = k;
                cert.delta = delta;
                cert.sequence = std::move(r.sequence);
                cert.witness = MorseMatching::validate(p, cert.sequence.pairs);
                if (k == d) cert.status = DepthStatus::exact_by_dimension;
                else if (k == cert.upper.bound) cert.status = DepthStatus::exact_by_obstruction;
                else if (above_refuted) cert.status = DepthStatus::exact_by_exhaustion;
                else cert.status = DepthStatus::lower_bound;
                return cert;
            }
            if (r.status != SearchStatus::impossible) all_impossible = false;
        }
        above_refuted = all_impossible && all_facets;
    }
    cert.status = DepthStatus::indeterminate;
    return cert;
}

namespace {

PosetPtr pseudomanifold_poset(const SimplicialComplex& m)
{
    const auto info = pseudomanifold_check(m);
    if (!info.is_pseudomanifold) fail(ErrorKind::precondition, "input is not a pseudo-manifold");
    return share(face_poset(m));
}

int cell_of(const FacePoset& p, const Simplex& s)
{
    auto c = p.find(s);
    if (!c) fail(ErrorKind::not_a_face, "simplex is not a face of the complex");
    return *c;
}

}  // namespace

DepthCertificate collapse_depth(const SimplicialComplex& m, const DepthOptions& options)
{
    auto p = pseudomanifold_poset(m);
    return collapse_depth(p, options.use_obstructions ? topology_info(m) : TopologyInfo{}, options);
}

EndoResult is_endo_collapsible(const PosetPtr& p, const TopologyInfo& info, const DepthOptions& options)
{
    std::string why;
    if (!is_pseudomanifold_poset(*p, &why)) fail(ErrorKind::precondition, "not a pseudo-manifold: " + why);
    EndoResult out;
    const int d = p->max_dim();
    out.certificate.dim = d;
    if (options.use_obstructions) {
        out.certificate.upper = homology_depth_bound(*p, info);
        if (out.certificate.upper.bound < d) {
            out.status = SearchStatus::impossible;
            out.obstructed = true;
            out.reason = out.certificate.upper.reason;
            return out;
        }
    } else {
        out.certificate.upper = {d, {}};
    }
    auto facets = p->cells_of_dim(d);
    const bool all_facets = options.max_facets == 0 || options.max_facets >= facets.size();
    if (!all_facets) facets.resize(options.max_facets);
    bool all_impossible = true;
    for (int delta : facets) {
        auto r = collapse_search(depth_problem(p, delta, d), options.collapse);
        out.certificate.expansions += r.expansions;
        out.certificate.budget_exhausted = out.certificate.budget_exhausted || r.budget_exhausted;
        if (r.status == SearchStatus::found) {
            out.status = SearchStatus::found;
            out.certificate.k = d;
            out.certificate.delta = delta;
            out.certificate.status = DepthStatus::exact_by_dimension;
            out.certificate.sequence = std::move(r.sequence);
            out.certificate.witness = MorseMatching::validate(p, out.certificate.sequence.pairs);
            return out;
        }
        if (r.status != SearchStatus::impossible) all_impossible = false;
    }
    if (all_impossible && all_facets) {
        out.status = SearchStatus::impossible;
        out.reason = "no facet admits the collapse (exhaustive)";
    } else {
        out.status = SearchStatus::indeterminate;
        out.reason = "no collapse found within budget";
    }
    return out;
}

EndoResult is_endo_collapsible(const SimplicialComplex& m, const DepthOptions& options)
{
    auto p = pseudomanifold_poset(m);
    return is_endo_collapsible(p, options.use_obstructions ? topology_info(m) : TopologyInfo{}, options);
}

MorseMatching pinned_morse(const PosetPtr& pp, int delta, std::optional<int> pole)
{
    const FacePoset& p = *pp;
    const int d = p.max_dim();
    require(delta >= 0 && delta < static_cast<int>(p.size()) && p.dim(delta) == d, ErrorKind::invalid_input,
            "pinned cell must be a top-dimensional cell");
    std::vector<char> protect(p.size(), 0);
    if (pole) {
        require(*pole >= 0 && *pole < static_cast<int>(p.size()) && p.dim(*pole) == 0, ErrorKind::invalid_input,
                "pole must be a vertex");
        protect[static_cast<std::size_t>(*pole)] = 1;
    } else {
        for (std::size_t c = 0; c < p.size(); ++c) protect[c] = p.on_boundary(static_cast<int>(c)) ? 1 : 0;
    }
    if (d == 0) return MorseMatching::validate(pp, {});

    // (1) spanning tree of the dual graph rooted at delta
    std::vector<CellPair> pairs;
    std::vector<char> removed(p.size(), 0);
    removed[static_cast<std::size_t>(delta)] = 1;
    std::deque<int> queue{delta};
    std::size_t reached = 1;
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int r : p.faces(f)) {
            if (protect[static_cast<std::size_t>(r)] || removed[static_cast<std::size_t>(r)]) continue;
            for (int g : p.cofaces(r)) {
                if (g == f || removed[static_cast<std::size_t>(g)]) continue;
                removed[static_cast<std::size_t>(g)] = removed[static_cast<std::size_t>(r)] = 1;
                pairs.emplace_back(r, g);
                queue.push_back(g);
                ++reached;
                break;
            }
        }
    }
    if (reached != p.cells_of_dim(d).size())
        fail(ErrorKind::precondition, "top cells are not connected through unprotected ridges");

    // (2) greedy collapse of what is left, protecting the boundary (or the pole)
    CollapseProblem rest;
    rest.poset = pp;
    rest.present.assign(p.size(), 1);
    for (std::size_t c = 0; c < p.size(); ++c)
        if (removed[c]) rest.present[c] = 0;
    rest.protect = protect;
    rest.min_dim = 0;
    auto greedy = greedy_morse(rest);
    pairs.insert(pairs.end(), greedy.pairs.begin(), greedy.pairs.end());

    // (3) re-match interior vertices along a forest grown from the protected vertices
    if (d >= 2) {
        std::vector<int> partner(p.size(), -1);
        std::vector<CellPair> kept;
        for (const auto& pr : pairs) {
            if (p.dim(pr.first) == 0) continue;
            kept.push_back(pr);
            partner[static_cast<std::size_t>(pr.first)] = pr.second;
            partner[static_cast<std::size_t>(pr.second)] = pr.first;
        }
        auto usable_edge = [&](int e) {
            const int q = partner[static_cast<std::size_t>(e)];
            return !protect[static_cast<std::size_t>(e)] && (q < 0 || p.dim(q) == 0);
        };
        std::vector<char> reached_vertex(p.size(), 0);
        std::deque<int> frontier;
        for (int v : p.cells_of_dim(0))
            if (protect[static_cast<std::size_t>(v)]) {
                reached_vertex[static_cast<std::size_t>(v)] = 1;
                frontier.push_back(v);
            }
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop_front();
            for (int e : p.cofaces(v)) {
                if (!usable_edge(e)) continue;
                for (int w : p.faces(e)) {
                    if (w == v || reached_vertex[static_cast<std::size_t>(w)]) continue;
                    reached_vertex[static_cast<std::size_t>(w)] = 1;
                    kept.emplace_back(w, e);
                    partner[static_cast<std::size_t>(e)] = w;
                    frontier.push_back(w);
                }
            }
        }
        for (int v : p.cells_of_dim(0))
            if (!reached_vertex[static_cast<std::size_t>(v)])
                fail(ErrorKind::internal, "interior vertex " + p.cell_name(v) + " not reachable from the boundary");
        pairs = std::move(kept);
    }
    return MorseMatching::validate(pp, std::move(pairs));
}

MorseMatching boundary_critical_morse(const PosetPtr& p, int delta)
{
    if (p->max_dim() < 2) fail(ErrorKind::precondition, "boundary-critical construction needs dimension at least 2");
    if (!has_boundary(*p))
        fail(ErrorKind::precondition, "input has no boundary", "use the polar variant for closed manifolds");
    return pinned_morse(p, delta, std::nullopt);
}

MorseMatching boundary_critical_morse(const SimplicialComplex& m, const Simplex& delta)
{
    auto p = pseudomanifold_poset(m);
    return boundary_critical_morse(p, cell_of(*p, delta));
}

MorseMatching polar_morse(const PosetPtr& p, int delta, int pole)
{
    if (has_boundary(*p)) fail(ErrorKind::precondition, "polar construction needs a closed pseudo-manifold");
    return pinned_morse(p, delta, pole);
}

MorseMatching polar_morse(const SimplicialComplex& m, const Simplex& delta, Vertex pole)
{
    auto p = pseudomanifold_poset(m);
    return polar_morse(p, cell_of(*p, delta), cell_of(*p, Simplex{pole}));
}

InequalityReport verify_morse_inequalities(const SimplicialComplex& m, const MorseMatching& f, bool relative)
{
    if (relative && !f.boundary_critical())
        fail(ErrorKind::precondition, "relative inequalities need a boundary-critical matching");
    InequalityReport report;
    report.relative = relative;
    const auto h = homology::homology(m, homology::Coefficients::Z());
    const int d = m.dim();
    report.all_hold = true;
    for (int k = 0; k <= d; ++k) {
        InequalityRow row;
        row.k = k;
        row.degree = relative ? d - k : k;
        row.homology = h.generators_at(row.degree);
        row.critical = relative ? f.c_int(k) : f.c(k);
        row.holds = row.homology <= row.critical;
        report.all_hold = report.all_hold && row.holds;
        report.rows.push_back(row);
    }
    report.euler_sum = f.euler_sum();
    report.euler_characteristic = m.euler_characteristic();
    report.euler_ok = report.euler_sum == report.euler_characteristic;
    report.all_hold = report.all_hold && report.euler_ok;
    return report;
}

}  // namespace morselab::morse
