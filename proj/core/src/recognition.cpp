#include "morselab/recognition.hpp"

#include "morselab/canonical.hpp"
#include "morselab/constructions.hpp"
#include "morselab/error.hpp"
#include "morselab/rng.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

namespace morselab::recognition {

using nlohmann::json;

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

void require_pure(const SimplicialComplex& k, const char* what)
{
    if (k.is_void()) fail(ErrorKind::invalid_input, std::string(what) + " needs a nonempty complex");
    if (!k.is_pure()) fail(ErrorKind::precondition, std::string(what) + " needs a pure complex");
}

/// Bit i set when vertex i of `b` is missing from `a`.
std::uint64_t missing_mask(const Simplex& a, const Simplex& b)
{
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!std::binary_search(a.begin(), a.end(), b[i])) m |= std::uint64_t{1} << i;
    return m;
}

struct ShellingSearch {
    const std::vector<Simplex>& facets;
    std::uint64_t budget;
    std::vector<std::vector<std::uint64_t>> diff;  // diff[i][j]: vertices of F_j not in F_i
    std::unordered_set<std::string> failed;
    std::uint64_t expansions = 0;
    bool exhausted = false;

    ShellingSearch(const std::vector<Simplex>& f, std::uint64_t b) : facets(f), budget(b)
    {
        diff.assign(f.size(), std::vector<std::uint64_t>(f.size(), 0));
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) diff[i][j] = missing_mask(f[i], f[j]);
    }

    bool fits(const std::vector<int>& order, int j) const
    {
        if (order.empty()) return true;
        std::uint64_t present = 0;
        for (int i : order) {
            const auto m = diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (std::popcount(m) == 1) present |= m;
        }
        if (present == 0) return false;
        for (int i : order)
            if ((diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & present) == 0) return false;
        return true;
    }

    bool extend(std::vector<int>& order, std::string& used)
    {
        if (order.size() == facets.size()) return true;
        if (failed.count(used)) return false;
        for (int j = 0; j < static_cast<int>(facets.size()); ++j) {
            if (used[static_cast<std::size_t>(j)] == '1') continue;
            if (budget && expansions >= budget) {
                exhausted = true;
                return false;
            }
            ++expansions;
            if (!fits(order, j)) continue;
            order.push_back(j);
            used[static_cast<std::size_t>(j)] = '1';
            if (extend(order, used)) return true;
            order.pop_back();
            used[static_cast<std::size_t>(j)] = '0';
            if (exhausted) return false;
        }
        failed.insert(used);
        return false;
    }
};

}  // namespace

bool is_shelling_order(const SimplicialComplex& k, const std::vector<int>& order)
{
    require_pure(k, "shelling check");
    const auto& facets = k.facets();
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> all(facets.size());
    std::iota(all.begin(), all.end(), 0);
    if (sorted != all) return false;
    ShellingSearch s(facets, 0);
    std::vector<int> prefix;
    for (int j : order) {
        if (!s.fits(prefix, j)) return false;
        prefix.push_back(j);
    }
    return true;
}

ShellingResult find_shelling(const SimplicialComplex& k, const SearchOptions& options)
{
    require_pure(k, "shelling search");
    ShellingResult out;
    if (k.dim() >= 63) fail(ErrorKind::invalid_input, "shelling search supports dimension below 63");
    ShellingSearch s(k.facets(), options.budget);
    std::vector<int> order;
    std::string used(k.facet_count(), '0');
    if (s.extend(order, used)) {
        out.verdict = Verdict::yes;
        out.order = order;
        out.reason = "shelling order found";
    } else if (s.exhausted) {
        out.verdict = Verdict::indeterminate;
        out.reason = "budget exhausted";
    } else {
        out.verdict = Verdict::no;
        out.reason = "every facet order fails";
    }
    out.expansions = s.expansions;
    return out;
}

// ---------------------------------------------------------------------------
// Constructibility

namespace {

bool strongly_connected(const std::vector<Simplex>& facets, const std::vector<std::size_t>& ids)
{
    if (ids.empty()) return false;
    std::vector<char> seen(ids.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    const std::size_t dim = facets[ids[0]].size() - 1;
    while (!stack.empty()) {
        const auto a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < ids.size(); ++b) {
            if (seen[b]) continue;
            if (set_intersection(facets[ids[a]], facets[ids[b]]).size() == dim) {
                seen[b] = 1;
                ++reached;
                stack.push_back(b);
            }
        }
    }
    return reached == ids.size();
}

struct ConstructSearch {
    std::uint64_t budget = 0;
    std::uint64_t expansions = 0;
    bool exhausted = false;
    std::vector<ConstructionNode> nodes;
    std::map<std::string, std::pair<Verdict, int>> memo;

    /// Node id on yes, -1 otherwise.
    std::pair<Verdict, int> solve(const SimplicialComplex& k)
    {
        ConstructionNode node;
        node.complex = k;
        if (k.facet_count() == 1) {
            nodes.push_back(node);
            return {Verdict::yes, static_cast<int>(nodes.size()) - 1};
        }
        if (k.dim() == 0) {
            node.kind = ConstructionNode::Kind::points;
            nodes.push_back(node);
            return {Verdict::yes, static_cast<int>(nodes.size()) - 1};
        }
        const auto key = canonical_form(k);
        if (auto it = memo.find(key); it != memo.end()) {
            if (it->second.first != Verdict::yes) return {it->second.first, -1};
            node.kind = ConstructionNode::Kind::iso;
            node.same_as = it->second.second;
            nodes.push_back(node);
            return {Verdict::yes, static_cast<int>(nodes.size()) - 1};
        }
        auto result = split(k);
        if (result.first != Verdict::indeterminate || !exhausted) memo[key] = result;
        return result;
    }

    std::pair<Verdict, int> split(const SimplicialComplex& k)
    {
        const auto& facets = k.facets();
        const std::size_t n = facets.size();
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        if (!strongly_connected(facets, all)) return {Verdict::no, -1};
        bool open = false;
        // complements not containing facet 0, smallest first
        for (std::size_t size = 1; size < n; ++size) {
            std::vector<std::size_t> pick(size);
            std::iota(pick.begin(), pick.end(), 1);
            while (true) {
                if (budget && expansions >= budget) {
                    exhausted = true;
                    return {Verdict::indeterminate, -1};
                }
                ++expansions;
                auto attempt = try_split(k, pick);
                if (attempt.first == Verdict::yes) return attempt;
                if (attempt.first == Verdict::indeterminate) open = true;
                if (exhausted) return {Verdict::indeterminate, -1};
                // next combination of {1..n-1}
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return {open ? Verdict::indeterminate : Verdict::no, -1};
    }

    std::pair<Verdict, int> try_split(const SimplicialComplex& k, const std::vector<std::size_t>& second)
    {
        const auto& facets = k.facets();
        std::vector<std::size_t> first;
        for (std::size_t i = 0, j = 0; i < facets.size(); ++i) {
            if (j < second.size() && second[j] == i) ++j;
            else first.push_back(i);
        }
        if (!strongly_connected(facets, first) || !strongly_connected(facets, second)) return {Verdict::no, -1};
        const auto left = subcomplex_of_facets(k, first);
        const auto right = subcomplex_of_facets(k, second);
        const auto meet = complex_intersection(left, right);
        if (meet.is_void() || meet.dim() != k.dim() - 1 || !meet.is_pure()) return {Verdict::no, -1};
        const auto m = solve(meet);
        if (m.first != Verdict::yes) return {m.first, -1};
        const auto l = solve(left);
        if (l.first != Verdict::yes) return {l.first, -1};
        const auto r = solve(right);
        if (r.first != Verdict::yes) return {r.first, -1};
        ConstructionNode node;
        node.kind = ConstructionNode::Kind::split;
        node.complex = k;
        node.left = l.second;
        node.right = r.second;
        node.meet = m.second;
        nodes.push_back(node);
        return {Verdict::yes, static_cast<int>(nodes.size()) - 1};
    }
};

}  // namespace

ConstructibilityResult is_constructible(const SimplicialComplex& k, const SearchOptions& options)
{
    require_pure(k, "constructibility search");
    ConstructSearch s;
    s.budget = options.budget;
    const auto [verdict, root] = s.solve(k);
    ConstructibilityResult out;
    out.verdict = verdict;
    out.expansions = s.expansions;
    if (verdict == Verdict::yes) {
        // keep only the nodes reachable from the root, renumbered in order
        std::vector<int> keep(s.nodes.size(), -1);
        std::function<void(int)> mark = [&](int i) {
            if (i < 0 || keep[static_cast<std::size_t>(i)] >= 0) return;
            const auto& n = s.nodes[static_cast<std::size_t>(i)];
            mark(n.left);
            mark(n.right);
            mark(n.meet);
            mark(n.same_as);
            keep[static_cast<std::size_t>(i)] = static_cast<int>(out.nodes.size());
            out.nodes.push_back(n);
        };
        mark(root);
        auto remap = [&](int i) { return i < 0 ? -1 : keep[static_cast<std::size_t>(i)]; };
        for (auto& n : out.nodes) {
            n.left = remap(n.left);
            n.right = remap(n.right);
            n.meet = remap(n.meet);
            n.same_as = remap(n.same_as);
        }
        out.reason = "construction tree found";
    } else {
        out.reason = verdict == Verdict::no ? "no split works" : "budget exhausted";
    }
    return out;
}

std::string check_construction(const std::vector<ConstructionNode>& nodes)
{
    if (nodes.empty()) return "empty certificate";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        const std::string where = "node " + std::to_string(i) + ": ";
        auto earlier = [&](int j) { return j >= 0 && static_cast<std::size_t>(j) < i; };
        switch (n.kind) {
        case ConstructionNode::Kind::simplex:
            if (n.complex.facet_count() != 1) return where + "not a simplex";
            break;
        case ConstructionNode::Kind::points:
            if (n.complex.dim() != 0) return where + "not a set of points";
            break;
        case ConstructionNode::Kind::iso:
            if (!earlier(n.same_as)) return where + "bad reference";
            if (!is_isomorphic(n.complex, nodes[static_cast<std::size_t>(n.same_as)].complex))
                return where + "not isomorphic to the referenced node";
            break;
        case ConstructionNode::Kind::split: {
            if (!earlier(n.left) || !earlier(n.right) || !earlier(n.meet)) return where + "bad reference";
            const auto& l = nodes[static_cast<std::size_t>(n.left)].complex;
            const auto& r = nodes[static_cast<std::size_t>(n.right)].complex;
            const auto& m = nodes[static_cast<std::size_t>(n.meet)].complex;
            const int d = n.complex.dim();
            if (!n.complex.is_pure() || l.dim() != d || r.dim() != d || !l.is_pure() || !r.is_pure())
                return where + "parts must be pure of full dimension";
            if (complex_union(l, r) != n.complex) return where + "parts do not cover the complex";
            if (complex_intersection(l, r) != m) return where + "meet is not the intersection";
            if (m.dim() != d - 1 || !m.is_pure()) return where + "meet must be pure of codimension one";
            break;
        }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Hamiltonian depth

namespace {

bool connected(const SimplicialComplex& k)
{
    if (k.vertex_count() == 0) return false;
    std::vector<int> parent(k.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    std::size_t parts = k.vertex_count();
    if (k.dim() >= 1)
        for (const auto& e : k.faces(1)) {
            const int a = find(e[0]);
            const int b = find(e[1]);
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                --parts;
            }
        }
    return parts == 1;
}

/// (k-1)-skeleton of K plus the chosen k-faces.
SimplicialComplex with_faces(const SimplicialComplex& k, int dim, const std::vector<Simplex>& chosen)
{
    std::vector<Simplex> facets = k.faces(dim - 1);
    facets.insert(facets.end(), chosen.begin(), chosen.end());
    return SimplicialComplex::from_ids(k.labels(), facets);
}

}  // namespace

HamiltonianDepth hamiltonian_depth(const SimplicialComplex& k, const SearchOptions& options)
{
    HamiltonianDepth out;
    if (k.is_void()) fail(ErrorKind::invalid_input, "hamiltonian depth needs a nonempty complex");
    if (!connected(k)) {
        out.value = 0;
        out.status = morse::DepthStatus::exact_by_dimension;
        out.reason = "disconnected";
        return out;
    }
    const int d = k.dim();
    if (d == 0) {
        out.value = 0;
        out.status = morse::DepthStatus::exact_by_dimension;
        out.reason = "a single point";
        return out;
    }
    bool exact_above = true;
    Rng rng(options.collapse.seed);
    for (int level = d; level >= 1; --level) {
        long long chi = 0;
        for (int i = 0; i < level; ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(k.faces(i).size());
        const auto& top = k.faces(level);
        const long long need = (level % 2 ? -1 : 1) * (1 - chi);
        if (need < 0 || need > static_cast<long long>(top.size())) continue;  // Euler characteristic rules the level out
        const auto wanted = static_cast<std::size_t>(need);

        auto accept = [&](std::vector<Simplex> chosen, bool exhaustive_step) {
            out.value = level;
            out.witness_faces = std::move(chosen);
            if (level == d) out.status = morse::DepthStatus::exact_by_dimension;
            else out.status = exact_above ? morse::DepthStatus::exact_by_exhaustion : morse::DepthStatus::lower_bound;
            out.reason = exhaustive_step ? "witness found by enumeration" : "witness found by greedy collapse";
            return out;
        };
        auto collapsible = [&](const std::vector<Simplex>& chosen, bool exhaustive) {
            auto opts = options.collapse;
            if (!exhaustive) opts.strategy = morse::Strategy::greedy_random;
            auto res = morse::is_collapsible(share(face_poset(with_faces(k, level, chosen))), opts);
            out.expansions += res.search.expansions;
            return res.status;
        };

        // greedy: punch k-cells of a random greedy Morse matching on the k-skeleton
        const auto skel = share(face_poset(skeleton(k, level)));
        for (int round = 0; round <= options.collapse.restarts; ++round) {
            Rng stream = rng.split(static_cast<std::uint64_t>(level) * 1000 + static_cast<std::uint64_t>(round));
            const auto f = morse::greedy_morse_matching(skel, round == 0 ? nullptr : &stream);
            std::vector<Simplex> chosen;
            for (int c : skel->cells_of_dim(level))
                if (!f.is_critical(c)) chosen.push_back(skel->vertices(c));
            if (chosen.size() != wanted) continue;
            if (collapsible(chosen, false) == morse::SearchStatus::found) return accept(std::move(chosen), false);
        }

        // exhaustive over subsets of the right size, when affordable
        bool level_open = false;
        std::vector<std::size_t> pick(wanted);
        std::iota(pick.begin(), pick.end(), 0);
        const std::size_t n = top.size();
        while (true) {
            if (options.budget && out.expansions >= options.budget) {
                out.budget_exhausted = true;
                level_open = true;
                break;
            }
            ++out.expansions;
            std::vector<Simplex> chosen;
            for (auto i : pick) chosen.push_back(top[i]);
            const auto status = collapsible(chosen, true);
            if (status == morse::SearchStatus::found) return accept(std::move(chosen), true);
            if (status == morse::SearchStatus::indeterminate) level_open = true;
            std::size_t i = wanted;
            while (i > 0 && pick[i - 1] == n - wanted + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < wanted; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (level_open) exact_above = false;
    }
    // connected complexes always reach level 1 through a spanning tree
    fail(ErrorKind::internal, "no collapsible spanning subgraph found");
}

// ---------------------------------------------------------------------------
// Ball and sphere labels

BallSphereLabel certify_ball_or_sphere(const SimplicialComplex& m, const SearchOptions& options)
{
    const auto pm = pseudomanifold_check(m);
    if (!pm.is_pseudomanifold) fail(ErrorKind::precondition, "ball/sphere labelling needs a pseudo-manifold");
    BallSphereLabel out;
    out.profile = homology::homology(m);
    if (!pm.closed()) out.boundary_profile = homology::homology(pm.boundary);
    morse::DepthOptions depth;
    depth.collapse = options.collapse;
    out.endo = morse::is_endo_collapsible(m, depth);
    if (out.endo.status != morse::SearchStatus::found) {
        out.label = "indeterminate";
        out.evidence = out.endo.reason.empty() ? std::string("no endo-collapse certificate") : out.endo.reason;
        return out;
    }
    const int d = m.dim();
    const auto& cert = out.endo.certificate;
    if (pm.closed()) {
        if (!homology::has_sphere_homology(m, d))
            fail(ErrorKind::internal, "endo-collapse certificate on a complex without sphere homology");
        out.label = "sphere";
    } else {
        if (!homology::is_acyclic(m) || !homology::has_sphere_homology(pm.boundary, d - 1))
            fail(ErrorKind::internal, "endo-collapse certificate on a complex without ball homology");
        out.label = "ball";
    }
    out.evidence = "endo-collapse certificate: " + std::to_string(cert.sequence.pairs.size()) +
                   " elementary collapses after removing top cell " + std::to_string(cert.delta);
    return out;
}

// ---------------------------------------------------------------------------
// Hierarchy

const PropertyVerdict& HierarchyReport::property(const std::string& name) const
{
    for (const auto& p : properties)
        if (p.name == name) return p;
    fail(ErrorKind::invalid_input, "unknown property '" + name + "'");
}

namespace {

Verdict from_search(morse::SearchStatus s)
{
    switch (s) {
    case morse::SearchStatus::found: return Verdict::yes;
    case morse::SearchStatus::impossible: return Verdict::no;
    case morse::SearchStatus::indeterminate: return Verdict::indeterminate;
    }
    return Verdict::indeterminate;
}

bool exact(morse::DepthStatus s)
{
    return s == morse::DepthStatus::exact_by_dimension || s == morse::DepthStatus::exact_by_obstruction ||
           s == morse::DepthStatus::exact_by_exhaustion;
}

}  // namespace

HierarchyReport hierarchy_report(const SimplicialComplex& m, const SearchOptions& options)
{
    const auto pm = pseudomanifold_check(m);
    if (!pm.is_pseudomanifold) fail(ErrorKind::precondition, "hierarchy report needs a pseudo-manifold");
    HierarchyReport out;
    out.dim = m.dim();
    out.closed = pm.closed();
    out.manifold = homology::is_homology_manifold(m);
    morse::DepthOptions depth;
    depth.collapse = options.collapse;

    // shellable and constructible complexes are Cohen-Macaulay over every field
    out.adepth = homology::algebraic_depth(m);
    const bool cm = out.adepth.cohen_macaulay;
    const std::string not_cm = "not Cohen-Macaulay (adepth " + std::to_string(out.adepth.adepth) + " < dim " +
                               std::to_string(out.dim) + ")";

    const auto policy = options.jobs > 1 ? std::launch::async : std::launch::deferred;
    auto shelling = std::async(policy, [&] {
        if (cm) return find_shelling(m, options);
        ShellingResult r;
        r.verdict = Verdict::no;
        r.reason = not_cm;
        return r;
    });
    auto construct = std::async(policy, [&] {
        if (cm) return is_constructible(m, options);
        ConstructibilityResult r;
        r.verdict = Verdict::no;
        r.reason = not_cm;
        return r;
    });
    auto endo = std::async(policy, [&] { return morse::is_endo_collapsible(m, depth); });
    auto cdepth = std::async(policy, [&] { return morse::collapse_depth(m, depth); });
    auto hdepth = std::async(policy, [&] { return hamiltonian_depth(m, options); });

    const auto sh = shelling.get();
    out.properties.push_back({"shellable", sh.verdict, sh.reason});
    const auto co = construct.get();
    out.properties.push_back({"constructible", co.verdict, co.reason});
    const auto en = endo.get();
    out.properties.push_back({"endo-collapsible", from_search(en.status), en.reason});
    out.cdepth = cdepth.get();
    out.hdepth = hdepth.get();

    PropertyVerdict lc{"LC", Verdict::indeterminate, ""};
    if (out.cdepth.witness && out.cdepth.k >= 2) {
        lc.verdict = Verdict::yes;
        lc.evidence = "collapse depth at least 2";
    } else if (en.status == morse::SearchStatus::found) {
        lc.verdict = Verdict::yes;
        lc.evidence = "implied by the endo-collapse certificate";
    } else if (out.dim >= 2 && out.cdepth.upper.bound < 2) {
        lc.verdict = Verdict::no;
        lc.evidence = out.cdepth.upper.reason;
    } else if (out.dim >= 2 && out.cdepth.witness && exact(out.cdepth.status)) {
        lc.verdict = Verdict::no;
        lc.evidence = "collapse depth is " + std::to_string(out.cdepth.k);
    } else {
        lc.evidence = "collapse depth search inconclusive";
    }
    out.properties.push_back(lc);

    const auto h1 = homology::homology(m).generators_at(1);
    // H_1 enters the chain only for manifolds of dimension 2 and up: a 1-dimensional cycle is
    // shellable, and a pinched pseudo-manifold can be endo-collapsible with H_1 != 0
    const bool h1_chained = out.dim >= 2 && out.manifold;
    out.properties.push_back({"h1-vanishes", h1 == 0 ? Verdict::yes : Verdict::no,
                              h1_chained ? "necessary condition for simple connectivity only"
                                         : "outside the implication chain for this complex"});

    const std::size_t chained = h1_chained ? out.properties.size() : out.properties.size() - 1;
    for (std::size_t i = 0; i < chained; ++i)
        for (std::size_t j = i + 1; j < chained; ++j)
            if (out.properties[i].verdict == Verdict::yes && out.properties[j].verdict == Verdict::no)
                out.violations.push_back(out.properties[i].name + " holds but " + out.properties[j].name + " fails");
    // the depth chain is a statement about manifolds; a cone over a torus is collapsible with adepth 2
    if (out.manifold) {
        if (out.cdepth.witness && exact(out.cdepth.status) && out.cdepth.k > out.adepth.adepth)
            out.violations.push_back("cdepth exceeds adepth");
        if (exact(out.hdepth.status) && out.hdepth.value > out.adepth.adepth)
            out.violations.push_back("hdepth exceeds adepth");
    }
    return out;
}

std::string to_json(const HierarchyReport& report)
{
    json j;
    j["dim"] = report.dim;
    j["closed"] = report.closed;
    j["homology_manifold"] = report.manifold;
    json props = json::array();
    for (const auto& p : report.properties)
        props.push_back({{"name", p.name}, {"verdict", to_string(p.verdict)}, {"evidence", p.evidence}});
    j["properties"] = props;
    json cd;
    cd["status"] = morse::to_string(report.cdepth.status);
    if (report.cdepth.witness) cd["value"] = report.cdepth.k;
    else cd["value"] = nullptr;
    cd["upper_bound"] = report.cdepth.upper.bound;
    cd["expansions"] = report.cdepth.expansions;
    j["cdepth"] = cd;
    j["hdepth"] = {{"value", report.hdepth.value},
                   {"status", morse::to_string(report.hdepth.status)},
                   {"expansions", report.hdepth.expansions}};
    j["adepth"] = {{"value", report.adepth.adepth}, {"cohen_macaulay", report.adepth.cohen_macaulay}};
    j["violations"] = report.violations;
    j["consistent"] = report.consistent();
    return j.dump(2);
}

}  // namespace morselab::recognition
