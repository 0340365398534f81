#include "morselab/lc.hpp"

#include "morselab/canonical.hpp"
#include "morselab/constructions.hpp"
#include "morselab/error.hpp"
#include "morselab/generators.hpp"

#include "json.hpp"
#include "quotient.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace morselab::lc {

using nlohmann::json;
using detail::join_labels;
using detail::Quotient;
using detail::UnionFind;


std::size_t TreeOfSimplices::boundary_facet_count() const
{
    return static_cast<std::size_t>(d) * size() - size() + 2;
}

TreeOfSimplices tree_from_complex(const SimplicialComplex& k, int root)
{
    if (k.is_void() || k.dim() < 1) fail(ErrorKind::invalid_input, "a tree of simplices needs dimension >= 1");
    if (!k.is_pure()) fail(ErrorKind::invalid_input, "a tree of simplices must be pure");
    const int d = k.dim();
    const std::size_t n = k.facet_count();
    if (root < 0 || static_cast<std::size_t>(root) >= n) fail(ErrorKind::invalid_input, "root facet out of range");
    if (k.vertex_count() != static_cast<std::size_t>(d) + n)
        fail(ErrorKind::invalid_input, "a tree of " + std::to_string(n) + " " + std::to_string(d) +
                                           "-simplices has exactly " + std::to_string(d + n) + " vertices");
    const auto g = dual_graph(k);
    if (g.edges.size() + 1 != n) fail(ErrorKind::invalid_input, "dual graph is not a tree");
    UnionFind uf(n);
    for (const auto& e : g.edges)
        if (!uf.unite(e[0], e[1])) fail(ErrorKind::invalid_input, "dual graph has a cycle");
    TreeOfSimplices t;
    t.d = d;
    t.complex = k;
    t.root = root;
    t.edges = g.edges;
    std::size_t boundary = 0;
    std::vector<int> uses(k.faces(d - 1).size(), 0);
    for (const auto& f : k.facets())
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto r = f;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
            ++uses[static_cast<std::size_t>(*k.face_index(r))];
        }
    for (int u : uses) boundary += (u == 1);
    if (boundary != t.boundary_facet_count()) fail(ErrorKind::internal, "boundary facet count mismatch");
    return t;
}

TreeOfSimplices random_tree_of_simplices(int d, int n, std::uint64_t seed)
{
    if (d < 1 || n < 1) fail(ErrorKind::invalid_input, "trees need d >= 1 and N >= 1");
    return tree_from_complex(stacked_ball(d, n - 1, seed));
}

TreeEnumeration enumerate_trees(int d, int n, std::uint64_t budget)
{
    if (d < 1 || n < 1) fail(ErrorKind::invalid_input, "trees need d >= 1 and N >= 1");
    TreeEnumeration out;
    out.d = d;
    out.n = n;
    out.labeled_processes = 1;
    for (int k = 1; k < n; ++k) out.labeled_processes *= k * (d - 1) + 2;

    std::map<std::string, SimplicialComplex> level;
    const auto first = simplex_complex(d);
    level.emplace(canonical_form(first), first);
    for (int size = 1; size < n && out.complete; ++size) {
        std::map<std::string, SimplicialComplex> next;
        for (const auto& [key, k] : level) {
            const auto boundary = boundary_complex(k);
            long long fresh = 0;
            for (const auto& l : k.labels()) fresh = std::max(fresh, std::stoll(l) + 1);
            for (const auto& r : boundary.facets()) {
                if (budget && out.expansions >= budget) {
                    out.complete = false;
                    break;
                }
                ++out.expansions;
                std::vector<std::vector<long long>> facets;
                for (const auto& f : k.facets()) {
                    std::vector<long long> row;
                    for (Vertex v : f) row.push_back(std::stoll(k.label(v)));
                    facets.push_back(std::move(row));
                }
                std::vector<long long> added;
                for (Vertex v : r) added.push_back(std::stoll(boundary.label(v)));
                added.push_back(fresh);
                facets.push_back(std::move(added));
                auto grown = SimplicialComplex::from_facets(facets);
                next.emplace(canonical_form(grown), std::move(grown));
            }
            if (!out.complete) break;
        }
        level = std::move(next);
    }
    for (const auto& [key, k] : level) out.types.push_back(tree_from_complex(k));
    return out;
}

// ---------------------------------------------------------------------------
// Assembly


Assembly lc_assemble(const TreeOfSimplices& tree, const GluingScript& script, bool strict)
{
    if (tree.complex.is_void() || tree.d < 1) fail(ErrorKind::invalid_input, "empty tree");
    Quotient q(tree);
    const auto& k = q.tree_complex();
    bool simplicial = true;
    auto step_check = [&](const Gluing& g) {
        const auto defect = q.facet_defect();
        if (defect.empty()) return;
        if (strict)
            fail(ErrorKind::precondition, "gluing " + join_labels(g.a) + " to " + join_labels(g.b) + ": " + defect,
                 "permissive mode keeps going with a non-simplicial quotient");
        simplicial = false;
    };
    std::vector<std::pair<Simplex, Simplex>> b_pairs;  // (ridge, glued facet) in tree vertices
    for (const auto& g : script.phase_a) {
        const auto a = q.tree_ridge(g.a, "phase a facet");
        const auto b = q.tree_ridge(g.b, "phase a facet");
        q.glue(a, b, q.bijection(a, b, g));
        step_check(g);
    }
    for (const auto& g : script.phase_b) {
        const auto a = q.tree_ridge(g.a, "phase b facet");
        const auto b = q.tree_ridge(g.b, "phase b facet");
        const auto map = q.bijection(a, b, g);
        auto ridge = k.simplex_of(g.shared_ridge);
        if (!ridge || ridge->size() + 1 != a.size() || !is_subset(*ridge, a))
            fail(ErrorKind::invalid_input, "shared ridge " + join_labels(g.shared_ridge) + " is not a ridge of " + join_labels(g.a));
        if (!q.adjacent(*ridge, map))
            fail(ErrorKind::precondition,
                 "phase b facets " + join_labels(g.a) + " and " + join_labels(g.b) + " do not share " + join_labels(g.shared_ridge));
        q.glue(a, b, map);
        b_pairs.emplace_back(*ridge, a);
        step_check(g);
    }
    if (!q.faces_consistent()) {
        if (strict) fail(ErrorKind::precondition, "the quotient is not a simplicial complex");
        simplicial = false;
    }

    const auto names = q.class_labels();
    Assembly out;
    out.simplicial = simplicial;
    out.complex = q.complex();
    if (!simplicial) return out;

    auto host = share(face_poset(out.complex));
    auto cell = [&](const Simplex& s) {
        const auto c = host->find_labels(q.labels_of(s, names));
        if (!c) fail(ErrorKind::internal, "tree face lost in the quotient");
        return *c;
    };
    std::vector<morse::CellPair> pairs;
    // dual tree pairs, each child facet with the ridge towards the root
    std::vector<std::vector<std::pair<int, int>>> adj(tree.size());
    for (const auto& e : tree.edges) {
        adj[static_cast<std::size_t>(e[0])].push_back({e[1], e[2]});
        adj[static_cast<std::size_t>(e[1])].push_back({e[0], e[2]});
    }
    std::vector<char> seen(tree.size(), 0);
    std::queue<int> todo;
    todo.push(tree.root);
    seen[static_cast<std::size_t>(tree.root)] = 1;
    const auto& ridges = k.faces(tree.d - 1);
    while (!todo.empty()) {
        const int f = todo.front();
        todo.pop();
        for (const auto& [g, r] : adj[static_cast<std::size_t>(f)]) {
            if (seen[static_cast<std::size_t>(g)]) continue;
            seen[static_cast<std::size_t>(g)] = 1;
            pairs.emplace_back(cell(ridges[static_cast<std::size_t>(r)]), cell(k.facets()[static_cast<std::size_t>(g)]));
            todo.push(g);
        }
    }
    for (const auto& [r, f] : b_pairs) pairs.emplace_back(cell(r), cell(f));
    out.matching = morse::MorseMatching::validate(host, std::move(pairs));
    return out;
}

// ---------------------------------------------------------------------------
// Disassembly

Disassembly lc_disassemble(const SimplicialComplex& m, const morse::MorseMatching& f)
{
    const FacePoset& p = f.host();
    const auto expected = face_poset(m);
    if (p.structural_hash() != expected.structural_hash() || !p.is_simplicial() || p.vertex_labels() != m.labels())
        fail(ErrorKind::invalid_input, "matching does not live on the face poset of this complex");
    const int d = m.dim();
    if (d < 1 || !m.is_pure()) fail(ErrorKind::precondition, "disassembly needs a pure complex of dimension >= 1");
    if (!f.boundary_critical() || f.c_int(d) != 1)
        fail(ErrorKind::precondition, "matching must be boundary-critical with one interior critical top cell",
             "build one with `morse build-bc`");

    const auto& tops = p.cells_of_dim(d);
    int delta = -1;
    for (int c : tops)
        if (f.is_critical(c)) delta = c;
    // parent facet across the ridge each facet is paired with
    std::map<int, int> parent;
    std::set<int> tree_ridges;
    for (int c : tops) {
        if (c == delta) continue;
        const int r = f.partner(c);
        if (r < 0 || p.dim(r) != d - 1) fail(ErrorKind::internal, "top cell paired downwards expected");
        const auto& co = p.cofaces(r);
        if (co.size() != 2) fail(ErrorKind::invalid_input, "a paired ridge must lie in two facets");
        parent[c] = co[0] == c ? co[1] : co[0];
        tree_ridges.insert(r);
    }
    for (int c : tops) {
        int x = c;
        for (std::size_t steps = 0; x != delta; ++steps) {
            if (steps > tops.size())
                fail(ErrorKind::invalid_input, "the (d-1, d) pairs do not form a spanning tree of the dual graph");
            x = parent.at(x);
        }
    }

    // vertex copies: facets around v joined through tree ridges that contain v
    std::map<int, std::size_t> facet_slot;
    for (std::size_t i = 0; i < tops.size(); ++i) facet_slot[tops[i]] = i;
    std::vector<std::vector<std::string>> copy(tops.size(), std::vector<std::string>(static_cast<std::size_t>(d + 1)));
    std::map<std::pair<int, Vertex>, std::string> copy_of;  // (facet cell, vertex) -> label
    std::set<std::string> used(m.labels().begin(), m.labels().end());
    for (Vertex v = 0; v < static_cast<Vertex>(m.vertex_count()); ++v) {
        std::vector<int> around;
        for (int c : tops) {
            const auto& s = p.vertices(c);
            if (std::binary_search(s.begin(), s.end(), v)) around.push_back(c);
        }
        UnionFind uf(around.size());
        for (std::size_t i = 0; i < around.size(); ++i) {
            const int c = around[i];
            if (c == delta) continue;
            const int r = f.partner(c);
            const auto& rs = p.vertices(r);
            if (!std::binary_search(rs.begin(), rs.end(), v)) continue;
            const auto j = std::lower_bound(around.begin(), around.end(), parent.at(c)) - around.begin();
            uf.unite(static_cast<int>(i), static_cast<int>(j));
        }
        std::map<int, int> index;
        for (std::size_t i = 0; i < around.size(); ++i) {
            const int root = uf.find(static_cast<int>(i));
            const auto [it, fresh] = index.emplace(root, static_cast<int>(index.size()));
            const std::string label = m.label(v) + "#" + std::to_string(it->second);
            if (fresh && used.count(label)) fail(ErrorKind::invalid_input, "vertex copy label " + label + " collides with a vertex");
            copy_of[{around[i], v}] = label;
        }
    }
    auto copy_labels = [&](int facet, const Simplex& s) {
        std::vector<std::string> out;
        for (Vertex v : s) out.push_back(copy_of.at({facet, v}));
        return out;
    };
    std::vector<std::vector<std::string>> tree_facets;
    for (int c : tops) tree_facets.push_back(copy_labels(c, p.vertices(c)));
    auto tree_complex = SimplicialComplex::from_facets(tree_facets);
    const auto root_simplex = tree_complex.simplex_of(copy_labels(delta, p.vertices(delta)));
    const auto& tf = tree_complex.facets();
    const int root = static_cast<int>(std::find(tf.begin(), tf.end(), *root_simplex) - tf.begin());

    Disassembly out;
    out.tree = tree_from_complex(tree_complex, root);

    auto cut = [&](int ridge) {
        const auto& co = p.cofaces(ridge);
        if (co.size() != 2) fail(ErrorKind::internal, "cut face must be interior");
        const int f1 = std::min(co[0], co[1]);
        const int f2 = std::max(co[0], co[1]);
        Gluing g;
        g.a = copy_labels(f1, p.vertices(ridge));
        g.b = copy_labels(f2, p.vertices(ridge));
        for (std::size_t i = 0; i < g.a.size(); ++i) g.bijection.emplace_back(g.a[i], g.b[i]);
        return std::pair{g, f1};
    };
    std::vector<int> cut_pairs;  // (d-1)-cells paired with a (d-2)-cell
    for (int r : p.cells_of_dim(d - 1)) {
        if (p.on_boundary(r) || tree_ridges.count(r)) continue;
        if (f.is_critical(r)) {
            out.script.phase_a.push_back(cut(r).first);
            continue;
        }
        const int low = f.partner(r);
        if (p.dim(low) != d - 2) fail(ErrorKind::internal, "cut face paired with a top cell outside the dual tree");
        cut_pairs.push_back(r);
    }

    // a cut face must be glued before any cut face whose pair ridge lies in it
    const std::size_t nb = cut_pairs.size();
    std::vector<std::vector<std::size_t>> after(nb);
    std::vector<int> indegree(nb, 0);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            if (i == j) continue;
            const auto& rj = p.vertices(f.partner(cut_pairs[j]));
            if (is_subset(rj, p.vertices(cut_pairs[i]))) {
                after[i].push_back(j);
                ++indegree[j];
            }
        }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < nb; ++i)
        if (indegree[i] == 0) ready.push(i);
    while (!ready.empty()) {
        const std::size_t i = ready.top();
        ready.pop();
        const int r = cut_pairs[i];
        auto [g, f1] = cut(r);
        g.shared_ridge = copy_labels(f1, p.vertices(f.partner(r)));
        out.script.phase_b.push_back(std::move(g));
        for (std::size_t j : after[i])
            if (--indegree[j] == 0) ready.push(j);
    }
    if (out.script.phase_b.size() != nb) fail(ErrorKind::internal, "collapse order of the cut faces has a cycle");
    return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json gluing_json(const Gluing& g, bool with_ridge)
{
    json j;
    j["pair"] = json::array({g.a, g.b});
    json bij = json::array();
    for (const auto& [x, y] : g.bijection) bij.push_back(json::array({x, y}));
    j["bijection"] = bij;
    if (with_ridge) j["shared_ridge"] = g.shared_ridge;
    return j;
}

Gluing gluing_from_json(const json& j, bool with_ridge)
{
    Gluing g;
    const auto& pair = j.at("pair");
    if (!pair.is_array() || pair.size() != 2) fail(ErrorKind::invalid_input, "gluing pair must list two facets");
    g.a = pair[0].get<std::vector<std::string>>();
    g.b = pair[1].get<std::vector<std::string>>();
    for (const auto& e : j.at("bijection")) {
        if (!e.is_array() || e.size() != 2) fail(ErrorKind::invalid_input, "bijection entries are [from, to]");
        g.bijection.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    if (with_ridge) g.shared_ridge = j.at("shared_ridge").get<std::vector<std::string>>();
    return g;
}

std::size_t line_of(const std::string& text, std::size_t byte)
{
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size())), '\n'));
}

}  // namespace

std::string script_to_json(const TreeOfSimplices& tree, const GluingScript& script)
{
    json j;
    json facets = json::array();
    for (const auto& f : tree.complex.facets()) facets.push_back(tree.complex.labels_of(f));
    j["tree"] = {{"facets", facets}, {"root", tree.root}};
    j["phase_a"] = json::array();
    for (const auto& g : script.phase_a) j["phase_a"].push_back(gluing_json(g, false));
    j["phase_b"] = json::array();
    for (const auto& g : script.phase_b) j["phase_b"].push_back(gluing_json(g, true));
    return j.dump(2);
}

Disassembly script_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(line_of(text, e.byte), e.what());
    }
    try {
        std::vector<std::vector<std::string>> facets;
        for (const auto& f : j.at("tree").at("facets")) {
            std::vector<std::string> row;
            for (const auto& v : f) row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            facets.push_back(std::move(row));
        }
        Disassembly out;
        const int root = j.at("tree").value("root", 0);
        out.tree = tree_from_complex(SimplicialComplex::from_facets(facets), root);
        if (j.contains("phase_a"))
            for (const auto& g : j["phase_a"]) out.script.phase_a.push_back(gluing_from_json(g, false));
        if (j.contains("phase_b"))
            for (const auto& g : j["phase_b"]) out.script.phase_b.push_back(gluing_from_json(g, true));
        return out;
    } catch (const json::exception& e) {
        fail(ErrorKind::invalid_input, std::string("malformed gluing script: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Counting

BigInt fuss_catalan(int d, int n)
{
    if (d < 1 || n < 0) fail(ErrorKind::invalid_input, "Fuss-Catalan numbers need d >= 1 and N >= 0");
    BigInt binom = 1;
    const long long top = static_cast<long long>(d) * n;
    for (long long i = 1; i <= n; ++i) {
        binom *= top - n + i;
        binom /= i;
    }
    return binom / (static_cast<long long>(d - 1) * n + 1);
}

BigRational default_e_bound()
{
    return BigRational(BigInt(27182818285LL), BigInt(10000000000LL));
}

Bound enumeration_bound(int d, int n, int m, const BigRational& e_bound)
{
    if (m < 0) fail(ErrorKind::invalid_input, "m must be nonnegative");
    if (d < 1 || n < 1) fail(ErrorKind::invalid_input, "enumeration bound needs d >= 1 and N >= 1");
    if (e_bound <= 0) fail(ErrorKind::invalid_input, "e bound must be positive");
    auto power = [](BigRational base, long long exp) {
        BigRational out = 1;
        for (long long i = 0; i < exp; ++i) out *= base;
        return out;
    };
    auto pow2 = [](long long exp) { return BigRational(BigInt(1) << static_cast<unsigned>(exp)); };
    const long long dd = d;
    const long long nn = n;
    const long long two_d_count = dd * nn - nn + 2;  // boundary facets of a tree, 2D
    BigRational value = power(BigRational(dd) * e_bound, nn);
    if (m == 0) {
        value *= pow2(dd * two_d_count);
    } else {
        BigInt d_fact = 1;
        for (long long i = 2; i <= dd; ++i) d_fact *= i;
        BigInt m_fact = 1;
        for (long long i = 2; i <= m; ++i) m_fact *= i;
        const BigRational inner = pow2(dd) * e_bound * e_bound * BigRational(d_fact) / BigRational(2LL * m * m);
        value *= pow2(dd * (dd - 1) * nn);
        value *= power(BigRational(two_d_count), 2LL * m);
        value *= BigRational(m_fact);
        value *= power(inner, m);
        value *= pow2(2 * dd);
    }
    Bound out;
    out.value = value;
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    out.ceiling = num / den + (num % den != 0 ? 1 : 0);
    return out;
}

}  // namespace morselab::lc
