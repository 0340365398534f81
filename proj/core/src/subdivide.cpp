#include "morselab/subdivide.hpp"

#include "morselab/calculus.hpp"
#include "morselab/constructions.hpp"
#include "morselab/error.hpp"
#include "morselab/morse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

namespace morselab::calculus {

const char* to_string(Transfer t) { return t == Transfer::bc_to_plain ? "bc-to-plain" : "plain-to-bc"; }

Transfer parse_transfer(const std::string& text)
{
    if (text == "bc-to-plain" || text == "1") return Transfer::bc_to_plain;
    if (text == "plain-to-bc" || text == "2") return Transfer::plain_to_bc;
    fail(ErrorKind::invalid_input, "unknown transfer direction '" + text + "'", "use bc-to-plain or plain-to-bc");
}

namespace {

enum class LinkKind { polar, one_vertex, equatorial };

struct LinkData {
    PosetPtr poset;
    int link_dim = -1;
    /// Cells of M above σ forming each link cell's chain, by increasing dimension.
    std::vector<std::vector<int>> chains;
    std::map<std::vector<int>, int> cell_of_chain;
    std::optional<MorseMatching> matching;
    int top = -1;
    int pole = -1;
};

int critical_top(const MorseMatching& g)
{
    const FacePoset& p = g.host();
    int found = -1;
    for (int c : p.cells_of_dim(p.max_dim()))
        if (g.is_critical(c) && !p.on_boundary(c)) {
            if (found >= 0) return -2;
            found = c;
        }
    return found;
}

int critical_vertex_except(const MorseMatching& g, int skip)
{
    for (int v : g.host().cells_of_dim(0))
        if (v != skip && g.is_critical(v)) return v;
    return -1;
}

/// Checks a link matching against its role and fills top/pole; empty string when it fits.
std::string fit(LinkData& ld, LinkKind kind)
{
    const auto& g = *ld.matching;
    if (ld.link_dim == 0 && kind != LinkKind::one_vertex) {
        const auto& pts = ld.poset->cells_of_dim(0);
        if (!g.pairs().empty()) return "a 0-dimensional link admits no pairs";
        if (kind == LinkKind::equatorial) {
            if (pts.size() != 1) return "link is not a point";
            ld.top = pts[0];
            ld.pole = -1;
            return {};
        }
        if (pts.size() != 2) return "link is not two points";
        if (ld.top < 0) ld.top = pts[0];
        ld.pole = pts[0] == ld.top ? pts[1] : pts[0];
        return {};
    }
    switch (kind) {
    case LinkKind::polar:
        if (g.c(0) != 1) return "polar link matching needs exactly one critical vertex";
        ld.top = critical_top(g);
        if (ld.top < 0) return "polar link matching needs exactly one critical top cell";
        ld.pole = critical_vertex_except(g, -1);
        return {};
    case LinkKind::one_vertex:
        if (g.c(0) != 1) return "link matching needs exactly one critical vertex";
        ld.top = -1;
        ld.pole = critical_vertex_except(g, -1);
        return {};
    case LinkKind::equatorial:
        if (!g.equatorial()) return "link matching must be equatorial";
        ld.top = critical_top(g);
        ld.pole = -1;
        return {};
    }
    return "unknown role";
}

void construct(LinkData& ld, LinkKind kind, int pinned, const morse::CollapseOptions& search)
{
    const auto& lp = ld.poset;
    if (ld.link_dim == 0 && kind != LinkKind::one_vertex) {
        ld.matching = MorseMatching::validate(lp, {});
        ld.top = pinned;
        return;
    }
    const int top = pinned >= 0 ? pinned : lp->cells_of_dim(ld.link_dim).front();
    switch (kind) {
    case LinkKind::polar: ld.matching = pin_critical(lp, top); break;
    case LinkKind::equatorial: ld.matching = morse::pinned_morse(lp, top, std::nullopt); break;
    case LinkKind::one_vertex: {
        auto r = morse::is_collapsible(lp, search);
        ld.matching = r.status == morse::SearchStatus::found
                          ? morse::matching_from_collapse(lp, r.search.sequence.pairs)
                          : morse::greedy_morse_matching(lp);
        break;
    }
    }
}

}  // namespace

SubdivisionResult subdivide_morse(const SimplicialComplex& m, const MorseMatching& f, Transfer direction,
                                  const std::vector<LinkMatching>& supplied, const morse::CollapseOptions& search)
{
    const FacePoset& p = f.host();
    if (!p.is_simplicial() || p.structural_hash() != face_poset(m).structural_hash())
        fail(ErrorKind::invalid_input, "f does not live on the face poset of M");
    if (!pseudomanifold_check(m).is_pseudomanifold) fail(ErrorKind::precondition, "input is not a pseudo-manifold");
    const bool to_plain = direction == Transfer::bc_to_plain;
    if (to_plain && !f.boundary_critical())
        fail(ErrorKind::precondition, "bc-to-plain transfer needs a boundary-critical matching");
    const int d = p.max_dim();
    const int n = static_cast<int>(p.size());

    SubdivisionResult out;
    out.complex = barycentric_subdivision(m);
    auto sp = share(face_poset(out.complex));
    std::vector<Vertex> bary(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        bary[static_cast<std::size_t>(c)] = *out.complex.find_vertex(barycenter_label(m, p.vertices(c)));
    auto sd_cell = [&](int bottom, const std::vector<int>& above) {
        Simplex s{bary[static_cast<std::size_t>(bottom)]};
        for (int c : above) s.push_back(bary[static_cast<std::size_t>(c)]);
        std::sort(s.begin(), s.end());
        return *sp->find(s);
    };

    std::map<Simplex, const LinkMatching*> given;
    for (const auto& lm : supplied) given[m.face_of(lm.face)] = &lm;

    std::vector<LinkData> links(static_cast<std::size_t>(n));
    auto prepare = [&](int s) {
        auto& ld = links[static_cast<std::size_t>(s)];
        const auto& sigma = p.vertices(s);
        const auto lk = link(m, sigma);
        const auto sdl = barycentric_subdivision(lk);
        ld.poset = share(face_poset(sdl));
        ld.link_dim = lk.dim();
        std::unordered_map<std::string, int> cell_of_label;
        for (int k = 0; k <= lk.dim(); ++k)
            for (const auto& face : lk.faces(k)) {
                auto labels = lk.labels_of(face);
                for (Vertex v : sigma) labels.push_back(m.label(v));
                cell_of_label[barycenter_label(lk, face)] = *p.find(m.face_of(labels));
            }
        ld.chains.resize(ld.poset->size());
        for (std::size_t c = 0; c < ld.poset->size(); ++c) {
            std::vector<int> chain;
            for (const auto& l : ld.poset->cell_labels(static_cast<int>(c))) chain.push_back(cell_of_label.at(l));
            std::sort(chain.begin(), chain.end(), [&](int a, int b) { return p.dim(a) < p.dim(b); });
            ld.cell_of_chain[chain] = static_cast<int>(c);
            ld.chains[c] = std::move(chain);
        }
    };
    auto kind_of = [&](int s) {
        if (!p.on_boundary(s)) return LinkKind::polar;
        return to_plain ? LinkKind::one_vertex : LinkKind::equatorial;
    };
    auto choose = [&](int s, int pinned) {
        auto& ld = links[static_cast<std::size_t>(s)];
        const auto kind = kind_of(s);
        auto it = given.find(p.vertices(s));
        if (it != given.end()) {
            const auto& g = it->second->matching;
            if (g.host().structural_hash() != ld.poset->structural_hash())
                fail(ErrorKind::invalid_input, "supplied link matching for " + p.cell_name(s) +
                                                   " does not live on sd of its link");
            ld.matching = MorseMatching::validate(ld.poset, g.pairs());
            ld.top = pinned;
            if (auto why = fit(ld, kind); !why.empty())
                fail(ErrorKind::precondition, "link matching for " + p.cell_name(s) + ": " + why);
            if (pinned < 0 || ld.top == pinned) return;
        }
        construct(ld, kind, pinned, search);
        ld.top = pinned;
        if (auto why = fit(ld, kind); !why.empty())
            fail(ErrorKind::internal, "constructed link matching for " + p.cell_name(s) + ": " + why);
        if (pinned >= 0 && ld.top != pinned)
            fail(ErrorKind::internal, "could not pin the link matching of " + p.cell_name(s));
    };

    auto is_lower = [&](int s) { return f.partner(s) >= 0 && p.dim(f.partner(s)) > p.dim(s); };
    for (int s = 0; s < n; ++s)
        if (p.dim(s) < d) prepare(s);
    for (int s = 0; s < n; ++s)
        if (p.dim(s) < d && !is_lower(s)) choose(s, -1);

    std::vector<CellPair> pairs;
    for (int s = 0; s < n; ++s) {
        if (!is_lower(s)) continue;
        const int up = f.partner(s);
        std::vector<int> tau{up};
        if (p.dim(up) < d) {
            const auto& lu = links[static_cast<std::size_t>(up)];
            const auto& rest = lu.chains[static_cast<std::size_t>(lu.top)];
            tau.insert(tau.end(), rest.begin(), rest.end());
        }
        const auto& ls = links[static_cast<std::size_t>(s)];
        const int pinned = ls.cell_of_chain.at(tau);
        choose(s, pinned);
        const std::vector<int> tail(tau.begin() + 1, tau.end());
        pairs.emplace_back(sd_cell(up, tail), sd_cell(s, tau));
    }
    for (int s = 0; s < n; ++s) {
        if (p.dim(s) >= d) continue;
        const auto& ld = links[static_cast<std::size_t>(s)];
        for (const auto& [a, b] : ld.matching->pairs())
            pairs.emplace_back(sd_cell(s, ld.chains[static_cast<std::size_t>(a)]),
                               sd_cell(s, ld.chains[static_cast<std::size_t>(b)]));
        if ((to_plain || !p.on_boundary(s)) && ld.pole >= 0)
            pairs.emplace_back(sd_cell(s, {}), sd_cell(s, ld.chains[static_cast<std::size_t>(ld.pole)]));
    }
    out.matching = MorseMatching::validate(sp, std::move(pairs));
    if (!to_plain && !out.matching.boundary_critical())
        fail(ErrorKind::internal, "transferred matching touches the boundary of sd M");

    for (int s = 0; s < n; ++s)
        if (p.dim(s) < d) out.links.push_back({p.cell_labels(s), *links[static_cast<std::size_t>(s)].matching});

    // Each link matching contributes its critical cells shifted up by one, except
    // its critical vertex (absorbed by σ̂) and its critical top cell (which is either
    // the dual of a critical cell of f or consumed by the pair realising (σ, Σ)).
    out.expected.assign(static_cast<std::size_t>(d + 1), 0);
    out.actual.assign(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d; ++k) {
        long long e = to_plain ? f.c_int(d - k) : f.c(d - k);
        if (k >= 2)
            for (int s = 0; s < n; ++s) {
                if (p.dim(s) >= d) continue;
                const auto& ld = links[static_cast<std::size_t>(s)];
                const bool boundary = p.on_boundary(s);
                e += to_plain && boundary ? ld.matching->c(k - 1) : ld.matching->c_int(k - 1);
                if (ld.link_dim == k - 1 && !(to_plain && boundary)) --e;
            }
        out.expected[static_cast<std::size_t>(k)] = e;
        out.actual[static_cast<std::size_t>(k)] = to_plain ? out.matching.c(k) : out.matching.c_int(k);
    }
    out.formula_holds = out.expected == out.actual;
    return out;
}

}  // namespace morselab::calculus
