#include "morselab/calculus.hpp"

#include "morselab/constructions.hpp"
#include "morselab/error.hpp"
#include "morselab/morse.hpp"

#include <algorithm>
#include <tuple>

namespace morselab::calculus {

int cell_by_labels(const FacePoset& p, const std::vector<std::string>& labels)
{
    if (auto c = p.find_labels(labels)) return *c;
    std::string text;
    for (const auto& l : labels) text += (text.empty() ? "" : " ") + l;
    fail(ErrorKind::not_a_face, "no cell with vertices {" + text + "}");
}

DualBlockPoset dual_block_poset(const PosetPtr& m)
{
    std::string why;
    if (!morse::is_pseudomanifold_poset(*m, &why)) fail(ErrorKind::precondition, "not a pseudo-manifold: " + why);
    const FacePoset& p = *m;
    const int d = p.max_dim();
    const int n = static_cast<int>(p.size());

    // (dimension, kind, host cell) fixes the id order
    std::vector<std::tuple<int, int, int>> cells;
    for (int c = 0; c < n; ++c) {
        cells.emplace_back(d - p.dim(c), 0, c);
        if (p.on_boundary(c)) cells.emplace_back(d - 1 - p.dim(c), 1, c);
    }
    std::sort(cells.begin(), cells.end());
    DualBlockPoset out;
    out.host = m;
    out.star.assign(static_cast<std::size_t>(n), -1);
    out.diamond.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto [dim, kind, c] = cells[i];
        (kind == 0 ? out.star : out.diamond)[static_cast<std::size_t>(c)] = static_cast<int>(i);
        out.origin.push_back(c);
        out.is_diamond.push_back(static_cast<char>(kind));
    }
    std::vector<int> dims;
    std::vector<std::vector<int>> faces;
    std::vector<std::string> names;
    for (const auto& [dim, kind, c] : cells) {
        dims.push_back(dim);
        std::vector<int> f;
        for (int t : p.cofaces(c)) {
            if (kind == 0) f.push_back(out.star[static_cast<std::size_t>(t)]);
            else if (p.on_boundary(t)) f.push_back(out.diamond[static_cast<std::size_t>(t)]);
        }
        if (kind == 0 && p.on_boundary(c)) f.push_back(out.diamond[static_cast<std::size_t>(c)]);
        faces.push_back(std::move(f));
        names.push_back((kind == 0 ? "*" : "<>") + p.cell_name(c));
    }
    auto dual = FacePoset::from_cells(std::move(dims), std::move(faces));
    dual.set_names(std::move(names));
    std::vector<char> mask(out.is_diamond.begin(), out.is_diamond.end());
    if (std::find(mask.begin(), mask.end(), 1) != mask.end()) dual.set_boundary_mask(std::move(mask));
    out.dual = share(std::move(dual));
    return out;
}

DualBlockPoset dual_block_poset(const SimplicialComplex& m)
{
    if (!pseudomanifold_check(m).is_pseudomanifold) fail(ErrorKind::precondition, "input is not a pseudo-manifold");
    return dual_block_poset(share(face_poset(m)));
}

const char* to_string(DualMode mode)
{
    return mode == DualMode::bc_to_plain ? "bc-to-plain" : "plain-to-bc";
}

DualMode parse_dual_mode(const std::string& text)
{
    if (text == "bc-to-plain" || text == "1") return DualMode::bc_to_plain;
    if (text == "plain-to-bc" || text == "2") return DualMode::plain_to_bc;
    fail(ErrorKind::invalid_input, "unknown dualization mode '" + text + "'", "use bc-to-plain or plain-to-bc");
}

MorseMatching dualize_matching(const DualBlockPoset& dual, const MorseMatching& f, DualMode mode)
{
    if (f.host().structural_hash() != dual.host->structural_hash() || f.host().size() != dual.host->size())
        fail(ErrorKind::invalid_input, "matching does not live on the dualized complex");
    const FacePoset& p = *dual.host;
    std::vector<CellPair> pairs;
    if (mode == DualMode::bc_to_plain) {
        if (!f.boundary_critical())
            fail(ErrorKind::precondition, "bc-to-plain dualization needs a boundary-critical matching");
        for (const auto& [lo, up] : f.pairs())
            pairs.emplace_back(dual.star[static_cast<std::size_t>(up)], dual.star[static_cast<std::size_t>(lo)]);
        for (std::size_t c = 0; c < p.size(); ++c)
            if (p.on_boundary(static_cast<int>(c))) pairs.emplace_back(dual.diamond[c], dual.star[c]);
    } else {
        for (const auto& [lo, up] : f.pairs())
            pairs.emplace_back(dual.star[static_cast<std::size_t>(up)], dual.star[static_cast<std::size_t>(lo)]);
    }
    return MorseMatching::validate(dual.dual, std::move(pairs));
}

MorseMatching pin_critical(const PosetPtr& p, int top, int pole)
{
    bool closed = true;
    for (std::size_t c = 0; c < p->size(); ++c)
        if (p->on_boundary(static_cast<int>(c))) closed = false;
    if (!closed) return morse::pinned_morse(p, top, std::nullopt);
    if (pole < 0) {
        const auto& faces = p->faces(top);
        for (int v : p->cells_of_dim(0)) {
            bool in_top = v == top;
            if (p->dim(top) == 1) in_top = in_top || std::find(faces.begin(), faces.end(), v) != faces.end();
            else if (p->is_simplicial() && p->dim(top) > 1) {
                const auto& vs = p->vertices(top);
                in_top = std::binary_search(vs.begin(), vs.end(), p->vertices(v).front());
            }
            if (!in_top) {
                pole = v;
                break;
            }
        }
        if (pole < 0) pole = p->cells_of_dim(0).front();
    }
    return morse::pinned_morse(p, top, pole);
}

namespace {

int top_critical(const MorseMatching& m)
{
    const int d = m.host().max_dim();
    int found = -1;
    for (int c : m.host().cells_of_dim(d))
        if (m.is_critical(c) && !m.host().on_boundary(c)) {
            if (found >= 0) return -2;
            found = c;
        }
    return found;
}

std::vector<std::string> with_label(std::vector<std::string> labels, const std::string& extra)
{
    labels.push_back(extra);
    return labels;
}

void require_simplicial_host(const MorseMatching& m, const SimplicialComplex& k, const char* what)
{
    if (!m.host().is_simplicial() || m.host().structural_hash() != face_poset(k).structural_hash())
        fail(ErrorKind::invalid_input, std::string(what) + " does not live on the face poset of its complex");
}

}  // namespace

Patched patch_morse(const SimplicialComplex& m1, const SimplicialComplex& m2, const MorseMatching& f,
                    const MorseMatching& g, const MorseMatching& h, const std::vector<std::string>& sigma)
{
    require_simplicial_host(f, m1, "f");
    require_simplicial_host(g, m2, "g");
    const auto inter = complex_intersection(m1, m2);
    require_simplicial_host(h, inter, "h");
    const int d = m1.dim();
    if (m2.dim() != d || inter.dim() != d - 1)
        fail(ErrorKind::precondition, "M1 and M2 must be d-dimensional and meet in a (d-1)-complex");
    if (!pseudomanifold_check(inter).is_pseudomanifold)
        fail(ErrorKind::precondition, "M1 ∩ M2 is not a pseudo-manifold");
    if (!f.equatorial() || !g.equatorial()) fail(ErrorKind::precondition, "f and g must be equatorial");
    if (!h.boundary_critical() || h.c_int(d - 1) != 1)
        fail(ErrorKind::precondition, "h must be boundary-critical with one interior critical (d-1)-cell");
    const int s_h = cell_by_labels(h.host(), sigma);
    if (h.host().dim(s_h) != d - 1 || !h.is_critical(s_h))
        fail(ErrorKind::precondition, "sigma must be the critical (d-1)-cell of h");
    const int s1 = top_critical(f), s2 = top_critical(g);
    auto contains_sigma = [&](const MorseMatching& m, int top) {
        auto labels = m.host().cell_labels(top);
        return std::all_of(sigma.begin(), sigma.end(), [&](const std::string& l) {
            return std::find(labels.begin(), labels.end(), l) != labels.end();
        });
    };
    if (!contains_sigma(f, s1)) fail(ErrorKind::precondition, "critical top cell of f does not contain sigma");
    if (!contains_sigma(g, s2)) fail(ErrorKind::precondition, "critical top cell of g does not contain sigma");

    Patched out;
    out.complex = complex_union(m1, m2);
    auto host = share(face_poset(out.complex));
    std::vector<CellPair> pairs;
    auto transfer = [&](const MorseMatching& m) {
        for (const auto& [lo, up] : m.interior_pairs())
            pairs.emplace_back(cell_by_labels(*host, m.host().cell_labels(lo)),
                               cell_by_labels(*host, m.host().cell_labels(up)));
    };
    transfer(f);
    transfer(g);
    transfer(h);
    pairs.emplace_back(cell_by_labels(*host, sigma), cell_by_labels(*host, g.host().cell_labels(s2)));
    out.matching = MorseMatching::validate(host, std::move(pairs));
    if (!out.matching.boundary_critical())
        fail(ErrorKind::precondition, "patched matching touches the boundary of M1 ∪ M2",
             "M1 ∩ M2 must meet the boundary of the union only in its own boundary");
    return out;
}

Patched cone_morse(const SimplicialComplex& m, const MorseMatching& f, const std::string& apex)
{
    require_simplicial_host(f, m, "f");
    const FacePoset& base = f.host();
    if (!f.boundary_critical()) fail(ErrorKind::precondition, "coning needs a boundary-critical matching");
    bool closed = true;
    for (std::size_t c = 0; c < base.size(); ++c)
        if (base.on_boundary(static_cast<int>(c))) closed = false;
    if (closed && f.c(0) != 1) fail(ErrorKind::precondition, "closed base needs a polar matching (one critical vertex)");
    if (!closed && f.c_int(0) != 0) fail(ErrorKind::precondition, "matching has an interior critical vertex");

    Patched out;
    out.complex = cone(m, apex);
    auto host = share(face_poset(out.complex));
    std::vector<CellPair> pairs;
    for (const auto& [lo, up] : f.pairs())
        pairs.emplace_back(cell_by_labels(*host, with_label(base.cell_labels(lo), apex)),
                           cell_by_labels(*host, with_label(base.cell_labels(up), apex)));
    if (closed)
        for (int v : base.cells_of_dim(0))
            if (f.is_critical(v))
                pairs.emplace_back(cell_by_labels(*host, {apex}),
                                   cell_by_labels(*host, with_label(base.cell_labels(v), apex)));
    out.matching = MorseMatching::validate(host, std::move(pairs));
    return out;
}

Patched uncone_morse(const SimplicialComplex& c, const MorseMatching& g, const std::string& apex)
{
    require_simplicial_host(g, c, "g");
    const auto v = c.find_vertex(apex);
    if (!v) fail(ErrorKind::invalid_input, "apex '" + apex + "' is not a vertex");
    if (!g.boundary_critical()) fail(ErrorKind::precondition, "unconing needs a boundary-critical matching");
    Patched out;
    out.complex = link(c, Simplex{*v});
    if (out.complex.facet_count() != c.facet_count())
        fail(ErrorKind::precondition, "complex is not a cone with the given apex");
    auto host = share(face_poset(out.complex));
    std::vector<CellPair> pairs;
    auto strip = [&](int cell) {
        auto labels = g.host().cell_labels(cell);
        auto it = std::find(labels.begin(), labels.end(), apex);
        if (it == labels.end() || labels.size() == 1) return -1;
        labels.erase(it);
        return cell_by_labels(*host, labels);
    };
    for (const auto& [lo, up] : g.pairs()) {
        const int a = strip(lo), b = strip(up);
        if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
    }
    out.matching = MorseMatching::validate(host, std::move(pairs));
    return out;
}

}  // namespace morselab::calculus
