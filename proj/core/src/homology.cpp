#include "morselab/homology.hpp"

#include "morselab/constructions.hpp"
#include "morselab/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <limits>

namespace morselab::homology {

Coefficients Coefficients::F(long long p)
{
    require(p >= 2, ErrorKind::invalid_input, "field characteristic must be a prime");
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) fail(ErrorKind::invalid_input, std::to_string(p) + " is not prime");
    require(p < (1LL << 31), ErrorKind::invalid_input, "field characteristic too large");
    return {Kind::prime, p};
}

std::string Coefficients::name() const
{
    switch (kind) {
    case Kind::integers: return "z";
    case Kind::rationals: return "q";
    case Kind::prime: return prime == 2 ? "f2" : "fp:" + std::to_string(prime);
    }
    return "?";
}

Coefficients parse_coefficients(const std::string& text)
{
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "z") return Coefficients::Z();
    if (t == "q") return Coefficients::Q();
    if (t == "f2") return Coefficients::F(2);
    std::string digits;
    if (t.rfind("fp:", 0) == 0) digits = t.substr(3);
    else if (t.rfind("fp", 0) == 0) digits = t.substr(2);
    else if (t.rfind("f", 0) == 0) digits = t.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 12)
        return Coefficients::F(std::stoll(digits));
    fail(ErrorKind::invalid_input, "unknown coefficients '" + text + "'", "use one of z, q, f2, fp:<p>");
}

namespace {

SparseIntMatrix augmentation(std::size_t vertices)
{
    SparseIntMatrix m;
    m.rows = 1;
    m.cols = vertices;
    m.columns.assign(vertices, {{0, 1}});
    return m;
}

}  // namespace

ChainComplex chain_complex(const SimplicialComplex& k, Coefficients coefficients, bool reduced)
{
    ChainComplex c;
    c.coefficients = coefficients;
    c.reduced = reduced;
    const int d = k.dim();
    for (int i = 0; i <= d; ++i) c.ranks.push_back(k.faces(i).size());
    c.boundary.resize(c.ranks.size());
    if (d >= 0 && reduced) c.boundary[0] = augmentation(c.ranks[0]);
    for (int i = 1; i <= d; ++i) {
        const auto& cells = k.faces(i);
        SparseIntMatrix m;
        m.rows = c.ranks[static_cast<std::size_t>(i - 1)];
        m.cols = cells.size();
        m.columns.resize(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const Simplex& s = cells[j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t t = 0; t < s.size(); ++t)
                    if (t != drop) face.push_back(s[t]);
                m.columns[j].emplace_back(*k.face_index(face), drop % 2 == 0 ? 1 : -1);
            }
        }
        c.boundary[static_cast<std::size_t>(i)] = std::move(m);
    }
    return c;
}

ChainComplex chain_complex(const FacePoset& p, Coefficients coefficients, bool reduced)
{
    if (!(coefficients.kind == Coefficients::Kind::prime && coefficients.prime == 2))
        fail(ErrorKind::precondition, "a bare face poset carries no orientations; only f2 coefficients are supported",
             "compute homology of order_complex(poset) for signed coefficients");
    ChainComplex c;
    c.coefficients = coefficients;
    c.reduced = reduced;
    const int d = p.max_dim();
    std::vector<std::vector<int>> position(static_cast<std::size_t>(d + 1));
    std::vector<int> local(p.size(), -1);
    for (int i = 0; i <= d; ++i) {
        const auto& cells = p.cells_of_dim(i);
        c.ranks.push_back(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j) local[static_cast<std::size_t>(cells[j])] = static_cast<int>(j);
    }
    c.boundary.resize(c.ranks.size());
    if (d >= 0 && reduced) c.boundary[0] = augmentation(c.ranks[0]);
    for (int i = 1; i <= d; ++i) {
        const auto& cells = p.cells_of_dim(i);
        SparseIntMatrix m;
        m.rows = c.ranks[static_cast<std::size_t>(i - 1)];
        m.cols = cells.size();
        m.columns.resize(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j)
            for (int f : p.faces(cells[j])) m.columns[j].emplace_back(local[static_cast<std::size_t>(f)], 1);
        c.boundary[static_cast<std::size_t>(i)] = std::move(m);
    }
    return c;
}

bool boundary_squares_to_zero(const ChainComplex& c)
{
    const long long modulus = c.coefficients.kind == Coefficients::Kind::prime ? c.coefficients.prime : 0;
    for (std::size_t k = 1; k < c.boundary.size(); ++k) {
        const auto& upper = c.boundary[k];
        const auto& lower = c.boundary[k - 1];
        if (lower.columns.empty()) continue;
        for (const auto& column : upper.columns) {
            std::vector<std::pair<int, long long>> acc;
            for (const auto& [mid, a] : column)
                for (const auto& [row, b] : lower.columns[static_cast<std::size_t>(mid)]) acc.emplace_back(row, a * b);
            std::sort(acc.begin(), acc.end());
            for (std::size_t i = 0; i < acc.size();) {
                long long sum = 0;
                std::size_t j = i;
                for (; j < acc.size() && acc[j].first == acc[i].first; ++j) sum += acc[j].second;
                if (modulus) sum %= modulus;
                if (sum != 0) return false;
                i = j;
            }
        }
    }
    return true;
}

long long HomologyProfile::betti_at(int i) const
{
    const int idx = i - first_dim;
    if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
    return betti[static_cast<std::size_t>(idx)];
}

const std::vector<BigInt>& HomologyProfile::torsion_at(int i) const
{
    static const std::vector<BigInt> none;
    const int idx = i - first_dim;
    if (idx < 0 || idx >= static_cast<int>(torsion.size())) return none;
    return torsion[static_cast<std::size_t>(idx)];
}

long long HomologyProfile::generators_at(int i) const
{
    return betti_at(i) + static_cast<long long>(torsion_at(i).size());
}

long long HomologyProfile::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        const int deg = first_dim + static_cast<int>(i);
        chi += (deg % 2 == 0 ? 1 : -1) * betti[i];
    }
    return chi;
}

std::string HomologyProfile::betti_text() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(betti[i]);
    }
    return out + ")";
}

std::string HomologyProfile::to_json() const
{
    nlohmann::json doc;
    doc["coefficients"] = coefficients.name();
    doc["reduced"] = reduced;
    doc["first_dim"] = first_dim;
    doc["betti"] = betti;
    if (coefficients.kind == Coefficients::Kind::integers) {
        nlohmann::json tors = nlohmann::json::array();
        for (const auto& list : torsion) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& t : list) {
                if (t < BigInt(std::numeric_limits<long long>::max())) row.push_back(t.convert_to<long long>());
                else row.push_back(t.str());
            }
            tors.push_back(std::move(row));
        }
        doc["torsion"] = std::move(tors);
    }
    return doc.dump();
}

HomologyProfile homology(const ChainComplex& c)
{
    HomologyProfile h;
    h.coefficients = c.coefficients;
    h.reduced = c.reduced;
    const std::size_t top = c.ranks.size();  // degrees 0..top-1
    // rank of boundary[k] for k = 0..top; boundary[0] is the augmentation when reduced
    std::vector<std::size_t> rank(top + 1, 0);
    std::vector<std::vector<BigInt>> torsion_of(top + 1);
    for (std::size_t k = 0; k < top; ++k) {
        const auto& m = c.boundary[k];
        if (m.cols == 0 || m.rows == 0) continue;
        if (c.coefficients.kind == Coefficients::Kind::prime) {
            rank[k] = rank_mod_p(m, c.coefficients.prime);
        } else {
            auto inv = smith_invariants(m);
            rank[k] = inv.rank;
            torsion_of[k] = std::move(inv.torsion);
        }
    }
    const bool integral = c.coefficients.kind == Coefficients::Kind::integers;
    if (c.reduced) {
        h.first_dim = -1;
        const long long augmented = top > 0 ? static_cast<long long>(rank[0]) : 0;
        h.betti.push_back(top > 0 ? 1 - augmented : 0);
        if (integral) h.torsion.emplace_back();
    }
    for (std::size_t k = 0; k < top; ++k) {
        const long long below = k == 0 && !c.reduced ? 0 : static_cast<long long>(rank[k]);
        h.betti.push_back(static_cast<long long>(c.ranks[k]) - below - static_cast<long long>(rank[k + 1]));
        if (integral) h.torsion.push_back(torsion_of[k + 1]);
    }
    if (!c.reduced && h.betti.empty()) h.betti.push_back(0);
    return h;
}

HomologyProfile homology(const SimplicialComplex& k, Coefficients coefficients, bool reduced)
{
    if (k.is_empty_face_only()) {
        HomologyProfile h;
        h.coefficients = coefficients;
        h.reduced = reduced;
        h.first_dim = reduced ? -1 : 0;
        h.betti = {reduced ? 1 : 0};
        if (coefficients.kind == Coefficients::Kind::integers) h.torsion.emplace_back();
        return h;
    }
    return homology(chain_complex(k, coefficients, reduced));
}

HomologyProfile homology(const FacePoset& p, Coefficients coefficients, bool reduced)
{
    return homology(chain_complex(p, coefficients, reduced));
}

bool is_acyclic(const SimplicialComplex& k, Coefficients coefficients)
{
    if (k.is_void()) return false;
    const auto h = homology(k, coefficients, true);
    for (int i = h.first_dim; i <= h.top_dim(); ++i)
        if (!h.is_zero_at(i)) return false;
    return true;
}

bool has_sphere_homology(const SimplicialComplex& k, int dim, Coefficients coefficients)
{
    if (k.is_void()) return false;
    const auto h = homology(k, coefficients, true);
    for (int i = h.first_dim; i <= std::max(h.top_dim(), dim); ++i) {
        const long long expect = i == dim ? 1 : 0;
        if (h.betti_at(i) != expect || !h.torsion_at(i).empty()) return false;
    }
    return true;
}

namespace {

/// Lowest degree with nonzero reduced homology; `none` when acyclic.
int lowest_nonvanishing(const SimplicialComplex& k, Coefficients field, int none)
{
    const auto h = homology(k, field, true);
    for (int i = h.first_dim; i <= h.top_dim(); ++i)
        if (!h.is_zero_at(i)) return i;
    return none;
}

}  // namespace

DepthReport algebraic_depth(const SimplicialComplex& k, Coefficients field)
{
    DepthReport r;
    r.dim = k.dim();
    r.field = field;
    if (k.is_void() || k.is_empty_face_only()) {
        r.adepth = r.dim;
        r.cohen_macaulay = true;
        return r;
    }
    const int d = k.dim();
    const int big = d + 2;
    int best = d;
    auto consider = [&](const Simplex& face, const SimplicialComplex& lk) {
        const int sdim = static_cast<int>(face.size()) - 1;
        const int j = lowest_nonvanishing(lk, field, big);
        const int bound = j + sdim + 1;
        if (bound < best) {
            best = bound;
            r.witness_face = face;
            r.witness_degree = j;
        }
    };
    consider({}, k);
    for (int i = 0; i < d && best > 0; ++i)
        for (const auto& face : k.faces(i)) {
            consider(face, link(k, face));
            if (best <= i) break;
        }
    if (!k.is_pure()) {
        for (const auto& f : k.facets()) {
            const int fdim = static_cast<int>(f.size()) - 1;
            if (fdim < best) {
                best = fdim;
                r.witness_face = f;
                r.witness_degree = -1;
            }
        }
    }
    r.adepth = std::max(best, 0);
    r.cohen_macaulay = r.adepth == d;
    return r;
}

bool is_homology_manifold(const SimplicialComplex& k, Coefficients field)
{
    if (k.is_void() || !k.is_pure()) return false;
    const int d = k.dim();
    for (int i = 0; i < d; ++i)
        for (const auto& face : k.faces(i)) {
            const auto lk = link(k, face);
            const int expect = d - i - 1;
            if (!has_sphere_homology(lk, expect, field) && !is_acyclic(lk, field)) return false;
        }
    return true;
}

}  // namespace morselab::homology
