#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace oracle {

namespace {

using Column = std::vector<std::pair<int, std::int64_t>>;

std::int64_t mod(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t power(std::int64_t b, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1;
    b = mod(b, p);
    while (e) {
        if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
        b = static_cast<std::int64_t>((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}

/// col -= factor * other, both sorted by row.
Column axpy(const Column& col, const Column& other, std::int64_t factor, std::int64_t p)
{
    Column out;
    out.reserve(col.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
            out.push_back(col[i++]);
        } else if (i == col.size() || other[j].first < col[i].first) {
            out.emplace_back(other[j].first, mod(-(__int128)factor * other[j].second % p, p));
            ++j;
        } else {
            const auto v = mod(col[i].second - static_cast<std::int64_t>((__int128)factor * other[j].second % p), p);
            if (v) out.emplace_back(col[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Rank of a sparse matrix over F_p by pivot-on-lowest-row column reduction.
long long sparse_rank(std::vector<Column> cols, std::int64_t p)
{
    std::map<int, std::size_t> pivot_of_row;
    long long rank = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto& col = cols[c];
        while (!col.empty()) {
            const int low = col.back().first;
            const auto it = pivot_of_row.find(low);
            if (it == pivot_of_row.end()) break;
            const auto& other = cols[it->second];
            const auto factor = static_cast<std::int64_t>((__int128)col.back().second * power(other.back().second, p - 2, p) % p);
            col = axpy(col, other, factor, p);
        }
        if (!col.empty()) {
            pivot_of_row[col.back().first] = c;
            ++rank;
        }
    }
    return rank;
}

}  // namespace

std::vector<std::set<Simplex>> faces_by_dim(const SimplicialComplex& k)
{
    std::vector<std::set<Simplex>> out(static_cast<std::size_t>(std::max(0, k.dim() + 1)));
    for (const auto& f : k.facets()) {
        const std::size_t n = f.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            out[s.size() - 1].insert(s);
        }
    }
    return out;
}

std::vector<long long> f_vector(const SimplicialComplex& k)
{
    std::vector<long long> out;
    for (const auto& level : faces_by_dim(k)) out.push_back(static_cast<long long>(level.size()));
    return out;
}

long long euler_characteristic(const SimplicialComplex& k)
{
    long long chi = 0, sign = 1;
    for (long long f : f_vector(k)) {
        chi += sign * f;
        sign = -sign;
    }
    return chi;
}

std::vector<long long> betti(const SimplicialComplex& k, std::int64_t p, bool reduced)
{
    const auto faces = faces_by_dim(k);
    const int d = static_cast<int>(faces.size()) - 1;
    std::vector<std::map<Simplex, int>> index(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        int n = 0;
        for (const auto& s : faces[i]) index[i][s] = n++;
    }
    // rank of the boundary map out of dimension i, i = 0..d+1
    std::vector<long long> rank(static_cast<std::size_t>(d + 2), 0);
    if (reduced && d >= 0 && !faces[0].empty()) rank[0] = 1;
    for (int i = 1; i <= d; ++i) {
        std::vector<Column> cols;
        for (const auto& s : faces[static_cast<std::size_t>(i)]) {
            Column col;
            for (std::size_t j = 0; j < s.size(); ++j) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                col.emplace_back(index[static_cast<std::size_t>(i - 1)].at(face), j % 2 ? p - 1 : 1);
            }
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        rank[static_cast<std::size_t>(i)] = sparse_rank(std::move(cols), p);
    }
    std::vector<long long> out;
    for (int i = 0; i <= d; ++i)
        out.push_back(static_cast<long long>(faces[static_cast<std::size_t>(i)].size()) - rank[static_cast<std::size_t>(i)] -
                      rank[static_cast<std::size_t>(i + 1)]);
    return out;
}

SimplicialComplex link_of(const SimplicialComplex& k, const Simplex& sigma)
{
    std::vector<Simplex> facets;
    for (const auto& f : k.facets())
        if (std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) {
            Simplex rest;
            std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
            facets.push_back(rest);
        }
    return SimplicialComplex::from_ids(k.labels(), facets);
}

std::vector<int> nonzero_reduced_degrees(const SimplicialComplex& k, std::int64_t p)
{
    if (k.is_empty_face_only()) return {-1};
    if (k.is_void()) return {};
    std::vector<int> out;
    const auto b = betti(k, p, true);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) out.push_back(static_cast<int>(i));
    return out;
}

int hochster_depth(const SimplicialComplex& k, std::int64_t p)
{
    int best = k.dim();
    auto consider = [&](const Simplex& sigma) {
        const auto degrees = nonzero_reduced_degrees(link_of(k, sigma), p);
        if (!degrees.empty()) best = std::min(best, degrees.front() + static_cast<int>(sigma.size()));
    };
    consider({});
    for (const auto& level : faces_by_dim(k))
        for (const auto& s : level) consider(s);
    return best;
}

bool is_acyclic_matching(const FacePoset& p, const std::vector<std::pair<int, int>>& pairs)
{
    const auto n = p.size();
    std::vector<int> partner(n, -1);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) return false;
        const auto& faces = p.faces(b);
        if (std::find(faces.begin(), faces.end(), a) == faces.end()) return false;
        if (partner[static_cast<std::size_t>(a)] >= 0 || partner[static_cast<std::size_t>(b)] >= 0) return false;
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    // Hasse edges point down, matched edges point up.
    std::vector<std::vector<int>> out(n);
    std::vector<int> indegree(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (int f : p.faces(static_cast<int>(c))) {
            const bool matched = partner[static_cast<std::size_t>(f)] == static_cast<int>(c);
            const int from = matched ? f : static_cast<int>(c);
            const int to = matched ? static_cast<int>(c) : f;
            out[static_cast<std::size_t>(from)].push_back(to);
            ++indegree[static_cast<std::size_t>(to)];
        }
    std::queue<int> ready;
    for (std::size_t c = 0; c < n; ++c)
        if (!indegree[c]) ready.push(static_cast<int>(c));
    std::size_t seen = 0;
    while (!ready.empty()) {
        const int c = ready.front();
        ready.pop();
        ++seen;
        for (int t : out[static_cast<std::size_t>(c)])
            if (!--indegree[static_cast<std::size_t>(t)]) ready.push(t);
    }
    return seen == n;
}

std::vector<long long> critical_counts(const FacePoset& p, const std::vector<std::pair<int, int>>& pairs,
                                       bool interior_only)
{
    std::vector<char> matched(p.size(), 0);
    for (const auto& [a, b] : pairs) matched[static_cast<std::size_t>(a)] = matched[static_cast<std::size_t>(b)] = 1;
    std::vector<long long> out(static_cast<std::size_t>(std::max(0, p.max_dim() + 1)), 0);
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (matched[c]) continue;
        if (interior_only && p.on_boundary(static_cast<int>(c))) continue;
        ++out[static_cast<std::size_t>(p.dim(static_cast<int>(c)))];
    }
    return out;
}

std::string replay_collapse(const FacePoset& p, std::vector<char> present, const std::vector<char>& protect,
                            int min_dim, const std::vector<std::pair<int, int>>& pairs)
{
    auto is_protected = [&](int c) { return !protect.empty() && protect[static_cast<std::size_t>(c)]; };
    auto alive_cofaces = [&](int c) {
        std::vector<int> out;
        for (int up : p.cofaces(c))
            if (present[static_cast<std::size_t>(up)]) out.push_back(up);
        return out;
    };
    std::size_t step = 0;
    for (const auto& [a, b] : pairs) {
        const auto where = "step " + std::to_string(step++) + ": ";
        if (!present[static_cast<std::size_t>(a)] || !present[static_cast<std::size_t>(b)]) return where + "cell already gone";
        if (is_protected(a) || is_protected(b)) return where + "protected cell";
        if (p.dim(b) != p.dim(a) + 1) return where + "dimensions do not differ by one";
        const auto up = alive_cofaces(a);
        if (up.size() != 1 || up[0] != b) return where + "face is not free";
        if (!alive_cofaces(b).empty()) return where + "coface is not maximal";
        present[static_cast<std::size_t>(a)] = present[static_cast<std::size_t>(b)] = 0;
    }
    for (std::size_t c = 0; c < p.size(); ++c)
        if (present[c] && !is_protected(static_cast<int>(c)) && p.dim(static_cast<int>(c)) >= min_dim)
            return "cell " + std::to_string(c) + " of dimension " + std::to_string(p.dim(static_cast<int>(c))) + " survives";
    return {};
}

BigInt fuss_catalan(int d, int n)
{
    auto factorial = [](int m) {
        BigInt r = 1;
        for (int i = 2; i <= m; ++i) r *= i;
        return r;
    };
    const BigInt binom = factorial(d * n) / (factorial(n) * factorial(d * n - n));
    return binom / ((d - 1) * n + 1);
}

std::size_t polygon_triangulation_orbits(int n)
{
    const int m = n + 2;
    using Tri = std::array<int, 3>;
    std::vector<std::vector<Tri>> all;
    // triangulations of the chain i..j closed by the edge (i, j)
    std::function<std::vector<std::vector<Tri>>(int, int)> chain = [&](int i, int j) {
        std::vector<std::vector<Tri>> out;
        if (j - i < 2) return std::vector<std::vector<Tri>>{{}};
        for (int k = i + 1; k < j; ++k)
            for (const auto& left : chain(i, k))
                for (const auto& right : chain(k, j)) {
                    auto t = left;
                    t.insert(t.end(), right.begin(), right.end());
                    t.push_back({i, k, j});
                    out.push_back(std::move(t));
                }
        return out;
    };
    std::set<std::vector<Tri>> orbits;
    for (const auto& t : chain(0, m - 1)) {
        std::vector<Tri> best;
        for (int r = 0; r < m; ++r)
            for (int flip = 0; flip < 2; ++flip) {
                std::vector<Tri> image;
                for (auto tri : t) {
                    for (auto& v : tri) v = flip ? ((r - v) % m + m) % m : (v + r) % m;
                    std::sort(tri.begin(), tri.end());
                    image.push_back(tri);
                }
                std::sort(image.begin(), image.end());
                if (best.empty() || image < best) best = image;
            }
        orbits.insert(best);
    }
    return orbits.size();
}

bool isomorphic_bruteforce(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) return false;
    if (f_vector(a) != f_vector(b)) return false;
    std::set<Simplex> target(b.facets().begin(), b.facets().end());
    std::vector<morselab::Vertex> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& f : a.facets()) {
            Simplex image;
            for (auto v : f) image.push_back(perm[static_cast<std::size_t>(v)]);
            std::sort(image.begin(), image.end());
            if (!target.count(image)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool is_shelling(const SimplicialComplex& k, const std::vector<int>& order)
{
    if (order.size() != k.facet_count()) return false;
    std::set<int> used(order.begin(), order.end());
    if (used.size() != order.size()) return false;
    for (std::size_t j = 1; j < order.size(); ++j) {
        const auto& fj = k.facets()[static_cast<std::size_t>(order[j])];
        std::vector<Simplex> meets;
        for (std::size_t i = 0; i < j; ++i) {
            const auto& fi = k.facets()[static_cast<std::size_t>(order[i])];
            Simplex m;
            std::set_intersection(fi.begin(), fi.end(), fj.begin(), fj.end(), std::back_inserter(m));
            meets.push_back(m);
        }
        bool has_ridge = false;
        for (const auto& m : meets) {
            if (m.size() + 1 == fj.size()) {
                has_ridge = true;
                continue;
            }
            // a smaller meet must lie inside a ridge-sized meet
            bool covered = false;
            for (const auto& other : meets)
                if (other.size() + 1 == fj.size() && std::includes(other.begin(), other.end(), m.begin(), m.end()))
                    covered = true;
            if (!covered) return false;
        }
        if (!has_ridge) return false;
    }
    return true;
}

std::set<Simplex> boundary_ridges(const SimplicialComplex& k)
{
    std::map<Simplex, int> degree;
    for (const auto& f : k.facets())
        for (std::size_t i = 0; i < f.size(); ++i) {
            Simplex r = f;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
            ++degree[r];
        }
    std::set<Simplex> out;
    for (const auto& [r, n] : degree)
        if (n == 1) out.insert(r);
    return out;
}

std::vector<long long> patch_prediction(const morselab::morse::MorseMatching& f, const morselab::morse::MorseMatching& g,
                                        const morselab::morse::MorseMatching& h, int d)
{
    const auto cf = critical_counts(f.host(), f.pairs(), true);
    const auto cg = critical_counts(g.host(), g.pairs(), true);
    const auto ch = critical_counts(h.host(), h.pairs(), true);
    std::vector<long long> out(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out[i] = cf[i] + cg[i] + (i < ch.size() ? ch[i] : 0) - (k >= d - 1 ? 1 : 0);
    }
    return out;
}

std::vector<long long> subdivision_prediction(const SimplicialComplex& m, const morselab::morse::MorseMatching& f,
                                              const std::vector<morselab::calculus::LinkMatching>& links,
                                              morselab::calculus::Transfer direction)
{
    const bool to_plain = direction == morselab::calculus::Transfer::bc_to_plain;
    const int d = m.dim();
    const auto ridges = boundary_ridges(m);
    const auto on_boundary = [&](const Simplex& s) {
        return std::any_of(ridges.begin(), ridges.end(),
                           [&](const Simplex& r) { return std::includes(r.begin(), r.end(), s.begin(), s.end()); });
    };
    const auto cf = critical_counts(f.host(), f.pairs(), to_plain);
    std::vector<long long> out(static_cast<std::size_t>(d + 1), 0);
    for (int k = 0; k <= d; ++k) out[static_cast<std::size_t>(k)] = cf[static_cast<std::size_t>(d - k)];
    for (const auto& link : links) {
        const bool boundary = on_boundary(m.face_of(link.face));
        const bool interior_counts = !(to_plain && boundary);
        const int link_dim = d - static_cast<int>(link.face.size());
        const auto cg = critical_counts(link.matching.host(), link.matching.pairs(), interior_counts);
        for (int k = 2; k <= d; ++k) {
            const auto i = static_cast<std::size_t>(k);
            if (static_cast<std::size_t>(k - 1) < cg.size()) out[i] += cg[static_cast<std::size_t>(k - 1)];
            // the link's critical top cell stands in for the pair or critical cell of f at that face
            if (k - 1 == link_dim && interior_counts) --out[i];
        }
    }
    return out;
}

}  // namespace oracle
