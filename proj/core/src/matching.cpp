#include "morselab/matching.hpp"

#include "morselab/error.hpp"

#include <algorithm>
#include <queue>

namespace morselab::morse {

namespace {

bool covers(const FacePoset& p, int upper, int lower)
{
    const auto& f = p.faces(upper);
    return std::find(f.begin(), f.end(), lower) != f.end();
}

}  // namespace

std::vector<int> find_vpath_cycle(const FacePoset& p, const std::vector<int>& partner)
{
    // Walk k-cells: σ -> (its upper partner τ) -> another face σ' of τ.
    const std::size_t n = p.size();
    std::vector<char> colour(n, 0);
    std::vector<int> parent(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        const int s = static_cast<int>(start);
        if (colour[start] || partner[start] < 0 || p.dim(partner[start]) != p.dim(s) + 1) continue;
        // iterative DFS over lower cells
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        colour[start] = 1;
        while (!stack.empty()) {
            auto& [sigma, next] = stack.back();
            const int tau = partner[static_cast<std::size_t>(sigma)];
            const auto& faces = p.faces(tau);
            if (next >= faces.size()) {
                colour[static_cast<std::size_t>(sigma)] = 2;
                stack.pop_back();
                continue;
            }
            const int other = faces[next++];
            if (other == sigma) continue;
            const int up = partner[static_cast<std::size_t>(other)];
            if (up < 0 || p.dim(up) != p.dim(other) + 1) continue;
            if (colour[static_cast<std::size_t>(other)] == 1) {
                std::vector<int> cycle;
                std::size_t from = 0;
                while (stack[from].first != other) ++from;
                for (std::size_t i = from; i < stack.size(); ++i) {
                    cycle.push_back(stack[i].first);
                    cycle.push_back(partner[static_cast<std::size_t>(stack[i].first)]);
                }
                cycle.push_back(other);
                return cycle;
            }
            if (colour[static_cast<std::size_t>(other)] == 0) {
                colour[static_cast<std::size_t>(other)] = 1;
                stack.emplace_back(other, 0);
            }
        }
    }
    return {};
}

MorseMatching MorseMatching::validate(PosetPtr host, std::vector<CellPair> pairs)
{
    require(static_cast<bool>(host), ErrorKind::invalid_input, "matching needs a host poset");
    const FacePoset& p = *host;
    MorseMatching m;
    m.partner_.assign(p.size(), -1);
    for (const auto& [lower, upper] : pairs) {
        const int n = static_cast<int>(p.size());
        if (lower < 0 || upper < 0 || lower >= n || upper >= n)
            throw MatchingError("pair (" + std::to_string(lower) + "," + std::to_string(upper) + ") names an unknown cell");
        if (!covers(p, upper, lower))
            throw MatchingError("pair (" + p.cell_name(lower) + "," + p.cell_name(upper) + ") is not a cover relation");
        for (int c : {lower, upper})
            if (m.partner_[static_cast<std::size_t>(c)] >= 0)
                throw MatchingError("cell " + p.cell_name(c) + " is matched twice", {c});
        m.partner_[static_cast<std::size_t>(lower)] = upper;
        m.partner_[static_cast<std::size_t>(upper)] = lower;
    }
    if (auto cycle = find_vpath_cycle(p, m.partner_); !cycle.empty()) {
        std::string text;
        for (std::size_t i = 0; i < cycle.size(); ++i) text += (i ? " -> " : "") + p.cell_name(cycle[i]);
        throw MatchingError("matching has a closed V-path: " + text, std::move(cycle));
    }
    m.host_ = std::move(host);
    m.pairs_ = std::move(pairs);
    const int top = std::max(p.max_dim(), 0);
    m.critical_.assign(static_cast<std::size_t>(top + 1), 0);
    m.interior_critical_.assign(static_cast<std::size_t>(top + 1), 0);
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (m.partner_[c] >= 0) continue;
        const int k = p.dim(static_cast<int>(c));
        ++m.critical_[static_cast<std::size_t>(k)];
        if (!p.on_boundary(static_cast<int>(c))) ++m.interior_critical_[static_cast<std::size_t>(k)];
    }
    return m;
}

std::vector<int> MorseMatching::critical_cells() const
{
    std::vector<int> out;
    for (std::size_t c = 0; c < partner_.size(); ++c)
        if (partner_[c] < 0) out.push_back(static_cast<int>(c));
    return out;
}

long long MorseMatching::c(int k) const
{
    return k >= 0 && k < static_cast<int>(critical_.size()) ? critical_[static_cast<std::size_t>(k)] : 0;
}

long long MorseMatching::c_int(int k) const
{
    return k >= 0 && k < static_cast<int>(interior_critical_.size()) ? interior_critical_[static_cast<std::size_t>(k)] : 0;
}

bool MorseMatching::boundary_critical() const
{
    for (const auto& [a, b] : pairs_)
        if (host_->on_boundary(a) || host_->on_boundary(b)) return false;
    return true;
}

bool MorseMatching::equatorial() const
{
    return boundary_critical() && c_int(0) == 0 && c_int(host_->max_dim()) == 1;
}

bool MorseMatching::polar() const
{
    for (std::size_t c = 0; c < host_->size(); ++c)
        if (host_->on_boundary(static_cast<int>(c))) return false;
    return c(0) == 1 && c(host_->max_dim()) == 1;
}

long long MorseMatching::euler_sum() const
{
    long long s = 0;
    for (std::size_t k = 0; k < critical_.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * critical_[k];
    return s;
}

std::vector<CellPair> MorseMatching::interior_pairs() const
{
    std::vector<CellPair> out;
    for (const auto& pr : pairs_)
        if (!host_->on_boundary(pr.first) && !host_->on_boundary(pr.second)) out.push_back(pr);
    return out;
}

std::vector<long long> matching_to_function(const MorseMatching& m)
{
    const FacePoset& p = m.host();
    const std::size_t n = p.size();
    // edge a -> b means f(a) < f(b)
    std::vector<std::vector<int>> out(n);
    std::vector<int> indegree(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        const int tau = static_cast<int>(t);
        for (int sigma : p.faces(tau)) {
            if (m.partner(sigma) == tau) out[t].push_back(sigma);
            else out[static_cast<std::size_t>(sigma)].push_back(tau);
        }
    }
    for (const auto& targets : out)
        for (int b : targets) ++indegree[static_cast<std::size_t>(b)];
    using Key = std::pair<int, int>;  // (dim, id) for a stable order
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (std::size_t c = 0; c < n; ++c)
        if (indegree[c] == 0) ready.emplace(p.dim(static_cast<int>(c)), static_cast<int>(c));
    std::vector<long long> value(n, 0);
    long long next = 0;
    while (!ready.empty()) {
        const int c = ready.top().second;
        ready.pop();
        value[static_cast<std::size_t>(c)] = next++;
        for (int b : out[static_cast<std::size_t>(c)])
            if (--indegree[static_cast<std::size_t>(b)] == 0) ready.emplace(p.dim(b), b);
    }
    if (next != static_cast<long long>(n)) fail(ErrorKind::internal, "modified Hasse digraph has a cycle");
    return value;
}

FormanCheck check_discrete_morse_function(const FacePoset& p, const std::vector<long long>& values)
{
    FormanCheck r;
    if (values.size() != p.size()) {
        r.reason = "function has " + std::to_string(values.size()) + " values for " + std::to_string(p.size()) + " cells";
        return r;
    }
    std::vector<char> paired(p.size(), 0);
    for (std::size_t c = 0; c < p.size(); ++c) {
        const int sigma = static_cast<int>(c);
        int up = 0, down = 0;
        for (int tau : p.cofaces(sigma))
            if (values[static_cast<std::size_t>(tau)] <= values[c]) {
                ++up;
                r.pairs.emplace_back(sigma, tau);
                paired[c] = paired[static_cast<std::size_t>(tau)] = 1;
            }
        for (int rho : p.faces(sigma))
            if (values[static_cast<std::size_t>(rho)] >= values[c]) ++down;
        if (up > 1 || down > 1) {
            r.reason = "cell " + p.cell_name(sigma) + " violates the discrete Morse condition";
            r.pairs.clear();
            return r;
        }
        if (up && down) {
            r.reason = "cell " + p.cell_name(sigma) + " is exceptional both upwards and downwards";
            r.pairs.clear();
            return r;
        }
    }
    for (std::size_t c = 0; c < p.size(); ++c)
        if (!paired[c]) r.critical.push_back(static_cast<int>(c));
    std::sort(r.pairs.begin(), r.pairs.end());
    r.is_morse = true;
    return r;
}

}  // namespace morselab::morse
