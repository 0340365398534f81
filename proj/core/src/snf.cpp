#include "morselab/snf.hpp"

#include "morselab/error.hpp"

#include <algorithm>
#include <set>

namespace morselab {

std::size_t SparseIntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

namespace {

struct Overflow {};

struct CheckedRing {
    using T = long long;
    static bool is_unit(T x) { return x == 1 || x == -1; }
    static T inverse(T x) { return x; }
    static T from(long long x) { return x; }
    static T mul(T a, T b)
    {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T sub(T a, T b)
    {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static bool zero(T x) { return x == 0; }
};

struct BigRing {
    using T = BigInt;
    static bool is_unit(const T& x) { return x == 1 || x == -1; }
    static T inverse(const T& x) { return x; }
    static T from(long long x) { return T(x); }
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static bool zero(const T& x) { return x.is_zero(); }
};

struct PrimeField {
    using T = long long;
    long long p;
    bool is_unit(T x) const { return x != 0; }
    T inverse(T x) const
    {
        T result = 1, base = x, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }
    T from(long long x) const { return ((x % p) + p) % p; }
    T mul(T a, T b) const { return a * b % p; }
    T sub(T a, T b) const { return ((a - b) % p + p) % p; }
    bool zero(T x) const { return x == 0; }
};

template <typename Ring>
struct Eliminator {
    using T = typename Ring::T;
    using Row = std::vector<std::pair<int, T>>;

    Ring ring;
    std::vector<Row> rows;
    std::vector<std::vector<int>> col_rows;
    std::vector<char> alive;
    std::size_t rank = 0;

    Eliminator(Ring r, const SparseIntMatrix& m) : ring(std::move(r))
    {
        rows.resize(m.rows);
        col_rows.resize(m.cols);
        alive.assign(m.rows, 1);
        for (std::size_t c = 0; c < m.cols; ++c)
            for (const auto& [row, value] : m.columns[c]) {
                T v = ring.from(value);
                if (ring.zero(v)) continue;
                rows[static_cast<std::size_t>(row)].emplace_back(static_cast<int>(c), v);
                col_rows[c].push_back(row);
            }
        for (auto& row : rows) std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    const T* entry(const Row& row, int col) const
    {
        auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
        return it != row.end() && it->first == col ? &it->second : nullptr;
    }

    bool has_unit(const Row& row) const
    {
        for (const auto& e : row)
            if (ring.is_unit(e.second)) return true;
        return false;
    }

    // target -= factor * source, recording fill-in.
    void axpy(int target, const T& factor, const Row& source)
    {
        Row& dst = rows[static_cast<std::size_t>(target)];
        Row merged;
        merged.reserve(dst.size() + source.size());
        std::size_t i = 0, j = 0;
        while (i < dst.size() || j < source.size()) {
            if (j == source.size() || (i < dst.size() && dst[i].first < source[j].first)) {
                merged.push_back(std::move(dst[i++]));
            } else if (i == dst.size() || source[j].first < dst[i].first) {
                T v = ring.sub(ring.from(0), ring.mul(factor, source[j].second));
                if (!ring.zero(v)) {
                    col_rows[static_cast<std::size_t>(source[j].first)].push_back(target);
                    merged.emplace_back(source[j].first, std::move(v));
                }
                ++j;
            } else {
                T v = ring.sub(dst[i].second, ring.mul(factor, source[j].second));
                if (!ring.zero(v)) merged.emplace_back(dst[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        dst = std::move(merged);
    }

    void run()
    {
        std::set<std::pair<std::size_t, int>> queue;
        std::vector<std::size_t> queued_len(rows.size(), 0);
        std::vector<char> in_queue(rows.size(), 0);
        auto enqueue = [&](int r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            if (in_queue[static_cast<std::size_t>(r)]) queue.erase({queued_len[static_cast<std::size_t>(r)], r});
            in_queue[static_cast<std::size_t>(r)] = 0;
            if (row.empty() || !alive[static_cast<std::size_t>(r)]) return;
            queued_len[static_cast<std::size_t>(r)] = row.size();
            queue.insert({row.size(), r});
            in_queue[static_cast<std::size_t>(r)] = 1;
        };
        for (std::size_t r = 0; r < rows.size(); ++r) enqueue(static_cast<int>(r));

        while (!queue.empty()) {
            const int r = queue.begin()->second;
            queue.erase(queue.begin());
            in_queue[static_cast<std::size_t>(r)] = 0;
            const Row& row = rows[static_cast<std::size_t>(r)];
            if (!has_unit(row)) continue;  // parked until the row changes

            int pivot_col = -1;
            std::size_t best = 0;
            T pivot{};
            for (const auto& [c, v] : row) {
                if (!ring.is_unit(v)) continue;
                const std::size_t load = col_rows[static_cast<std::size_t>(c)].size();
                if (pivot_col < 0 || load < best) {
                    pivot_col = c;
                    best = load;
                    pivot = v;
                }
            }
            const T inv = ring.inverse(pivot);
            alive[static_cast<std::size_t>(r)] = 0;
            ++rank;
            Row source = rows[static_cast<std::size_t>(r)];
            std::vector<int> hits;
            hits.swap(col_rows[static_cast<std::size_t>(pivot_col)]);
            std::sort(hits.begin(), hits.end());
            hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
            for (int other : hits) {
                if (other == r || !alive[static_cast<std::size_t>(other)]) continue;
                const T* a = entry(rows[static_cast<std::size_t>(other)], pivot_col);
                if (!a) continue;
                const T factor = ring.mul(*a, inv);
                axpy(other, factor, source);
                enqueue(other);
            }
            rows[static_cast<std::size_t>(r)].clear();
        }
    }

    /// Alive rows restricted to columns still in use, as a dense matrix.
    std::vector<std::vector<BigInt>> leftover() const
    {
        std::vector<int> live_rows;
        std::set<int> live_cols;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (alive[r] && !rows[r].empty()) {
                live_rows.push_back(static_cast<int>(r));
                for (const auto& e : rows[r]) live_cols.insert(e.first);
            }
        std::vector<int> cols(live_cols.begin(), live_cols.end());
        std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(cols.size()));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& e : rows[static_cast<std::size_t>(live_rows[i])]) {
                auto j = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), e.first) - cols.begin());
                dense[i][j] = BigInt(e.second);
            }
        return dense;
    }
};

}  // namespace

std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a)
{
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero magnitude in the trailing block
            std::size_t pr = m, pc = n;
            BigInt best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!a[i][j].is_zero()) {
                        BigInt v = abs(a[i][j]);
                        if (pr == m || v < best) {
                            best = v;
                            pr = i;
                            pc = j;
                        }
                    }
            if (pr == m) return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t].is_zero()) continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (!a[i][t].is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j].is_zero()) continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (!a[t][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            // enforce divisibility by folding an offending row into row t
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (BigInt(a[i][j] % a[t][t]) != 0) {
                        for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

SmithInvariants smith_invariants(const SparseIntMatrix& m)
{
    SmithInvariants out;
    std::vector<std::vector<BigInt>> rest;
    try {
        Eliminator<CheckedRing> e(CheckedRing{}, m);
        e.run();
        out.rank = e.rank;
        rest = e.leftover();
    } catch (const Overflow&) {
        Eliminator<BigRing> e(BigRing{}, m);
        e.run();
        out.rank = e.rank;
        rest = e.leftover();
    }
    for (auto& d : dense_smith_diagonal(std::move(rest))) {
        ++out.rank;
        if (d > 1) out.torsion.push_back(std::move(d));
    }
    return out;
}

std::size_t rank_mod_p(const SparseIntMatrix& m, long long p)
{
    require(p >= 2, ErrorKind::invalid_input, "field characteristic must be a prime");
    Eliminator<PrimeField> e(PrimeField{p}, m);
    e.run();
    return e.rank;
}

}  // namespace morselab
