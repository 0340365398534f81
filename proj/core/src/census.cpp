#include "morselab/census.hpp"

#include "morselab/canonical.hpp"
#include "morselab/error.hpp"

#include "quotient.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

namespace morselab::lc {

using detail::Quotient;

const char* to_string(CensusPredicate p)
{
    switch (p) {
    case CensusPredicate::trees: return "trees";
    case CensusPredicate::all: return "all";
    case CensusPredicate::closed: return "closed";
    }
    return "?";
}

CensusPredicate parse_census_predicate(const std::string& text)
{
    if (text == "trees") return CensusPredicate::trees;
    if (text == "all") return CensusPredicate::all;
    if (text == "closed") return CensusPredicate::closed;
    fail(ErrorKind::invalid_input, "unknown census predicate '" + text + "'", "use trees, all or closed");
}

namespace {

struct TreeOutcome {
    std::map<std::string, CensusType> types;
    std::uint64_t labeled = 0;
};

/// Runs all gluing processes on one tree.
class TreeCensus {
public:
    TreeCensus(const TreeOfSimplices& tree, const CensusOptions& options, std::atomic<std::uint64_t>& expansions,
               std::atomic<bool>& exhausted)
        : tree_(tree), options_(options), expansions_(expansions), exhausted_(exhausted)
    {
        Quotient q(tree_);
        boundary_ = q.open_ridges();
    }

    TreeOutcome run()
    {
        Quotient start(tree_);
        phase_a(start, 0, 0);
        return std::move(out_);
    }

private:
    using Key = std::pair<std::vector<char>, std::vector<int>>;

    bool spend()
    {
        if (exhausted_) return false;
        const auto used = ++expansions_;
        if (options_.budget && used > options_.budget) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    Key key_of(Quotient& q)
    {
        const auto open = q.open_ridges();
        std::vector<char> mask(boundary_.size(), 1);
        for (const auto& r : open)
            mask[static_cast<std::size_t>(std::lower_bound(boundary_.begin(), boundary_.end(), r) - boundary_.begin())] = 0;
        return {std::move(mask), q.vertex_partition()};
    }

    /// Chooses phase a gluings with increasing ridge index, then runs phase b.
    void phase_a(Quotient& q, std::size_t first, int used)
    {
        phase_b_root(q, used);
        if (used >= options_.max_phase_a) return;
        const int d = tree_.d;
        for (std::size_t i = first; i < boundary_.size(); ++i) {
            const auto& a = boundary_[i];
            if (!is_open(q, a)) continue;
            for (std::size_t j = i + 1; j < boundary_.size(); ++j) {
                const auto& b = boundary_[j];
                if (!is_open(q, b)) continue;
                Simplex image = b;
                do {  // the d! bijections in lex order
                    if (!spend()) return;
                    std::map<Vertex, Vertex> map;
                    for (int t = 0; t < d; ++t) map[a[static_cast<std::size_t>(t)]] = image[static_cast<std::size_t>(t)];
                    Quotient next = q;
                    if (q.same_class(a, b)) continue;
                    next.glue(a, b, map);
                    if (!next.facet_defect().empty()) continue;
                    phase_a(next, i + 1, used + 1);
                } while (std::next_permutation(image.begin(), image.end()));
            }
        }
    }

    bool is_open(Quotient& q, const Simplex& r)
    {
        const auto open = q.open_ridges();
        return std::binary_search(open.begin(), open.end(), r);
    }

    void phase_b_root(Quotient& q, int phase_a_count)
    {
        std::set<Key> visited;
        phase_b(q, phase_a_count, visited);
    }

    void phase_b(Quotient& q, int phase_a_count, std::set<Key>& visited)
    {
        auto key = key_of(q);
        if (!visited.insert(key).second) return;
        const auto open = q.open_ridges();
        const bool wanted = options_.predicate == CensusPredicate::all || open.empty();
        if (wanted && q.faces_consistent()) record(q, phase_a_count, std::move(key));
        for (std::size_t i = 0; i < open.size(); ++i)
            for (std::size_t j = i + 1; j < open.size(); ++j)
                for (const auto& map : forced_maps(q, open[i], open[j])) {
                    if (!spend()) return;
                    Quotient next = q;
                    next.glue(open[i], open[j], map);
                    if (!next.facet_defect().empty()) continue;
                    phase_b(next, phase_a_count, visited);
                }
    }

    /// Bijections a -> b fixing a shared ridge; at most one per shared ridge.
    std::vector<std::map<Vertex, Vertex>> forced_maps(Quotient& q, const Simplex& a, const Simplex& b)
    {
        std::vector<std::map<Vertex, Vertex>> out;
        if (q.same_class(a, b)) return out;
        for (const auto& ra : Quotient::facet_ridges(a))
            for (const auto& rb : Quotient::facet_ridges(b)) {
                if (q.face_class(ra) != q.face_class(rb)) continue;
                std::map<Vertex, Vertex> map;
                bool ok = true;
                for (Vertex v : ra) {
                    int hits = 0;
                    for (Vertex w : rb)
                        if (q.vertex_class(v) == q.vertex_class(w)) {
                            map[v] = w;
                            ++hits;
                        }
                    ok = ok && hits == 1;
                }
                if (!ok) continue;
                map[set_minus(a, ra)[0]] = set_minus(b, rb)[0];
                if (!q.adjacent(ra, map)) continue;
                if (std::find(out.begin(), out.end(), map) == out.end()) out.push_back(std::move(map));
            }
        return out;
    }

    void record(Quotient& q, int phase_a_count, Key key)
    {
        const bool fresh = labeled_keys_.insert(std::move(key)).second;
        auto complex = q.complex();
        auto canonical = canonical_form(complex);
        auto& entry = out_.types[canonical];
        if (entry.canonical.empty()) {
            entry.canonical = std::move(canonical);
            entry.example = std::move(complex);
        }
        if (std::find(entry.phase_a_counts.begin(), entry.phase_a_counts.end(), phase_a_count) == entry.phase_a_counts.end())
            entry.phase_a_counts.push_back(phase_a_count);
        if (fresh) {
            ++entry.labeled;
            ++out_.labeled;
        }
    }

    const TreeOfSimplices& tree_;
    const CensusOptions& options_;
    std::atomic<std::uint64_t>& expansions_;
    std::atomic<bool>& exhausted_;
    std::vector<Simplex> boundary_;
    std::set<Key> labeled_keys_;
    TreeOutcome out_;
};

void merge(CensusResult& into, TreeOutcome&& part)
{
    into.labeled += part.labeled;
    for (auto& [canonical, t] : part.types) {
        auto& entry = into.types[canonical];
        if (entry.canonical.empty()) {
            entry = std::move(t);
            continue;
        }
        entry.labeled += t.labeled;
        for (int c : t.phase_a_counts)
            if (std::find(entry.phase_a_counts.begin(), entry.phase_a_counts.end(), c) == entry.phase_a_counts.end())
                entry.phase_a_counts.push_back(c);
    }
}

}  // namespace

CensusResult census(const CensusOptions& options, const std::function<void(const CensusProgress&)>& progress)
{
    if (options.d < 2 && options.predicate != CensusPredicate::trees)
        fail(ErrorKind::invalid_input, "gluing census needs d >= 2");
    if (options.max_phase_a < 0) fail(ErrorKind::invalid_input, "max phase a count must be nonnegative");
    CensusResult result;
    result.options = options;
    result.fuss_catalan_bound = fuss_catalan(options.d, options.n);

    const auto trees = enumerate_trees(options.d, options.n, options.budget);
    result.tree_types = trees.types.size();
    result.expansions = trees.expansions;
    result.complete = trees.complete;

    if (options.predicate == CensusPredicate::trees) {
        for (const auto& t : trees.types) {
            CensusType entry;
            entry.canonical = canonical_form(t.complex);
            entry.example = t.complex;
            entry.phase_a_counts = {0};
            result.types.emplace(entry.canonical, std::move(entry));
        }
        result.labeled = trees.labeled_processes;
        result.bounds_hold = BigInt(result.types.size()) <= result.fuss_catalan_bound;
        if (progress) progress({trees.types.size(), trees.types.size(), result.types.size(), 0, result.expansions});
        return result;
    }

    std::atomic<std::uint64_t> expansions{0};
    std::atomic<bool> exhausted{false};
    std::vector<TreeOutcome> parts(trees.types.size());
    std::vector<char> done(trees.types.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::size_t merged = 0;
    // merged in tree order so totals and type examples do not depend on scheduling
    auto flush = [&] {
        while (merged < parts.size() && done[merged]) {
            merge(result, std::move(parts[merged]));
            ++merged;
            if (progress) {
                std::uint64_t labeled = static_cast<std::uint64_t>(result.labeled);
                progress({merged, parts.size(), result.types.size(), labeled, expansions.load()});
            }
        }
    };
    auto worker = [&] {
        for (std::size_t i = next++; i < parts.size(); i = next++) {
            TreeCensus run(trees.types[i], options, expansions, exhausted);
            auto part = run.run();
            std::lock_guard<std::mutex> guard(lock);
            parts[i] = std::move(part);
            done[i] = 1;
            flush();
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(parts.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    result.expansions += expansions.load();
    if (exhausted) result.complete = false;

    for (int m = 0; m <= options.max_phase_a; ++m) {
        BoundCheck check;
        check.m = m;
        for (const auto& [canonical, t] : result.types)
            if (std::find(t.phase_a_counts.begin(), t.phase_a_counts.end(), m) != t.phase_a_counts.end()) ++check.count;
        check.bound = enumeration_bound(options.d, options.n, m).ceiling;
        check.holds = BigInt(check.count) <= check.bound;
        result.bounds_hold = result.bounds_hold && check.holds;
        result.bounds.push_back(std::move(check));
    }
    return result;
}

}  // namespace morselab::lc
