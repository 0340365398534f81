#include "morselab/collapse.hpp"

#include "morselab/error.hpp"
#include "morselab/rng.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace morselab::morse {

const char* to_string(Strategy s)
{
    switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::deterministic_lex: return "lex";
    case Strategy::greedy_random: return "random";
    case Strategy::exhaustive: return "exhaustive";
    }
    return "?";
}

Strategy parse_strategy(const std::string& text)
{
    if (text == "auto") return Strategy::automatic;
    if (text == "lex") return Strategy::deterministic_lex;
    if (text == "random") return Strategy::greedy_random;
    if (text == "exhaustive") return Strategy::exhaustive;
    fail(ErrorKind::invalid_input, "unknown strategy '" + text + "'", "use auto, lex, random or exhaustive");
}

const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::impossible: return "impossible";
    case SearchStatus::indeterminate: return "indeterminate";
    }
    return "?";
}

CollapseProblem CollapseProblem::whole(PosetPtr poset, int min_dim)
{
    CollapseProblem p;
    p.present.assign(poset->size(), 1);
    p.protect.assign(poset->size(), 0);
    p.poset = std::move(poset);
    p.min_dim = min_dim;
    return p;
}

void CollapseProblem::validate() const
{
    require(static_cast<bool>(poset), ErrorKind::invalid_input, "collapse problem needs a poset");
    require(present.size() == poset->size() && protect.size() == poset->size(), ErrorKind::invalid_input,
            "collapse masks do not match the poset size");
    for (std::size_t c = 0; c < poset->size(); ++c) {
        if (!present[c]) continue;
        for (int f : poset->faces(static_cast<int>(c)))
            if (!present[static_cast<std::size_t>(f)])
                fail(ErrorKind::invalid_input, "present cells are not closed under faces at " + poset->cell_name(f));
        if (protect[c])
            for (int f : poset->faces(static_cast<int>(c)))
                if (!protect[static_cast<std::size_t>(f)])
                    fail(ErrorKind::invalid_input, "protected cells must form a subcomplex; missing face " + poset->cell_name(f));
    }
    for (std::size_t c = 0; c < poset->size(); ++c)
        if (protect[c] && !present[c]) fail(ErrorKind::invalid_input, "protected cell " + poset->cell_name(static_cast<int>(c)) + " is not present");
}

bool CollapseProblem::goal_met(const std::vector<char>& alive) const
{
    for (std::size_t c = 0; c < alive.size(); ++c)
        if (alive[c] && !protect[c] && poset->dim(static_cast<int>(c)) >= min_dim) return false;
    return true;
}

namespace {

struct BudgetExceeded {};

class State {
public:
    State(const CollapseProblem& problem, std::uint64_t seed)
        : p_(*problem.poset), protect_(problem.protect), alive_(problem.present),
          alive_cofaces_(p_.size(), 0), unprotected_(static_cast<std::size_t>(std::max(p_.max_dim(), 0) + 2), 0),
          min_dim_(problem.min_dim)
    {
        Rng keys(seed ^ 0x5bd1e995ULL);
        zobrist_.resize(p_.size());
        for (auto& z : zobrist_) z = keys();
        for (std::size_t c = 0; c < p_.size(); ++c) {
            if (!alive_[c]) continue;
            hash_ ^= zobrist_[c];
            for (int f : p_.faces(static_cast<int>(c))) ++alive_cofaces_[static_cast<std::size_t>(f)];
            if (!protect_[c]) ++unprotected_[static_cast<std::size_t>(p_.dim(static_cast<int>(c)))];
        }
    }

    const FacePoset& poset() const { return p_; }
    const std::vector<char>& alive() const { return alive_; }
    std::uint64_t hash() const { return hash_; }

    /// Highest dimension holding an unprotected cell, or -1.
    int top() const
    {
        for (int k = static_cast<int>(unprotected_.size()) - 1; k >= 0; --k)
            if (unprotected_[static_cast<std::size_t>(k)] > 0) return k;
        return -1;
    }
    bool done() const { return top() < min_dim_; }

    bool is_free(int sigma) const
    {
        const auto s = static_cast<std::size_t>(sigma);
        return alive_[s] && !protect_[s] && alive_cofaces_[s] == 1;
    }

    int coface_of(int sigma) const
    {
        for (int t : p_.cofaces(sigma))
            if (alive_[static_cast<std::size_t>(t)]) return t;
        return -1;
    }

    template <typename OnFree>
    void remove(int sigma, int tau, OnFree&& on_free)
    {
        kill(tau, on_free);
        kill(sigma, on_free);
    }

    /// Removes a single cell without pairing it.
    template <typename OnFree>
    void drop(int c, OnFree&& on_free)
    {
        kill(c, on_free);
    }

    void restore(int sigma, int tau)
    {
        revive(sigma);
        revive(tau);
    }

private:
    template <typename OnFree>
    void kill(int c, OnFree& on_free)
    {
        const auto s = static_cast<std::size_t>(c);
        alive_[s] = 0;
        hash_ ^= zobrist_[s];
        --unprotected_[static_cast<std::size_t>(p_.dim(c))];
        for (int f : p_.faces(c))
            if (--alive_cofaces_[static_cast<std::size_t>(f)] == 1) on_free(f);
    }

    void revive(int c)
    {
        const auto s = static_cast<std::size_t>(c);
        alive_[s] = 1;
        hash_ ^= zobrist_[s];
        ++unprotected_[static_cast<std::size_t>(p_.dim(c))];
        for (int f : p_.faces(c)) ++alive_cofaces_[static_cast<std::size_t>(f)];
    }

    const FacePoset& p_;
    const std::vector<char>& protect_;
    std::vector<char> alive_;
    std::vector<int> alive_cofaces_;
    std::vector<long long> unprotected_;
    std::vector<std::uint64_t> zobrist_;
    std::uint64_t hash_ = 0;
    int min_dim_;
};

std::vector<int> remaining_cells(const std::vector<char>& alive)
{
    std::vector<int> out;
    for (std::size_t c = 0; c < alive.size(); ++c)
        if (alive[c]) out.push_back(static_cast<int>(c));
    return out;
}

/// One greedy run; `rng` null means lexicographic choice.
CollapseResult greedy(const CollapseProblem& problem, Rng* rng, std::uint64_t budget, std::vector<int>* punched = nullptr)
{
    CollapseResult r;
    State state(problem, 0);
    const FacePoset& p = state.poset();
    const int levels = std::max(p.max_dim(), 0) + 1;
    std::vector<std::priority_queue<int, std::vector<int>, std::greater<>>> lex(static_cast<std::size_t>(levels));
    std::vector<std::vector<int>> pool(static_cast<std::size_t>(levels));
    auto push = [&](int c) {
        if (rng) pool[static_cast<std::size_t>(p.dim(c))].push_back(c);
        else lex[static_cast<std::size_t>(p.dim(c))].push(c);
    };
    for (std::size_t c = 0; c < p.size(); ++c)
        if (state.is_free(static_cast<int>(c))) push(static_cast<int>(c));

    std::vector<std::size_t> cursor(static_cast<std::size_t>(levels), 0);
    auto punch = [&](int top) {
        // declare an unprotected top cell critical and keep going
        const auto& cells = p.cells_of_dim(top);
        std::vector<int> alive_top;
        if (rng) {
            for (int c : cells)
                if (state.alive()[static_cast<std::size_t>(c)] && !problem.protect[static_cast<std::size_t>(c)]) alive_top.push_back(c);
            const int c = alive_top[static_cast<std::size_t>(rng->below(alive_top.size()))];
            state.drop(c, push);
            punched->push_back(c);
            return;
        }
        auto& i = cursor[static_cast<std::size_t>(top)];
        while (!(state.alive()[static_cast<std::size_t>(cells[i])] && !problem.protect[static_cast<std::size_t>(cells[i])])) ++i;
        state.drop(cells[i], push);
        punched->push_back(cells[i]);
    };

    while (!state.done()) {
        const int top = state.top();
        if (top == 0) {
            if (!punched) break;
            punch(0);
            continue;
        }
        const auto level = static_cast<std::size_t>(top - 1);
        int sigma = -1;
        if (rng) {
            auto& bag = pool[level];
            while (!bag.empty()) {
                const std::size_t i = static_cast<std::size_t>(rng->below(bag.size()));
                const int cand = bag[i];
                bag[i] = bag.back();
                bag.pop_back();
                if (state.is_free(cand)) {
                    sigma = cand;
                    break;
                }
            }
        } else {
            auto& heap = lex[level];
            while (!heap.empty()) {
                const int cand = heap.top();
                heap.pop();
                if (state.is_free(cand)) {
                    sigma = cand;
                    break;
                }
            }
        }
        if (sigma < 0) {
            if (!punched) break;
            punch(top);
            continue;
        }
        if (++r.expansions > budget) {
            r.budget_exhausted = true;
            break;
        }
        const int tau = state.coface_of(sigma);
        state.remove(sigma, tau, push);
        r.sequence.pairs.emplace_back(sigma, tau);
    }
    r.status = state.done() ? SearchStatus::found : SearchStatus::indeterminate;
    r.sequence.remaining = remaining_cells(state.alive());
    return r;
}

class Exhaustive {
public:
    Exhaustive(const CollapseProblem& problem, const CollapseOptions& options)
        : state_(problem, options.seed), budget_(options.budget), audit_(options.audit)
    {
    }

    CollapseResult run()
    {
        CollapseResult r;
        bool ok = false;
        try {
            ok = dfs();
        } catch (const BudgetExceeded&) {
            r.budget_exhausted = true;
        }
        r.expansions = expansions_;
        r.hash_collisions = collisions_;
        if (ok) {
            r.status = SearchStatus::found;
            r.sequence.pairs = path_;
            // replay the winning path to report the remaining cells
            r.sequence.remaining = remaining_;
        } else if (!r.budget_exhausted && collisions_ == 0) {
            r.status = SearchStatus::impossible;
        } else {
            r.status = SearchStatus::indeterminate;
        }
        return r;
    }

private:
    bool seen(std::uint64_t h)
    {
        auto it = visited_.find(h);
        if (it == visited_.end()) return false;
        if (audit_) {
            auto& states = audit_states_[h];
            for (const auto& s : states)
                if (s == state_.alive()) return true;
            ++collisions_;
            return false;
        }
        return true;
    }

    void remember(std::uint64_t h)
    {
        visited_.insert(h);
        if (audit_) audit_states_[h].push_back(state_.alive());
    }

    bool dfs()
    {
        if (state_.done()) {
            remaining_ = remaining_cells(state_.alive());
            return true;
        }
        if (++expansions_ > budget_) throw BudgetExceeded{};
        const std::uint64_t h = state_.hash();
        if (seen(h)) return false;
        const int top = state_.top();
        const FacePoset& p = state_.poset();
        std::vector<std::pair<int, int>> moves;
        if (top >= 1)
            for (int sigma : p.cells_of_dim(top - 1))
                if (state_.is_free(sigma)) moves.emplace_back(sigma, state_.coface_of(sigma));
        auto ignore = [](int) {};
        for (const auto& [sigma, tau] : moves) {
            state_.remove(sigma, tau, ignore);
            path_.emplace_back(sigma, tau);
            if (dfs()) return true;
            path_.pop_back();
            state_.restore(sigma, tau);
        }
        remember(h);
        return false;
    }

    State state_;
    std::uint64_t budget_;
    bool audit_;
    std::uint64_t expansions_ = 0;
    std::uint64_t collisions_ = 0;
    std::unordered_set<std::uint64_t> visited_;
    std::unordered_map<std::uint64_t, std::vector<std::vector<char>>> audit_states_;
    std::vector<CellPair> path_;
    std::vector<int> remaining_;
};

bool root_is_stuck(const CollapseProblem& problem)
{
    State state(problem, 0);
    if (state.done()) return false;
    const int top = state.top();
    if (top == 0) return true;
    for (int sigma : problem.poset->cells_of_dim(top - 1))
        if (state.is_free(sigma)) return false;
    return true;
}

long long euler_of(const FacePoset& p, const std::vector<char>& mask)
{
    long long chi = 0;
    for (std::size_t c = 0; c < p.size(); ++c)
        if (mask[c]) chi += p.dim(static_cast<int>(c)) % 2 == 0 ? 1 : -1;
    return chi;
}

}  // namespace

CollapseResult greedy_collapse(const CollapseProblem& problem, std::uint64_t budget, Rng* rng)
{
    problem.validate();
    auto r = greedy(problem, rng, budget);
    r.sequence.poset_hash = problem.poset->structural_hash();
    r.sequence.target = problem.description;
    return r;
}

GreedyMorse greedy_morse(const CollapseProblem& problem, Rng* rng)
{
    problem.validate();
    GreedyMorse out;
    auto r = greedy(problem, rng, std::numeric_limits<std::uint64_t>::max(), &out.punched);
    out.pairs = std::move(r.sequence.pairs);
    return out;
}

MorseMatching greedy_morse_matching(const PosetPtr& poset, Rng* rng)
{
    auto problem = CollapseProblem::whole(poset, 0);
    return MorseMatching::validate(poset, greedy_morse(problem, rng).pairs);
}

CollapseResult collapse_search(const CollapseProblem& problem, const CollapseOptions& options)
{
    problem.validate();
    const FacePoset& p = *problem.poset;
    auto finish = [&](CollapseResult r) {
        r.sequence.poset_hash = p.structural_hash();
        r.sequence.target = problem.description;
        return r;
    };

    if (problem.goal_met(problem.present)) {
        CollapseResult r;
        r.status = SearchStatus::found;
        r.sequence.remaining = remaining_cells(problem.present);
        return finish(std::move(r));
    }
    if (problem.min_dim <= 0 && euler_of(p, problem.present) != euler_of(p, problem.protect)) {
        CollapseResult r;
        r.status = SearchStatus::impossible;
        r.reason = "euler characteristic differs from the target";
        return finish(std::move(r));
    }
    if (root_is_stuck(problem)) {
        CollapseResult r;
        r.status = SearchStatus::impossible;
        r.reason = "no free face in the top dimension";
        return finish(std::move(r));
    }

    std::uint64_t spent = 0;
    bool exhausted = false;
    auto note = [&](const CollapseResult& r) {
        spent += r.expansions;
        exhausted = exhausted || r.budget_exhausted;
    };

    const Strategy s = options.strategy;
    if (s == Strategy::automatic || s == Strategy::deterministic_lex) {
        auto r = greedy(problem, nullptr, options.budget);
        note(r);
        if (r.status == SearchStatus::found || s == Strategy::deterministic_lex) {
            r.expansions = spent;
            return finish(std::move(r));
        }
    }
    if (s == Strategy::automatic || s == Strategy::greedy_random) {
        Rng base(options.seed);
        for (int i = 0; i < std::max(options.restarts, 1); ++i) {
            Rng rng = base.split(static_cast<std::uint64_t>(i));
            auto r = greedy(problem, &rng, options.budget);
            note(r);
            if (r.status == SearchStatus::found) {
                r.expansions = spent;
                return finish(std::move(r));
            }
        }
        if (s == Strategy::greedy_random) {
            CollapseResult r;
            r.status = SearchStatus::indeterminate;
            r.expansions = spent;
            r.budget_exhausted = exhausted;
            r.reason = "random restarts found no collapse";
            return finish(std::move(r));
        }
    }
    if (s == Strategy::exhaustive || p.size() <= options.exhaustive_limit) {
        auto r = Exhaustive(problem, options).run();
        note(r);
        r.expansions = spent;
        if (r.status == SearchStatus::impossible) r.reason = "exhaustive search completed without success";
        else if (r.budget_exhausted) r.reason = "budget exhausted";
        return finish(std::move(r));
    }
    CollapseResult r;
    r.status = SearchStatus::indeterminate;
    r.expansions = spent;
    r.budget_exhausted = exhausted;
    r.reason = "greedy searches failed; instance too large for exhaustive search";
    return finish(std::move(r));
}

std::string replay_collapse(const CollapseProblem& problem, const std::vector<CellPair>& pairs,
                            std::vector<char>* final_state)
{
    problem.validate();
    const FacePoset& p = *problem.poset;
    std::vector<char> alive = problem.present;
    std::vector<int> cofaces(p.size(), 0);
    for (std::size_t c = 0; c < p.size(); ++c)
        if (alive[c])
            for (int f : p.faces(static_cast<int>(c))) ++cofaces[static_cast<std::size_t>(f)];
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [sigma, tau] = pairs[i];
        const std::string step = "step " + std::to_string(i) + ": ";
        if (sigma < 0 || tau < 0 || sigma >= static_cast<int>(p.size()) || tau >= static_cast<int>(p.size()))
            return step + "unknown cell";
        const auto s = static_cast<std::size_t>(sigma), t = static_cast<std::size_t>(tau);
        if (!alive[s] || !alive[t]) return step + "cell already removed";
        if (problem.protect[s] || problem.protect[t]) return step + "removes a protected cell";
        const auto& f = p.faces(tau);
        if (std::find(f.begin(), f.end(), sigma) == f.end()) return step + "not a cover relation";
        if (cofaces[s] != 1) return step + p.cell_name(sigma) + " is not a free face";
        for (int c : {tau, sigma}) {
            alive[static_cast<std::size_t>(c)] = 0;
            for (int g : p.faces(c)) --cofaces[static_cast<std::size_t>(g)];
        }
    }
    if (!problem.goal_met(alive)) return "sequence ends before the target is reached";
    if (final_state) *final_state = alive;
    return {};
}

MorseMatching matching_from_collapse(const PosetPtr& poset, const std::vector<CellPair>& pairs)
{
    return MorseMatching::validate(poset, pairs);
}

CollapsibilityResult is_collapsible(const PosetPtr& poset, const CollapseOptions& options)
{
    CollapsibilityResult out;
    if (poset->size() == 0) {
        out.status = SearchStatus::impossible;
        out.reason = "empty complex";
        return out;
    }
    auto problem = CollapseProblem::whole(poset, 1);
    problem.description = "a single vertex";
    if (poset->euler_characteristic() != 1) {
        out.status = SearchStatus::impossible;
        out.reason = "euler characteristic is not 1";
        out.search.status = SearchStatus::impossible;
        return out;
    }
    out.search = collapse_search(problem, options);
    out.status = out.search.status;
    out.reason = out.search.reason;
    return out;
}

}  // namespace morselab::morse
