#pragma once

#include "morselab/face_poset.hpp"
#include "morselab/matching.hpp"
#include "morselab/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace morselab::morse {

enum class Strategy { automatic, deterministic_lex, greedy_random, exhaustive };

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

enum class SearchStatus { found, impossible, indeterminate };

const char* to_string(SearchStatus s);

/**
 * Collapse goal on a face poset: starting from the `present` cells, remove free
 * pairs of unprotected cells until no unprotected cell of dimension >= min_dim
 * remains.  Protected cells must form a subcomplex of the present ones.
 */
struct CollapseProblem {
    PosetPtr poset;
    std::vector<char> present;
    std::vector<char> protect;
    int min_dim = 0;
    std::string description;

    /// All cells present, nothing protected.
    static CollapseProblem whole(PosetPtr poset, int min_dim);
    void validate() const;
    bool goal_met(const std::vector<char>& alive) const;
};

struct CollapseOptions {
    Strategy strategy = Strategy::automatic;
    /// Node expansions allowed per search branch (one restart, or one exhaustive run).
    std::uint64_t budget = 2'000'000;
    std::uint64_t seed = 0;
    int restarts = 8;
    /// Exhaustive search is tried automatically only below this many cells.
    std::size_t exhaustive_limit = 400;
    /// Keep full states next to their hashes and report hash collisions.
    bool audit = false;
};

/// Elementary collapses in execution order, each (free face, unique coface).
struct CollapseSequence {
    std::uint64_t poset_hash = 0;
    std::vector<CellPair> pairs;
    /// Cells left when the sequence ends.
    std::vector<int> remaining;
    std::string target;
};

struct CollapseResult {
    SearchStatus status = SearchStatus::indeterminate;
    CollapseSequence sequence;
    std::uint64_t expansions = 0;
    bool budget_exhausted = false;
    std::uint64_t hash_collisions = 0;
    std::string reason;
};

/// Single greedy run removing top-dimensional free pairs first; lexicographic
/// choice when `rng` is null.  Stops when stuck and reports the partial sequence.
CollapseResult greedy_collapse(const CollapseProblem& problem, std::uint64_t budget, Rng* rng = nullptr);

struct GreedyMorse {
    std::vector<CellPair> pairs;
    /// Cells declared critical when no free pair was available, in order.
    std::vector<int> punched;
};

/// Greedy Morse matching: like greedy_collapse, but when stuck an unprotected
/// top cell is declared critical and the collapse continues.
GreedyMorse greedy_morse(const CollapseProblem& problem, Rng* rng = nullptr);

/// greedy_morse on the whole poset.
MorseMatching greedy_morse_matching(const PosetPtr& poset, Rng* rng = nullptr);

CollapseResult collapse_search(const CollapseProblem& problem, const CollapseOptions& options = {});

/// Replays a sequence; returns an empty string when every step is a legal
/// elementary collapse of unprotected cells and the goal is reached.
std::string replay_collapse(const CollapseProblem& problem, const std::vector<CellPair>& pairs,
                            std::vector<char>* final_state = nullptr);

/// Matching made of the collapse pairs (every other cell critical).
MorseMatching matching_from_collapse(const PosetPtr& poset, const std::vector<CellPair>& pairs);

struct CollapsibilityResult {
    SearchStatus status = SearchStatus::indeterminate;
    CollapseResult search;
    std::string reason;
};

/// Collapse onto a single vertex.
CollapsibilityResult is_collapsible(const PosetPtr& poset, const CollapseOptions& options = {});

}  // namespace morselab::morse
