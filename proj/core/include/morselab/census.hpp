#pragma once

#include "morselab/complex.hpp"
#include "morselab/lc.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace morselab::lc {

enum class CensusPredicate {
    /// Trees of simplices themselves.
    trees,
    /// Every quotient reached by a gluing process (boundary allowed).
    all,
    /// Quotients whose boundary has been glued away completely.
    closed,
};

const char* to_string(CensusPredicate p);
CensusPredicate parse_census_predicate(const std::string& text);

struct CensusOptions {
    int d = 2;
    int n = 1;
    CensusPredicate predicate = CensusPredicate::closed;
    /// Largest number of phase a gluings tried.
    int max_phase_a = 0;
    /// Cap on gluing steps explored (0 = unlimited).
    std::uint64_t budget = 0;
    unsigned threads = 1;
};

struct CensusType {
    std::string canonical;
    SimplicialComplex example;
    /// Phase a counts with which the type was reached.
    std::vector<int> phase_a_counts;
    /// Distinct labelled outcomes of this type.
    std::uint64_t labeled = 0;
};

struct CensusProgress {
    std::size_t trees_done = 0;
    std::size_t trees_total = 0;
    std::size_t types = 0;
    std::uint64_t labeled = 0;
    std::uint64_t expansions = 0;
};

struct BoundCheck {
    int m = 0;
    std::size_t count = 0;
    BigInt bound;
    bool holds = true;
};

struct CensusResult {
    CensusOptions options;
    std::map<std::string, CensusType> types;
    /// Distinct labelled outcomes summed over tree types; for the trees predicate,
    /// the number of labelled growth processes.
    BigInt labeled;
    std::size_t tree_types = 0;
    std::uint64_t expansions = 0;
    bool complete = true;
    /// Type counts against C_d(N) (trees) or the enumeration bound per phase a count.
    BigInt fuss_catalan_bound;
    std::vector<BoundCheck> bounds;
    bool bounds_hold = true;
};

/// Exhaustive census: every tree type, every set of up to max_phase_a phase a gluings
/// with each of the d! bijections, then every sequence of adjacent phase b gluings.
/// Outcomes are deduplicated by canonical form.  Strict simpliciality is enforced.
CensusResult census(const CensusOptions& options, const std::function<void(const CensusProgress&)>& progress = {});

}  // namespace morselab::lc
