#pragma once

#include "morselab/collapse.hpp"
#include "morselab/face_poset.hpp"
#include "morselab/matching.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace morselab::cert {

/**
 * Serializable witness for a matching or a collapse.
 *
 * Kinds: "matching" (any acyclic matching), "collapse" (an ordered sequence of
 * elementary collapses from `present` onto the cells below `min_dim` together
 * with the protected cells).  In JSON, cells of simplicial posets are written as
 * label arrays and other cells as integer ids.
 */
struct Certificate {
    std::string kind = "matching";
    std::uint64_t poset_hash = 0;
    std::vector<morse::CellPair> pairs;
    std::vector<int> critical;
    /// Collapse certificates: cells deleted before collapsing.
    std::vector<int> removed;
    /// Collapse certificates: cells that must never be removed.
    std::vector<int> protect;
    int min_dim = 0;
    /// Free-form claim attached by the producer, e.g. "endo-collapsible" or "cdepth>=2".
    std::string claim;
};

Certificate from_matching(const morse::MorseMatching& m, std::string claim = {});
Certificate from_collapse(const morse::CollapseProblem& problem, const std::vector<morse::CellPair>& pairs,
                          std::string claim = {});

std::string to_json(const FacePoset& p, const Certificate& c);
/// Raises ParseError on malformed JSON and invalid_input on unknown cells.
Certificate from_json(const FacePoset& p, const std::string& text);

struct Validation {
    bool ok = false;
    std::string message;
    std::optional<morse::MorseMatching> matching;
};

/// Re-checks a certificate against its host: structural hash, matching
/// acyclicity, listed critical cells and, for collapses, a full replay.
Validation validate(const PosetPtr& p, const Certificate& c);
/// Certificates naming cells the host lacks fail validation; malformed JSON raises ParseError.
Validation validate_json(const PosetPtr& p, const std::string& text);

std::string hash_text(std::uint64_t h);

}  // namespace morselab::cert
