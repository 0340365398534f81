#include "morselab/certificate.hpp"

#include "morselab/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>

namespace morselab::cert {

using nlohmann::json;

std::string hash_text(std::uint64_t h)
{
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

json cell_json(const FacePoset& p, int c)
{
    if (p.is_simplicial()) return p.cell_labels(c);
    return c;
}

int cell_from_json(const FacePoset& p, const json& j)
{
    if (j.is_number_integer()) {
        const auto c = j.get<long long>();
        if (c < 0 || c >= static_cast<long long>(p.size()))
            fail(ErrorKind::invalid_input, "cell id " + std::to_string(c) + " out of range");
        return static_cast<int>(c);
    }
    if (j.is_array() && p.is_simplicial()) {
        std::vector<std::string> labels;
        for (const auto& l : j) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
        if (auto c = p.find_labels(labels)) return *c;
        fail(ErrorKind::invalid_input, "unknown cell " + j.dump());
    }
    fail(ErrorKind::invalid_input, "cannot read cell " + j.dump());
}

json cells_json(const FacePoset& p, const std::vector<int>& cells)
{
    json out = json::array();
    for (int c : cells) out.push_back(cell_json(p, c));
    return out;
}

std::vector<int> cells_from_json(const FacePoset& p, const json& j)
{
    std::vector<int> out;
    for (const auto& c : j) out.push_back(cell_from_json(p, c));
    return out;
}

}  // namespace

Certificate from_matching(const morse::MorseMatching& m, std::string claim)
{
    Certificate c;
    c.kind = "matching";
    c.poset_hash = m.host().structural_hash();
    c.pairs = m.pairs();
    c.critical = m.critical_cells();
    c.claim = std::move(claim);
    return c;
}

Certificate from_collapse(const morse::CollapseProblem& problem, const std::vector<morse::CellPair>& pairs,
                          std::string claim)
{
    Certificate c;
    c.kind = "collapse";
    c.poset_hash = problem.poset->structural_hash();
    c.pairs = pairs;
    c.min_dim = problem.min_dim;
    c.claim = std::move(claim);
    auto m = morse::matching_from_collapse(problem.poset, pairs);
    c.critical = m.critical_cells();
    for (std::size_t i = 0; i < problem.present.size(); ++i) {
        if (!problem.present[i]) c.removed.push_back(static_cast<int>(i));
        if (problem.protect[i]) c.protect.push_back(static_cast<int>(i));
    }
    return c;
}

std::string to_json(const FacePoset& p, const Certificate& c)
{
    json j;
    j["kind"] = c.kind;
    j["poset_hash"] = hash_text(c.poset_hash);
    if (!c.claim.empty()) j["claim"] = c.claim;
    json pairs = json::array();
    for (const auto& [a, b] : c.pairs) pairs.push_back(json::array({cell_json(p, a), cell_json(p, b)}));
    j["pairs"] = std::move(pairs);
    j["critical"] = cells_json(p, c.critical);
    if (c.kind == "collapse") {
        j["removed"] = cells_json(p, c.removed);
        j["protect"] = cells_json(p, c.protect);
        j["min_dim"] = c.min_dim;
    }
    return j.dump(2);
}

Certificate from_json(const FacePoset& p, const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto upto = text.substr(0, std::min(text.size(), e.byte));
        throw ParseError(static_cast<std::size_t>(std::count(upto.begin(), upto.end(), '\n')) + 1,
                         "malformed certificate JSON");
    }
    if (!j.is_object()) throw ParseError(1, "certificate must be a JSON object");
    Certificate c;
    try {
        c.kind = j.value("kind", std::string("matching"));
        const auto h = j.at("poset_hash").get<std::string>();
        c.poset_hash = std::stoull(h, nullptr, 16);
        c.claim = j.value("claim", std::string());
        for (const auto& pr : j.at("pairs")) {
            if (!pr.is_array() || pr.size() != 2) fail(ErrorKind::invalid_input, "pair must have two cells");
            c.pairs.emplace_back(cell_from_json(p, pr[0]), cell_from_json(p, pr[1]));
        }
        if (j.contains("critical")) c.critical = cells_from_json(p, j["critical"]);
        if (j.contains("removed")) c.removed = cells_from_json(p, j["removed"]);
        if (j.contains("protect")) c.protect = cells_from_json(p, j["protect"]);
        c.min_dim = j.value("min_dim", 0);
    } catch (const json::exception& e) {
        fail(ErrorKind::invalid_input, std::string("certificate field error: ") + e.what());
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::invalid_input, "poset_hash is not hexadecimal");
    }
    if (c.kind != "matching" && c.kind != "collapse") fail(ErrorKind::invalid_input, "unknown certificate kind " + c.kind);
    return c;
}

Validation validate(const PosetPtr& p, const Certificate& c)
{
    Validation v;
    if (c.poset_hash != p->structural_hash()) {
        v.message = "poset hash mismatch: certificate " + hash_text(c.poset_hash) + ", host " +
                    hash_text(p->structural_hash());
        return v;
    }
    try {
        v.matching = morse::MorseMatching::validate(p, c.pairs);
    } catch (const MatchingError& e) {
        v.message = e.what();
        return v;
    }
    auto expected = v.matching->critical_cells();
    auto listed = c.critical;
    std::sort(listed.begin(), listed.end());
    std::sort(expected.begin(), expected.end());
    if (c.kind == "matching" && listed != expected) {
        v.message = "listed critical cells differ from the unmatched cells";
        return v;
    }
    if (c.kind == "collapse") {
        morse::CollapseProblem problem;
        problem.poset = p;
        problem.present.assign(p->size(), 1);
        problem.protect.assign(p->size(), 0);
        for (int r : c.removed) problem.present[static_cast<std::size_t>(r)] = 0;
        for (int q : c.protect) problem.protect[static_cast<std::size_t>(q)] = 1;
        problem.min_dim = c.min_dim;
        try {
            problem.validate();
        } catch (const Error& e) {
            v.message = e.what();
            return v;
        }
        auto why = morse::replay_collapse(problem, c.pairs);
        if (!why.empty()) {
            v.message = "replay failed: " + why;
            return v;
        }
    }
    v.ok = true;
    v.message = "ok";
    return v;
}

Validation validate_json(const PosetPtr& p, const std::string& text)
{
    Certificate c;
    try {
        c = from_json(*p, text);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        // cells the host does not have mean the certificate belongs elsewhere
        if (e.kind() != ErrorKind::invalid_input) throw;
        return {false, e.what(), std::nullopt};
    }
    return validate(p, c);
}

}  // namespace morselab::cert
