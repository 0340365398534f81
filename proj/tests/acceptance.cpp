// Acceptance run: one line per criterion, nonzero exit when any criterion fails.

#include "morselab/calculus.hpp"
#include "morselab/canonical.hpp"
#include "morselab/census.hpp"
#include "morselab/certificate.hpp"
#include "morselab/collapse.hpp"
#include "morselab/constructions.hpp"
#include "morselab/error.hpp"
#include "morselab/generators.hpp"
#include "morselab/homology.hpp"
#include "morselab/io.hpp"
#include "morselab/lc.hpp"
#include "morselab/morse.hpp"
#include "morselab/recognition.hpp"
#include "morselab/rng.hpp"
#include "morselab/subdivide.hpp"

#include "oracles.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace morselab;
using morse::MorseMatching;
using morse::SearchStatus;

namespace {

// Wall-clock limits.
constexpr double inequality_corpus_seconds = 60.0;
constexpr double endo_sphere_seconds = 10.0;
constexpr double pile_obstruction_seconds = 1.0;
constexpr double lutz_seconds = 600.0;

// Corpus sizes.
constexpr int euler_matchings = 1000;
constexpr std::size_t inequality_corpus_min = 50;
constexpr std::size_t calculus_instances_min = 20;
constexpr int lc_round_trips = 100;
constexpr std::size_t hierarchy_corpus_min = 200;

enum class Outcome { pass, fail, skipped };

struct Verdict {
    Outcome outcome = Outcome::fail;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Tally {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && first_failure_.empty()) first_failure_ = what;
    }
    bool ok() const { return first_failure_.empty(); }
    Verdict verdict(const std::string& summary) const
    {
        if (ok()) return {Outcome::pass, summary};
        return {Outcome::fail, summary + "; first failure: " + first_failure_};
    }
    std::size_t checks() const { return checks_; }

private:
    std::size_t checks_ = 0;
    std::string first_failure_;
};

std::string show(const std::vector<long long>& v)
{
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ")";
    return s.str();
}

std::vector<long long> counts(const MorseMatching& f, bool interior)
{
    return oracle::critical_counts(f.host(), f.pairs(), interior);
}

std::vector<long long> reversed(std::vector<long long> v)
{
    std::reverse(v.begin(), v.end());
    return v;
}

MorseMatching pinned(const SimplicialComplex& k, std::size_t facet = 0)
{
    const auto p = share(face_poset(k));
    const auto& tops = p->cells_of_dim(p->max_dim());
    return calculus::pin_critical(p, tops[facet % tops.size()]);
}

const SimplicialComplex& pile()
{
    static const auto k = pile_of_cubes(3, 3, 3, {{1, 1, 1}}).triangulation;
    return k;
}

/// Replays a depth certificate with the oracle: M - Δ must collapse, keeping ∂M, below dimension d-k+1.
std::string replay_depth(const PosetPtr& p, const morse::DepthCertificate& c)
{
    std::vector<char> present(p->size(), 1);
    if (c.delta >= 0) present[static_cast<std::size_t>(c.delta)] = 0;
    std::vector<char> protect(p->size(), 0);
    if (p->has_boundary_mask()) protect = p->boundary_mask();
    return oracle::replay_collapse(*p, present, protect, c.dim - c.k + 1, c.sequence.pairs);
}

/// Random 2- and 3-complexes: spheres, balls, surfaces and facet subsets of them.
SimplicialComplex random_complex(std::uint64_t seed)
{
    Rng rng(seed);
    const int d = 2 + static_cast<int>(rng.below(2));
    SimplicialComplex base;
    switch (rng.below(4)) {
    case 0: base = stacked_sphere(d, 1 + static_cast<int>(rng.below(8)), seed); break;
    case 1: base = stacked_ball(d, 1 + static_cast<int>(rng.below(8)), seed); break;
    case 2: base = random_stellar(d == 2 ? torus_seven() : boundary_of_simplex(3), 1 + static_cast<int>(rng.below(4)), seed); break;
    default: base = random_stellar(d == 2 ? rp2_six() : simplex_complex(3), 1 + static_cast<int>(rng.below(4)), seed); break;
    }
    if (rng.below(3) != 0) return base;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < base.facet_count(); ++i)
        if (rng.below(4) != 0) keep.push_back(i);
    if (keep.empty()) keep.push_back(0);
    return subcomplex_of_facets(base, keep);
}

Verdict euler_identity()
{
    Tally t;
    for (int i = 0; i < euler_matchings; ++i) {
        const auto seed = static_cast<std::uint64_t>(i);
        const auto k = random_complex(seed);
        const auto p = share(face_poset(k));
        Rng rng(seed ^ 0x5eedULL);
        const auto f = morse::greedy_morse_matching(p, &rng);
        t.expect(oracle::is_acyclic_matching(*p, f.pairs()), "matching " + std::to_string(i) + " not acyclic");
        long long alternating = 0;
        const auto c = counts(f, false);
        for (std::size_t j = 0; j < c.size(); ++j) alternating += j % 2 ? -c[j] : c[j];
        t.expect(alternating == oracle::euler_characteristic(k),
                 "matching " + std::to_string(i) + ": sum " + std::to_string(alternating));
    }
    return t.verdict(std::to_string(euler_matchings) + " matchings, exact equality");
}

/// Balls and manifolds with nonempty boundary.
std::vector<SimplicialComplex> bounded_manifolds()
{
    std::vector<SimplicialComplex> out{simplex_complex(2),
                                       simplex_complex(3),
                                       simplex_complex(4),
                                       annulus(),
                                       cone(boundary_of_simplex(2), "v"),
                                       pile(),
                                       pile_of_cubes(2, 2, 2).triangulation,
                                       pile_of_cubes(3, 3, 1).triangulation,
                                       removal(torus_seven(), torus_seven().facets().front()),
                                       removal(rp2_six(), rp2_six().facets().front())};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        out.push_back(stacked_ball(2, 3 + static_cast<int>(seed), seed));
        out.push_back(stacked_ball(3, 2 + static_cast<int>(seed), seed));
        out.push_back(random_stellar(simplex_complex(3), 2 + static_cast<int>(seed % 5), seed));
    }
    return out;
}

Verdict relative_inequalities()
{
    const auto start = Clock::now();
    Tally t;
    const auto corpus = bounded_manifolds();
    std::size_t matchings = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& m = corpus[i];
        const int d = m.dim();
        const auto b = oracle::betti(m);
        const auto p = share(face_poset(m));
        const auto& tops = p->cells_of_dim(d);
        for (std::size_t j = 0; j < std::min<std::size_t>(3, tops.size()); ++j) {
            const auto f = morse::boundary_critical_morse(p, tops[(j * 7 + i) % tops.size()]);
            ++matchings;
            t.expect(oracle::is_acyclic_matching(*p, f.pairs()), "complex " + std::to_string(i) + " matching cyclic");
            for (const auto& [x, y] : f.pairs())
                t.expect(!p->on_boundary(x) && !p->on_boundary(y), "complex " + std::to_string(i) + " pair on boundary");
            const auto c_int = counts(f, true);
            for (int k = 0; k <= d; ++k)
                t.expect(b[static_cast<std::size_t>(d - k)] <= c_int[static_cast<std::size_t>(k)],
                         "complex " + std::to_string(i) + ": b_" + std::to_string(d - k) + " > c_int_" + std::to_string(k));
            t.expect(morse::verify_morse_inequalities(m, f, true).all_hold,
                     "complex " + std::to_string(i) + " library report disagrees");
        }
    }
    const double elapsed = seconds_since(start);
    t.expect(corpus.size() >= inequality_corpus_min, "corpus too small");
    t.expect(elapsed < inequality_corpus_seconds, "took " + std::to_string(elapsed) + " s");
    std::ostringstream s;
    s << corpus.size() << " complexes, " << matchings << " matchings, 0 violations allowed, " << elapsed << " s";
    return t.verdict(s.str());
}

Verdict endo_certificates()
{
    Tally t;
    std::ostringstream s;
    const std::vector<std::pair<std::string, SimplicialComplex>> spheres{
        {"bd D3", boundary_of_simplex(2)},
        {"bd D4", boundary_of_simplex(3)},
        {"bd D5", boundary_of_simplex(4)},
        {"sd bd D3", barycentric_subdivision(boundary_of_simplex(2))}};
    for (const auto& [name, m] : spheres) {
        const auto start = Clock::now();
        const auto p = share(face_poset(m));
        const auto res = morse::is_endo_collapsible(p, morse::topology_info(m));
        const double elapsed = seconds_since(start);
        s << name << " " << elapsed << " s; ";
        t.expect(res.status == SearchStatus::found, name + " not certified");
        t.expect(elapsed < endo_sphere_seconds, name + " took " + std::to_string(elapsed) + " s");
        if (res.status != SearchStatus::found) continue;
        t.expect(replay_depth(p, res.certificate).empty(), name + " replay failed");
        const auto problem = morse::depth_problem(p, res.certificate.delta, res.certificate.k);
        const auto c = cert::from_collapse(problem, res.certificate.sequence.pairs, "endo-collapsible");
        t.expect(cert::validate_json(p, cert::to_json(*p, c)).ok, name + " certificate rejected");
    }

    const auto start = Clock::now();
    const auto pp = share(face_poset(pile()));
    const auto obstructed = morse::is_endo_collapsible(pp, morse::topology_info(pile()));
    const double elapsed = seconds_since(start);
    s << "pile " << elapsed << " s";
    t.expect(obstructed.status == SearchStatus::impossible && obstructed.obstructed, "pile not obstructed");
    t.expect(elapsed < pile_obstruction_seconds, "pile obstruction took " + std::to_string(elapsed) + " s");
    const auto f = morse::boundary_critical_morse(pp, pp->cells_of_dim(3).front());
    t.expect(counts(f, true)[1] >= 1, "pile matching has c_int_1 = 0");
    return t.verdict(s.str());
}

Verdict pile_collapse_depth()
{
    Tally t;
    const auto p = share(face_poset(pile()));
    const auto res = morse::collapse_depth(p, morse::topology_info(pile()));
    t.expect(res.k == 2, "cdepth " + std::to_string(res.k));
    t.expect(res.status == morse::DepthStatus::exact_by_obstruction, std::string("status ") + morse::to_string(res.status));
    t.expect(res.upper.bound == 2, "upper bound " + std::to_string(res.upper.bound));
    t.expect(replay_depth(p, res).empty(), "witness replay failed");
    if (res.witness) {
        const auto c_int = counts(*res.witness, true);
        t.expect(c_int[3] == 1 && c_int[2] == 0, "witness counts " + show(c_int));
    } else {
        t.expect(false, "no witness matching");
    }
    // at depth 3 the relative inequality b_2 <= c_int_1 forces an interior critical edge
    t.expect(oracle::betti(pile())[2] >= 1, "pile has no H_2");
    return t.verdict("cdepth " + std::to_string(res.k) + ", " + morse::to_string(res.status) + ", upper bound " +
                     std::to_string(res.upper.bound) + " (" + res.upper.reason + ")");
}

Verdict calculus_identities()
{
    Tally t;
    std::size_t n_dual = 0, n_double = 0, n_patch = 0, n_cone = 0, n_sub = 0;

    // dualization, both modes
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto m = seed % 2 ? stacked_ball(3, 2 + static_cast<int>(seed), seed)
                                : random_stellar(simplex_complex(seed % 4 ? 3 : 2), 3, seed);
        const auto f = pinned(m, seed);
        const auto dual = calculus::dual_block_poset(f.host_ptr());
        const auto one = calculus::dualize_matching(dual, f, calculus::DualMode::bc_to_plain);
        t.expect(oracle::is_acyclic_matching(one.host(), one.pairs()), "dual mode 1 cyclic");
        t.expect(counts(one, false) == reversed(counts(f, true)), "dual mode 1 counts " + show(counts(one, false)));
        ++n_dual;
        Rng rng(seed);
        const auto g = morse::greedy_morse_matching(f.host_ptr(), &rng);
        const auto two = calculus::dualize_matching(dual, g, calculus::DualMode::plain_to_bc);
        t.expect(oracle::is_acyclic_matching(two.host(), two.pairs()), "dual mode 2 cyclic");
        t.expect(two.boundary_critical(), "dual mode 2 not boundary-critical");
        t.expect(counts(two, true) == reversed(counts(g, false)), "dual mode 2 counts " + show(counts(two, true)));
        ++n_dual;
    }
    // double dualization on closed manifolds
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto m = seed % 4 == 0 ? torus_seven()
                       : seed % 4 == 1 ? rp2_six()
                                       : stacked_sphere(2 + static_cast<int>(seed % 2), 2 + static_cast<int>(seed), seed);
        const auto p = share(face_poset(m));
        Rng rng(seed);
        const auto f = morse::greedy_morse_matching(p, &rng);
        const auto first = calculus::dual_block_poset(p);
        const auto f1 = calculus::dualize_matching(first, f, calculus::DualMode::bc_to_plain);
        const auto second = calculus::dual_block_poset(f1.host_ptr());
        const auto f2 = calculus::dualize_matching(second, f1, calculus::DualMode::bc_to_plain);
        t.expect(counts(f1, false) == reversed(counts(f, false)), "closed dual counts " + show(counts(f1, false)));
        t.expect(counts(f2, false) == counts(f, false), "double dual counts " + show(counts(f2, false)));
        t.expect(f2.host().counts_by_dim() == p->counts_by_dim(), "double dual has another f-vector");
        ++n_double;
    }

    // patching two cones over a disk along a triangle of the disk
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const int d = seed % 3 == 2 ? 2 : 3;
        const auto disk = stacked_ball(d - 1, 1 + static_cast<int>(seed % 6), seed);
        const auto m1 = cone(disk, "a"), m2 = cone(disk, "b");
        const auto hp = share(face_poset(disk));
        const auto& ridges = hp->cells_of_dim(d - 1);
        const int sigma = ridges[(seed * 5) % ridges.size()];
        const auto labels = hp->cell_labels(sigma);
        auto with_a = labels, with_b = labels;
        with_a.push_back("a");
        with_b.push_back("b");
        const auto p1 = share(face_poset(m1)), p2 = share(face_poset(m2));
        const auto f = calculus::pin_critical(p1, *p1->find_labels(with_a));
        const auto g = calculus::pin_critical(p2, *p2->find_labels(with_b));
        const auto h = calculus::pin_critical(hp, sigma);
        const auto u = calculus::patch_morse(m1, m2, f, g, h, labels);
        t.expect(oracle::is_acyclic_matching(u.matching.host(), u.matching.pairs()), "patched matching cyclic");
        t.expect(counts(u.matching, true) == oracle::patch_prediction(f, g, h, d),
                 "patch counts " + show(counts(u.matching, true)) + " vs " + show(oracle::patch_prediction(f, g, h, d)));
        ++n_patch;
    }

    // coning
    std::vector<SimplicialComplex> bases{boundary_of_simplex(1), boundary_of_simplex(2), simplex_complex(2), pile(), annulus()};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        bases.push_back(stacked_ball(2 + static_cast<int>(seed % 2), 2 + static_cast<int>(seed), seed));
        bases.push_back(stacked_sphere(2, 1 + static_cast<int>(seed), seed));
    }
    for (std::size_t i = 0; i < bases.size(); ++i) {
        const auto& m = bases[i];
        const auto f = pinned(m, i);
        const auto c = calculus::cone_morse(m, f, "apex");
        const auto before = counts(f, true), after = counts(c.matching, true);
        bool ok = after.size() == before.size() + 1 && after[0] == 0 && after[1] == 0;
        for (int k = 1; ok && k <= m.dim(); ++k) ok = after[static_cast<std::size_t>(k + 1)] == before[static_cast<std::size_t>(k)];
        t.expect(ok, "cone counts " + show(after) + " from " + show(before));
        t.expect(oracle::is_acyclic_matching(c.matching.host(), c.matching.pairs()), "cone matching cyclic");
        ++n_cone;
    }

    // barycentric subdivision, both directions
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int d = seed % 3 == 0 ? 3 : 2;
        const auto m = stacked_ball(d, 1 + static_cast<int>(seed % 4), seed);
        const auto f = pinned(m, seed);
        const auto r1 = calculus::subdivide_morse(m, f, calculus::Transfer::bc_to_plain);
        const auto want1 = oracle::subdivision_prediction(m, f, r1.links, calculus::Transfer::bc_to_plain);
        t.expect(oracle::is_acyclic_matching(r1.matching.host(), r1.matching.pairs()), "subdivision 1 cyclic");
        t.expect(counts(r1.matching, false) == want1, "subdivision 1 counts " + show(counts(r1.matching, false)) + " vs " + show(want1));
        ++n_sub;
        Rng rng(seed);
        const auto g = morse::greedy_morse_matching(f.host_ptr(), &rng);
        const auto r2 = calculus::subdivide_morse(m, g, calculus::Transfer::plain_to_bc);
        const auto want2 = oracle::subdivision_prediction(m, g, r2.links, calculus::Transfer::plain_to_bc);
        t.expect(r2.matching.boundary_critical(), "subdivision 2 not boundary-critical");
        t.expect(counts(r2.matching, true) == want2, "subdivision 2 counts " + show(counts(r2.matching, true)) + " vs " + show(want2));
        ++n_sub;
    }

    t.expect(n_dual >= calculus_instances_min && n_patch >= calculus_instances_min && n_cone >= calculus_instances_min &&
                 n_sub >= calculus_instances_min,
             "too few instances");
    std::ostringstream s;
    s << "dualize " << n_dual << " (+" << n_double << " double), patch " << n_patch << ", cone " << n_cone
      << ", subdivide " << n_sub;
    return t.verdict(s.str());
}

Verdict lc_round_trip()
{
    Tally t;
    for (int i = 0; i < lc_round_trips; ++i) {
        const auto seed = static_cast<std::uint64_t>(i);
        const auto m = i % 2 ? stacked_sphere(3, 1 + i % 9, seed)
                             : (i % 4 ? stacked_ball(3, 1 + i % 11, seed) : random_stellar(simplex_complex(3), 1 + i % 5, seed));
        const auto f = pinned(m, seed);
        const auto dis = lc::lc_disassemble(m, f);
        t.expect(dis.tree.size() == m.facet_count(), "tree size");
        const auto back = lc::lc_assemble(dis.tree, dis.script);
        t.expect(back.simplicial, "quotient not simplicial");
        t.expect(is_isomorphic(back.complex, m), "round trip " + std::to_string(i) + " not isomorphic");
        t.expect(oracle::f_vector(back.complex) == oracle::f_vector(m), "round trip " + std::to_string(i) + " f-vector");
    }
    std::size_t trees = 0;
    for (int d = 2; d <= 5; ++d)
        for (int n = 1; n <= 30; n += 1 + n / 4) {
            const auto tree = lc::random_tree_of_simplices(d, n, static_cast<std::uint64_t>(d * 1000 + n));
            t.expect(oracle::boundary_ridges(tree.complex).size() == static_cast<std::size_t>(d * n - n + 2),
                     "tree boundary count d=" + std::to_string(d) + " N=" + std::to_string(n));
            ++trees;
        }
    return t.verdict(std::to_string(lc_round_trips) + " round trips, " + std::to_string(trees) + " trees");
}

Verdict counting()
{
    Tally t;
    std::ostringstream s;
    t.expect(lc::fuss_catalan(3, 2) == 3 && oracle::fuss_catalan(3, 2) == 3, "C_3(2) != 3");
    t.expect(lc::fuss_catalan(2, 3) == 5 && oracle::fuss_catalan(2, 3) == 5, "C_2(3) != 5");
    for (int d = 2; d <= 3; ++d)
        for (int n = 1; n <= 5; ++n) {
            const auto e = lc::enumerate_trees(d, n);
            t.expect(e.complete, "tree census incomplete");
            const auto bound = oracle::fuss_catalan(d, n);
            t.expect(lc::BigInt(e.types.size()) <= bound, "trees d=" + std::to_string(d) + " N=" + std::to_string(n));
            s << e.types.size() << (n == 5 ? (d == 2 ? " | " : "") : ",");
        }
    s << " tree types; LC census";
    for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {2, 6}, {3, 2}, {3, 3}}) {
        lc::CensusOptions o;
        o.d = d;
        o.n = n;
        o.predicate = lc::CensusPredicate::all;
        o.max_phase_a = 1;
        const auto r = lc::census(o);
        t.expect(r.complete, "LC census incomplete");
        std::map<int, std::size_t> by_m;
        for (const auto& [form, type] : r.types)
            for (int m : std::set<int>(type.phase_a_counts.begin(), type.phase_a_counts.end())) ++by_m[m];
        for (const auto& [m, count] : by_m)
            t.expect(lc::BigInt(count) <= lc::enumeration_bound(d, n, m).ceiling,
                     "census d=" + std::to_string(d) + " N=" + std::to_string(n) + " m=" + std::to_string(m));
        t.expect(r.bounds_hold, "library bound check failed");
        s << " " << d << "/" << n << ":" << r.types.size();
    }
    return t.verdict(s.str());
}

Verdict subdivision_theorems()
{
    Tally t;
    const auto tet = simplex_complex(3);

    // direction 1: an equatorial matching on Δ³ gives a perfect-but-one matching on sd Δ³
    const auto eq = pinned(tet);
    const auto one = calculus::subdivide_morse(tet, eq, calculus::Transfer::bc_to_plain);
    t.expect(counts(one.matching, false) == std::vector<long long>{1, 0, 0, 0}, "direction 1 counts " + show(counts(one.matching, false)));
    const auto sd1 = one.matching.host_ptr();
    const auto c1 = cert::from_matching(one.matching, "collapsible");
    t.expect(cert::validate_json(sd1, cert::to_json(*sd1, c1)).ok, "direction 1 certificate rejected");
    t.expect(oracle::is_acyclic_matching(*sd1, one.matching.pairs()), "direction 1 matching cyclic");

    // direction 2: a collapse of Δ³ gives an equatorial matching on sd Δ³
    const auto tp = eq.host_ptr();
    const auto col = morse::is_collapsible(tp);
    t.expect(col.status == SearchStatus::found, "Δ³ collapse not found");
    const auto plain = morse::matching_from_collapse(tp, col.search.sequence.pairs);
    const auto two = calculus::subdivide_morse(tet, plain, calculus::Transfer::plain_to_bc);
    t.expect(two.matching.equatorial(), "direction 2 not equatorial");
    t.expect(counts(two.matching, true) == std::vector<long long>{0, 0, 0, 1}, "direction 2 counts " + show(counts(two.matching, true)));
    const auto sd2 = two.matching.host_ptr();
    const auto c2 = cert::from_matching(two.matching, "endo-collapsible");
    t.expect(cert::validate_json(sd2, cert::to_json(*sd2, c2)).ok, "direction 2 certificate rejected");

    // the equatorial matching yields an explicit endo-collapse, replayed independently
    int delta = -1;
    for (int c : sd2->cells_of_dim(3))
        if (two.matching.is_critical(c)) delta = c;
    const auto problem = morse::depth_problem(sd2, delta, 3);
    const auto endo = morse::collapse_search(problem);
    t.expect(endo.status == SearchStatus::found, "sd Δ³ minus the critical tetrahedron did not collapse");
    std::vector<char> present(sd2->size(), 1);
    present[static_cast<std::size_t>(delta)] = 0;
    t.expect(oracle::replay_collapse(*sd2, present, sd2->boundary_mask(), 1, endo.sequence.pairs).empty(),
             "endo-collapse replay failed");
    return t.verdict("sd D3: c = " + show(counts(one.matching, false)) + ", c_int = " + show(counts(two.matching, true)));
}

std::vector<SimplicialComplex> hierarchy_corpus()
{
    std::vector<SimplicialComplex> out{simplex_complex(1),        simplex_complex(2),      simplex_complex(3),
                                       boundary_of_simplex(1),    boundary_of_simplex(2),  boundary_of_simplex(3),
                                       cross_polytope_boundary(2), cross_polytope_boundary(3), torus_seven(),
                                       rp2_six(),                 annulus(),
                                       pile_of_cubes(2, 2, 1).triangulation, cone(torus_seven(), "v"),
                                       suspension(boundary_of_simplex(1))};
    for (std::uint64_t seed = 0; out.size() < hierarchy_corpus_min + 10; ++seed) {
        switch (seed % 5) {
        case 0: out.push_back(stacked_sphere(2, 1 + static_cast<int>(seed % 6), seed)); break;
        case 1: out.push_back(stacked_ball(3, 1 + static_cast<int>(seed % 5), seed)); break;
        case 2: out.push_back(stacked_ball(2, 2 + static_cast<int>(seed % 7), seed)); break;
        case 3: out.push_back(random_stellar(boundary_of_simplex(3), 1 + static_cast<int>(seed % 3), seed)); break;
        default: {
            auto k = random_complex(seed);
            if (pseudomanifold_check(k).is_pseudomanifold) out.push_back(std::move(k));
            break;
        }
        }
    }
    return out;
}

Verdict hierarchy_consistency()
{
    Tally t;
    const auto corpus = hierarchy_corpus();
    static const std::vector<std::string> chain{"shellable", "constructible", "endo-collapsible", "LC"};
    std::size_t exact_pairs = 0, non_manifolds = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto r = recognition::hierarchy_report(corpus[i]);
        const auto tag = "complex " + std::to_string(i);
        t.expect(r.consistent(), tag + " reports " + (r.violations.empty() ? "" : r.violations.front()));
        for (std::size_t j = 0; j + 1 < chain.size(); ++j)
            t.expect(!(r.property(chain[j]).verdict == recognition::Verdict::yes &&
                       r.property(chain[j + 1]).verdict == recognition::Verdict::no),
                     tag + ": " + chain[j] + " but not " + chain[j + 1]);
        const int adepth = oracle::hochster_depth(corpus[i]);
        t.expect(r.adepth.adepth == adepth, tag + " adepth differs from Hochster's formula");
        // the depth chain is a theorem about manifolds
        if (!homology::is_homology_manifold(corpus[i])) {
            ++non_manifolds;
            continue;
        }
        const bool cdepth_exact = r.cdepth.status == morse::DepthStatus::exact_by_dimension ||
                                  r.cdepth.status == morse::DepthStatus::exact_by_obstruction ||
                                  r.cdepth.status == morse::DepthStatus::exact_by_exhaustion;
        if (cdepth_exact) {
            ++exact_pairs;
            t.expect(r.cdepth.k <= adepth, tag + ": cdepth > adepth");
        }
        if (r.hdepth.status != morse::DepthStatus::indeterminate && r.hdepth.status != morse::DepthStatus::lower_bound) {
            ++exact_pairs;
            t.expect(r.hdepth.value <= adepth, tag + ": hdepth > adepth");
        }
    }
    t.expect(corpus.size() >= hierarchy_corpus_min, "corpus too small");
    return t.verdict(std::to_string(corpus.size()) + " complexes, " + std::to_string(exact_pairs) +
                     " exact depth comparisons, " + std::to_string(non_manifolds) + " non-manifolds outside the depth chain");
}

Verdict furch_ball_check()
{
    Tally t;
    const auto furch = furch_ball(KnotSpec::trefoil());
    const auto& ball = furch.ball();
    const auto b = oracle::betti(ball);
    t.expect(b == std::vector<long long>{1, 0, 0, 0}, "ball homology " + show(b));
    const auto ridges = oracle::boundary_ridges(ball);
    std::vector<std::vector<std::string>> triangles;
    for (const auto& r : ridges) triangles.push_back(ball.labels_of(r));
    const auto boundary = SimplicialComplex::from_facets(triangles);
    const auto bb = oracle::betti(boundary);
    t.expect(bb == std::vector<long long>{1, 0, 1}, "boundary homology " + show(bb));
    t.expect(oracle::boundary_ridges(boundary).empty(), "boundary surface has a free edge");
    t.expect(oracle::euler_characteristic(boundary) == 2, "boundary Euler characteristic");

    const auto& [u, v] = furch.spanning_edge;
    const auto edge = ball.simplex_of({u, v});
    t.expect(edge.has_value(), "spanning edge missing");
    bool edge_on_boundary = false, u_on = false, v_on = false;
    const auto iu = ball.find_vertex(u), iv = ball.find_vertex(v);
    for (const auto& r : ridges) {
        const bool has_u = iu && std::find(r.begin(), r.end(), *iu) != r.end();
        const bool has_v = iv && std::find(r.begin(), r.end(), *iv) != r.end();
        u_on |= has_u;
        v_on |= has_v;
        edge_on_boundary |= has_u && has_v;
    }
    t.expect(!edge_on_boundary, "spanning edge lies on the boundary");
    t.expect(u_on && v_on, "spanning edge endpoint in the interior");
    const auto f = oracle::f_vector(ball);
    return t.verdict("f = " + show(f) + ", H = " + show(b) + ", boundary H = " + show(bb) + ", edge " + u + " " + v);
}

Verdict lutz_sphere()
{
    std::filesystem::path file;
    for (const auto* name : {"S3_13_56.facets", "lutz-S3-13-56.facets", "S3_13_56", "manifold_3_13_56.txt"}) {
        const auto p = io::resolve_data_path(name);
        if (std::filesystem::exists(p)) {
            file = p;
            break;
        }
    }
    if (file.empty()) return {Outcome::skipped, "no S3_13_56 facet file under MORSELAB_DATA"};

    Tally t;
    const auto start = Clock::now();
    const auto sphere = io::read_complex(file.string());
    t.expect(sphere.vertex_count() == 13 && sphere.facet_count() == 56, "not a 13-vertex 56-facet complex");
    const auto delta = sphere.face_of({"1", "2", "6", "9"});
    const auto ball = removal(sphere, delta);
    const auto p = share(face_poset(ball));
    const auto sigma = calculus::cell_by_labels(*p, {"2", "6", "9", "11"});
    const auto problem = morse::depth_problem(p, sigma, 3);
    morse::CollapseOptions options;
    options.seed = 1;
    options.budget = 50'000'000;
    options.restarts = 64;
    const auto res = morse::collapse_search(problem, options);
    const double elapsed = seconds_since(start);
    t.expect(res.status == SearchStatus::found, std::string("search ") + morse::to_string(res.status));
    if (res.status == SearchStatus::found) {
        std::vector<char> present(p->size(), 1);
        present[static_cast<std::size_t>(sigma)] = 0;
        t.expect(oracle::replay_collapse(*p, present, p->boundary_mask(), 1, res.sequence.pairs).empty(), "replay failed");
    }
    t.expect(elapsed < lutz_seconds, "took " + std::to_string(elapsed) + " s");
    return t.verdict(std::to_string(elapsed) + " s");
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"Euler identity over random matchings", euler_identity},
        {"relative Morse inequalities", relative_inequalities},
        {"endo-collapsibility certificates", endo_certificates},
        {"collapse depth of the pile", pile_collapse_depth},
        {"patch/cone/dualize/subdivide count identities", calculus_identities},
        {"LC round trip", lc_round_trip},
        {"counting bounds", counting},
        {"subdivision theorems on sd D3", subdivision_theorems},
        {"hierarchy consistency", hierarchy_consistency},
        {"Furch trefoil ball", furch_ball_check},
        {"Lutz sphere S3_13_56", lutz_sphere},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {Outcome::fail, std::string("exception: ") + e.what()};
        }
        const char* label = v.outcome == Outcome::pass ? "PASS" : v.outcome == Outcome::fail ? "FAIL" : "SKIPPED";
        if (v.outcome == Outcome::fail) ++failures;
        std::cout << "[" << label << "] " << (i + 1) << ". " << criteria[i].first << ": " << v.detail << " ("
                  << seconds_since(start) << " s)" << std::endl;
    }
    std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all criteria met")
              << std::endl;
    return failures ? 1 : 0;
}
