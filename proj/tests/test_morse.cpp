#include <catch2/catch_amalgamated.hpp>

#include "morselab/certificate.hpp"
#include "morselab/collapse.hpp"
#include "morselab/constructions.hpp"
#include "morselab/error.hpp"
#include "morselab/generators.hpp"
#include "morselab/matching.hpp"
#include "morselab/morse.hpp"
#include "morselab/rng.hpp"

#include "oracles.hpp"

using namespace morselab;
using morse::MorseMatching;
using morse::SearchStatus;

namespace {

int cell(const FacePoset& p, std::vector<std::string> labels) { return *p.find_labels(std::move(labels)); }

std::vector<long long> betti_of(const SimplicialComplex& k) { return oracle::betti(k); }

/// Replays a depth certificate against an independently built problem.
std::string replay_depth(const PosetPtr& p, const morse::DepthCertificate& c)
{
    std::vector<char> present(p->size(), 1);
    present[static_cast<std::size_t>(c.delta)] = 0;
    std::vector<char> protect(p->size(), 0);
    if (p->has_boundary_mask()) protect = p->boundary_mask();
    // cells of dimension d-k+1 and above must all go
    return oracle::replay_collapse(*p, present, protect, c.dim - c.k + 1, c.sequence.pairs);
}

}  // namespace

TEST_CASE("matching validation", "[morse][matching]")
{
    const auto triangle = share(face_poset(simplex_complex(2)));
    const auto empty = MorseMatching::validate(triangle, {});
    CHECK(empty.critical_cells().size() == 7);

    const auto octahedron = share(face_poset(cross_polytope_boundary(2)));
    const auto& p = *octahedron;
    int a = -1, b = -1, c = -1;
    // a 3-cycle of edges with each vertex matched to the next edge is a closed V-path
    const auto& edges = p.cells_of_dim(1);
    std::vector<std::pair<int, int>> cycle;
    for (int e1 : edges)
        for (int e2 : edges)
            for (int e3 : edges) {
                if (!cycle.empty()) break;
                const auto& f1 = p.faces(e1);
                const auto& f2 = p.faces(e2);
                const auto& f3 = p.faces(e3);
                // e1 = (x, y), e2 = (y, z), e3 = (z, x)
                const int x = f1[0], y = f1[1];
                if (std::find(f2.begin(), f2.end(), y) == f2.end() || e2 == e1) continue;
                const int z = f2[0] == y ? f2[1] : f2[0];
                if (z == x) continue;
                if (!((f3[0] == z && f3[1] == x) || (f3[0] == x && f3[1] == z))) continue;
                a = x, b = y, c = z;
                cycle = {{a, e1}, {b, e2}, {c, e3}};
            }
    REQUIRE(cycle.size() == 3);
    CHECK_FALSE(oracle::is_acyclic_matching(p, cycle));
    try {
        MorseMatching::validate(octahedron, cycle);
        FAIL("closed V-path accepted");
    } catch (const MatchingError& e) {
        CHECK(e.witness().size() >= 3);
    }
    CHECK_THROWS_AS(MorseMatching::validate(octahedron, {{cycle[0].first, cycle[0].second}, {cycle[0].first, cycle[1].second}}),
                    MatchingError);
    CHECK_THROWS_AS(MorseMatching::validate(octahedron, {{a, p.cells_of_dim(2).front()}}), MatchingError);
}

TEST_CASE("a collapse of the tetrahedron leaves one vertex", "[morse][collapse]")
{
    const auto p = share(face_poset(simplex_complex(3)));
    const auto res = morse::is_collapsible(p);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.search.sequence.pairs.size() == 7);
    CHECK(oracle::replay_collapse(*p, std::vector<char>(p->size(), 1), {}, 1, res.search.sequence.pairs).empty());
    const auto f = morse::matching_from_collapse(p, res.search.sequence.pairs);
    CHECK(f.critical_counts() == std::vector<long long>{1, 0, 0, 0});
    CHECK(oracle::critical_counts(*p, f.pairs(), false) == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("collapse search outcomes", "[morse][collapse]")
{
    const auto sphere = share(face_poset(boundary_of_simplex(2)));
    morse::CollapseOptions exhaustive;
    exhaustive.strategy = morse::Strategy::exhaustive;
    CHECK(morse::collapse_search(morse::CollapseProblem::whole(sphere, 1), exhaustive).status == SearchStatus::impossible);
    CHECK(morse::is_collapsible(sphere).status == SearchStatus::impossible);

    auto punctured = morse::CollapseProblem::whole(sphere, 1);
    punctured.present[static_cast<std::size_t>(sphere->cells_of_dim(2).front())] = 0;
    const auto found = morse::collapse_search(punctured, exhaustive);
    REQUIRE(found.status == SearchStatus::found);
    CHECK(oracle::replay_collapse(*sphere, punctured.present, {}, 1, found.sequence.pairs).empty());

    const auto sd = share(face_poset(barycentric_subdivision(simplex_complex(3))));
    const auto sd_res = morse::is_collapsible(sd);
    REQUIRE(sd_res.status == SearchStatus::found);
    CHECK(oracle::replay_collapse(*sd, std::vector<char>(sd->size(), 1), {}, 1, sd_res.search.sequence.pairs).empty());

    morse::CollapseOptions tiny;
    tiny.budget = 3;
    tiny.restarts = 1;
    tiny.strategy = morse::Strategy::deterministic_lex;
    CHECK(morse::collapse_search(morse::CollapseProblem::whole(sd, 1), tiny).status == SearchStatus::indeterminate);
}

TEST_CASE("collapse pairs come in weakly decreasing coface dimension", "[morse][collapse][property]")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto p = share(face_poset(stacked_ball(3, 8, seed)));
        morse::CollapseOptions o;
        o.seed = seed;
        const auto res = morse::is_collapsible(p, o);
        REQUIRE(res.status == SearchStatus::found);
        const auto& pairs = res.search.sequence.pairs;
        for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(p->dim(pairs[i].second) <= p->dim(pairs[i - 1].second));
    }
}

TEST_CASE("discrete Morse functions from matchings", "[morse][matching]")
{
    const auto triangle = share(face_poset(simplex_complex(2)));
    const auto empty = MorseMatching::validate(triangle, {});
    const auto values = morse::matching_to_function(empty);
    const auto check = morse::check_discrete_morse_function(*triangle, values);
    CHECK(check.is_morse);
    CHECK(check.critical.size() == 7);

    const auto sphere = share(face_poset(boundary_of_simplex(2)));
    const auto polar = morse::polar_morse(sphere, sphere->cells_of_dim(2).front(), sphere->cells_of_dim(0).back());
    const auto fcheck = morse::check_discrete_morse_function(*sphere, morse::matching_to_function(polar));
    CHECK(fcheck.is_morse);
    CHECK(fcheck.critical.size() == 2);
    auto sorted = fcheck.pairs;
    auto expected = polar.pairs();
    std::sort(sorted.begin(), sorted.end());
    std::sort(expected.begin(), expected.end());
    CHECK(sorted == expected);
}

TEST_CASE("random greedy matchings satisfy the Euler identity", "[morse][property]")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto k = seed % 2 ? random_stellar(boundary_of_simplex(3), 5, seed) : stacked_ball(2, 6, seed);
        const auto p = share(face_poset(k));
        Rng rng(seed);
        const auto f = morse::greedy_morse_matching(p, &rng);
        CHECK(oracle::is_acyclic_matching(*p, f.pairs()));
        CHECK(f.critical_counts() == oracle::critical_counts(*p, f.pairs(), false));
        CHECK(f.euler_sum() == oracle::euler_characteristic(k));
    }
}

TEST_CASE("boundary-critical construction", "[morse][bc]")
{
    const auto tet = share(face_poset(simplex_complex(3)));
    const auto f = morse::boundary_critical_morse(tet, tet->cells_of_dim(3).front());
    CHECK(f.interior_critical_counts() == std::vector<long long>{0, 0, 0, 1});
    CHECK(f.critical_counts() == std::vector<long long>{4, 6, 4, 1});

    const auto ball = cone(boundary_of_simplex(2), "v");
    const auto cp = share(face_poset(ball));
    for (int top : cp->cells_of_dim(3)) {
        const auto g = morse::boundary_critical_morse(cp, top);
        CHECK(g.equatorial());
        CHECK(g.interior_critical_counts() == std::vector<long long>{0, 0, 0, 1});
    }

    const auto sphere = share(face_poset(boundary_of_simplex(2)));
    const auto polar = morse::polar_morse(sphere, sphere->cells_of_dim(2).front(), sphere->cells_of_dim(0).back());
    CHECK(polar.critical_counts() == std::vector<long long>{1, 0, 1});
    CHECK(polar.polar());

    CHECK_THROWS_AS(morse::boundary_critical_morse(sphere, sphere->cells_of_dim(2).front()), Error);
}

TEST_CASE("boundary-critical matchings never touch the boundary", "[morse][bc][property]")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto ball = seed % 3 == 0 ? stacked_ball(2, 7, seed) : random_stellar(simplex_complex(3), 6, seed);
        const auto p = share(face_poset(ball));
        const auto& tops = p->cells_of_dim(p->max_dim());
        const int delta = tops[static_cast<std::size_t>(seed % tops.size())];
        const auto f = morse::boundary_critical_morse(p, delta);
        CHECK(oracle::is_acyclic_matching(*p, f.pairs()));
        for (const auto& [a, b] : f.pairs()) {
            CHECK_FALSE(p->on_boundary(a));
            CHECK_FALSE(p->on_boundary(b));
        }
        const auto c_int = oracle::critical_counts(*p, f.pairs(), true);
        CHECK(c_int.front() == 0);
        CHECK(c_int.back() == 1);
        CHECK(f.is_critical(delta));
    }
}

TEST_CASE("endo-collapsibility", "[morse][endo]")
{
    const auto single = morse::is_endo_collapsible(simplex_complex(3));
    CHECK(single.status == SearchStatus::found);
    CHECK(single.certificate.sequence.pairs.empty());

    for (int d : {2, 3}) {
        const auto sphere = boundary_of_simplex(d);
        const auto p = share(face_poset(sphere));
        const auto res = morse::is_endo_collapsible(p, morse::topology_info(sphere));
        REQUIRE(res.status == SearchStatus::found);
        CHECK(res.certificate.k == d);
        CHECK(replay_depth(p, res.certificate).empty());
    }

    const auto pile = pile_of_cubes(3, 3, 3, {{1, 1, 1}}).triangulation;
    REQUIRE(betti_of(pile) == std::vector<long long>{1, 0, 1, 0});
    const auto obstructed = morse::is_endo_collapsible(pile);
    CHECK(obstructed.status == SearchStatus::impossible);
    CHECK(obstructed.obstructed);
    CHECK(obstructed.reason.find("H_2") != std::string::npos);

    CHECK_THROWS_AS(morse::is_endo_collapsible(bowtie()), Error);
}

TEST_CASE("collapse depth", "[morse][depth]")
{
    for (int d = 1; d <= 4; ++d) {
        const auto res = morse::collapse_depth(simplex_complex(d));
        CHECK(res.k == d);
        CHECK(res.status == morse::DepthStatus::exact_by_dimension);
    }

    const auto pile = pile_of_cubes(3, 3, 3, {{1, 1, 1}}).triangulation;
    const auto p = share(face_poset(pile));
    const auto res = morse::collapse_depth(p, morse::topology_info(pile));
    CHECK(res.k == 2);
    CHECK(res.status == morse::DepthStatus::exact_by_obstruction);
    CHECK(res.upper.bound == 2);
    REQUIRE(res.witness);
    CHECK(replay_depth(p, res).empty());
    const auto c_int = oracle::critical_counts(*p, res.witness->pairs(), true);
    CHECK(c_int[3] == 1);
    CHECK(c_int[2] == 0);

    const auto sphere = stacked_sphere(3, 4, 2);
    const auto sres = morse::collapse_depth(sphere);
    CHECK(sres.k == 3);
}

TEST_CASE("Morse inequalities", "[morse][inequalities]")
{
    const auto torus = torus_seven();
    const auto tp = share(face_poset(torus));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const auto f = morse::greedy_morse_matching(tp, &rng);
        const auto rep = morse::verify_morse_inequalities(torus, f, false);
        CHECK(rep.all_hold);
        CHECK(rep.euler_ok);
        CHECK(f.c(1) >= 2);
    }

    const auto ball = cone(boundary_of_simplex(2), "v");
    const auto bp = share(face_poset(ball));
    const auto eq = morse::boundary_critical_morse(bp, bp->cells_of_dim(3).front());
    const auto rep = morse::verify_morse_inequalities(ball, eq, true);
    CHECK(rep.all_hold);
    for (const auto& row : rep.rows)
        if (row.degree >= 1) CHECK(row.homology == 0);

    const auto pile = pile_of_cubes(3, 3, 3, {{1, 1, 1}}).triangulation;
    const auto pp = share(face_poset(pile));
    const auto pf = morse::boundary_critical_morse(pp, pp->cells_of_dim(3).front());
    CHECK(pf.c_int(1) >= 1);
    CHECK(morse::verify_morse_inequalities(pile, pf, true).all_hold);

    Rng rng(1);
    const auto plain = morse::greedy_morse_matching(bp, &rng);
    if (!plain.boundary_critical()) CHECK_THROWS_AS(morse::verify_morse_inequalities(ball, plain, true), Error);
}

TEST_CASE("certificates round trip and reject tampering", "[morse][cert]")
{
    const auto ball = cone(boundary_of_simplex(2), "v");
    const auto p = share(face_poset(ball));
    const auto f = morse::boundary_critical_morse(p, p->cells_of_dim(3).front());
    const auto c = cert::from_matching(f, "equatorial");
    const auto text = cert::to_json(*p, c);
    const auto back = cert::from_json(*p, text);
    CHECK(back.pairs == c.pairs);
    CHECK(back.claim == "equatorial");
    CHECK(cert::validate_json(p, text).ok);

    auto wrong_hash = c;
    wrong_hash.poset_hash ^= 1;
    CHECK_FALSE(cert::validate(p, wrong_hash).ok);

    auto wrong_critical = c;
    wrong_critical.critical.pop_back();
    CHECK_FALSE(cert::validate(p, wrong_critical).ok);

    const auto other = share(face_poset(simplex_complex(3)));
    CHECK_FALSE(cert::validate_json(other, text).ok);
    CHECK_THROWS_AS(cert::from_json(*p, "{not json"), ParseError);

    const auto endo = morse::is_endo_collapsible(p, morse::topology_info(ball));
    REQUIRE(endo.status == SearchStatus::found);
    const auto problem = morse::depth_problem(p, endo.certificate.delta, endo.certificate.k);
    const auto cc = cert::from_collapse(problem, endo.certificate.sequence.pairs, "endo-collapsible");
    CHECK(cert::validate_json(p, cert::to_json(*p, cc)).ok);
    auto truncated = cc;
    truncated.pairs.pop_back();
    CHECK_FALSE(cert::validate(p, truncated).ok);
}

TEST_CASE("strategy names", "[morse]")
{
    for (auto s : {morse::Strategy::automatic, morse::Strategy::deterministic_lex, morse::Strategy::greedy_random,
                   morse::Strategy::exhaustive})
        CHECK(morse::parse_strategy(morse::to_string(s)) == s);
    CHECK_THROWS_AS(morse::parse_strategy("sideways"), Error);
    CHECK(cell(*share(face_poset(simplex_complex(1))), {"1", "2"}) == 2);
}
