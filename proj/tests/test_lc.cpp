#include <catch2/catch_amalgamated.hpp>

#include "morselab/calculus.hpp"
#include "morselab/canonical.hpp"
#include "morselab/census.hpp"
#include "morselab/constructions.hpp"
#include "morselab/error.hpp"
#include "morselab/generators.hpp"
#include "morselab/lc.hpp"

#include "oracles.hpp"

using namespace morselab;

namespace {

using Facets = std::vector<std::vector<long long>>;

/// Facets of an assembled quotient with the "#k" copy suffixes removed.
std::set<std::set<std::string>> stripped_facets(const SimplicialComplex& k)
{
    std::set<std::set<std::string>> out;
    for (const auto& f : k.facets()) {
        std::set<std::string> labels;
        for (const auto& l : k.labels_of(f)) labels.insert(l.substr(0, l.find('#')));
        out.insert(labels);
    }
    return out;
}

std::set<std::set<std::string>> label_facets(const SimplicialComplex& k)
{
    std::set<std::set<std::string>> out;
    for (const auto& f : k.facets()) {
        const auto l = k.labels_of(f);
        out.insert({l.begin(), l.end()});
    }
    return out;
}

lc::Disassembly disassemble(const SimplicialComplex& m, std::size_t facet = 0)
{
    const auto p = share(face_poset(m));
    const auto& tops = p->cells_of_dim(p->max_dim());
    return lc::lc_disassemble(m, calculus::pin_critical(p, tops[facet % tops.size()]));
}

}  // namespace

TEST_CASE("trees of simplices", "[lc][trees]")
{
    const auto path = lc::tree_from_complex(SimplicialComplex::from_facets(Facets{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
    CHECK(path.size() == 3);
    CHECK(path.edges.size() == 2);
    CHECK(path.boundary_facet_count() == 5);

    CHECK_THROWS_AS(lc::tree_from_complex(cross_polytope_boundary(2)), Error);
    CHECK_THROWS_AS(lc::tree_from_complex(bowtie()), Error);

    for (int d = 2; d <= 4; ++d)
        for (int n = 1; n <= 12; n += 3) {
            const auto t = lc::random_tree_of_simplices(d, n, static_cast<std::uint64_t>(d * 100 + n));
            CHECK(t.size() == static_cast<std::size_t>(n));
            CHECK(t.edges.size() == static_cast<std::size_t>(n - 1));
            CHECK(oracle::boundary_ridges(t.complex).size() == static_cast<std::size_t>(d * n - n + 2));
            CHECK(t.boundary_facet_count() == static_cast<std::size_t>(d * n - n + 2));
            CHECK(oracle::betti(t.complex)[0] == 1);
        }
}

TEST_CASE("tree types against polygon triangulations", "[lc][trees]")
{
    for (int n = 1; n <= 6; ++n) {
        const auto e = lc::enumerate_trees(2, n);
        CHECK(e.complete);
        CHECK(e.types.size() == oracle::polygon_triangulation_orbits(n));
        CHECK(lc::BigInt(e.types.size()) <= oracle::fuss_catalan(2, n));
    }
    for (int n = 1; n <= 5; ++n) {
        const auto e = lc::enumerate_trees(3, n);
        CHECK(lc::BigInt(e.types.size()) <= oracle::fuss_catalan(3, n));
        // boundary facet counts after k simplices are k(d-1)+2
        lc::BigInt processes = 1;
        for (int k = 1; k < n; ++k) processes *= 2 * k + 2;
        CHECK(e.labeled_processes == processes);
        std::set<std::string> forms;
        for (const auto& t : e.types) forms.insert(canonical_form(t.complex));
        CHECK(forms.size() == e.types.size());
    }
    CHECK(lc::enumerate_trees(3, 2).types.size() == 1);
    CHECK_FALSE(lc::enumerate_trees(2, 7, 5).complete);
}

TEST_CASE("Fuss-Catalan numbers", "[lc][bounds]")
{
    CHECK(lc::fuss_catalan(2, 3) == 5);
    CHECK(lc::fuss_catalan(3, 2) == 3);
    CHECK(lc::fuss_catalan(2, 10) == 16796);
    for (int d = 1; d <= 5; ++d)
        for (int n = 0; n <= 12; ++n) CHECK(lc::fuss_catalan(d, n) == oracle::fuss_catalan(d, n));
}

TEST_CASE("enumeration bounds", "[lc][bounds]")
{
    const auto e = lc::default_e_bound();
    CHECK(e > lc::BigRational(2718281, 1000000));
    CHECK(e < lc::BigRational(2718282, 1000000));
    for (int d = 2; d <= 4; ++d)
        for (int n = 1; n <= 6; ++n) {
            const auto b = lc::enumeration_bound(d, n, 0);
            lc::BigRational expected = 1;
            for (int i = 0; i < n; ++i) expected *= e * d;
            for (int i = 0; i < d * (d * n - n + 2); ++i) expected *= 2;
            CHECK(b.value == expected);
            CHECK(lc::BigRational(b.ceiling) >= b.value);
            CHECK(lc::BigRational(b.ceiling) < b.value + 1);
            CHECK(lc::enumeration_bound(d, n + 1, 0).value > b.value);
            CHECK(lc::enumeration_bound(d, n, 1).value > 0);
        }
}

TEST_CASE("disassembly and reassembly", "[lc][roundtrip]")
{
    const auto octahedron = cross_polytope_boundary(2);
    const auto dis = disassemble(octahedron);
    CHECK(dis.tree.size() == 8);
    CHECK(dis.script.phase_a.size() + dis.script.phase_b.size() == 12 - 7);
    const auto built = lc::lc_assemble(dis.tree, dis.script);
    CHECK(built.simplicial);
    CHECK(is_isomorphic(built.complex, octahedron));
    CHECK(oracle::isomorphic_bruteforce(built.complex, octahedron));
    CHECK(stripped_facets(built.complex) == label_facets(octahedron));
    REQUIRE(built.matching);
    CHECK(oracle::is_acyclic_matching(built.matching->host(), built.matching->pairs()));
    CHECK(dis.script.phase_a.empty());
    CHECK(oracle::critical_counts(built.matching->host(), built.matching->pairs(), true)[1] == 0);

    // a polar matching on ∂Δ³ pairs three vertices with edges, so three ridges are glued in phase b
    const auto tetra = disassemble(boundary_of_simplex(2));
    CHECK(tetra.tree.size() == 4);
    CHECK(tetra.script.phase_a.empty());
    CHECK(tetra.script.phase_b.size() == 3);
    CHECK(is_isomorphic(lc::lc_assemble(tetra.tree, tetra.script).complex, boundary_of_simplex(2)));

    const auto ball = simplex_complex(3);
    const auto single = disassemble(ball);
    CHECK(single.tree.size() == 1);
    CHECK(single.script.phase_a.empty());
    CHECK(single.script.phase_b.empty());
}

TEST_CASE("assembly round trips on random balls and spheres", "[lc][roundtrip][property]")
{
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto m = seed % 2 ? stacked_sphere(3, 3 + static_cast<int>(seed), seed)
                                : random_stellar(simplex_complex(3), 4, seed);
        const auto dis = disassemble(m, seed);
        CHECK(dis.tree.size() == m.facet_count());
        const auto built = lc::lc_assemble(dis.tree, dis.script);
        CHECK(is_isomorphic(built.complex, m));
        CHECK(stripped_facets(built.complex) == label_facets(m));
        REQUIRE(built.matching);
        const auto c_int = oracle::critical_counts(built.matching->host(), built.matching->pairs(), true);
        CHECK(c_int[2] == static_cast<long long>(dis.script.phase_a.size()));

        const auto parsed = lc::script_from_json(lc::script_to_json(dis.tree, dis.script));
        CHECK(parsed.script.phase_a.size() == dis.script.phase_a.size());
        CHECK(parsed.script.phase_b.size() == dis.script.phase_b.size());
        CHECK(is_isomorphic(lc::lc_assemble(parsed.tree, parsed.script).complex, m));
    }
}

TEST_CASE("strict assembly rejects degenerate gluings", "[lc]")
{
    const auto tree = lc::tree_from_complex(SimplicialComplex::from_facets(Facets{{1, 2, 3}, {2, 3, 4}}));
    lc::GluingScript script;
    // folding 12 onto 24 sends 1 to 2, collapsing the first triangle
    script.phase_a.push_back({{"1", "2"}, {"2", "4"}, {{"1", "2"}, {"2", "4"}}, {}});
    CHECK_THROWS_AS(lc::lc_assemble(tree, script, true), Error);
    CHECK_FALSE(lc::lc_assemble(tree, script, false).simplicial);

    lc::GluingScript not_adjacent;
    not_adjacent.phase_b.push_back({{"1", "2"}, {"3", "4"}, {{"1", "3"}, {"2", "4"}}, {"9"}});
    CHECK_THROWS_AS(lc::lc_assemble(tree, not_adjacent, true), Error);
    CHECK_THROWS_AS(lc::script_from_json("{\"tree\": 3}"), Error);
}

TEST_CASE("gluing census", "[lc][census]")
{
    lc::CensusOptions trees;
    trees.d = 2;
    trees.n = 4;
    trees.predicate = lc::CensusPredicate::trees;
    const auto t = lc::census(trees);
    CHECK(t.complete);
    CHECK(t.types.size() == oracle::polygon_triangulation_orbits(4));
    CHECK(t.bounds_hold);

    lc::CensusOptions closed;
    closed.d = 2;
    closed.n = 4;
    closed.predicate = lc::CensusPredicate::closed;
    std::size_t reports = 0;
    const auto c = lc::census(closed, [&](const lc::CensusProgress&) { ++reports; });
    CHECK(c.complete);
    CHECK(reports > 0);
    CHECK(c.bounds_hold);
    // the boundary of the tetrahedron is the only closed surface with four triangles
    REQUIRE(c.types.size() == 1);
    CHECK(is_isomorphic(c.types.begin()->second.example, boundary_of_simplex(2)));

    closed.n = 6;
    for (const auto& [form, type] : lc::census(closed).types) {
        CHECK(oracle::betti(type.example) == std::vector<long long>{1, 0, 1});
        CHECK(canonical_form(type.example) == form);
    }

    for (auto p : {lc::CensusPredicate::trees, lc::CensusPredicate::all, lc::CensusPredicate::closed})
        CHECK(lc::parse_census_predicate(lc::to_string(p)) == p);
}
