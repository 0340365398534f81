#include "cli.hpp"

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
#include "morselab/subdivide.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

namespace morselab::cli {

using nlohmann::json;
using morse::MorseMatching;
using morse::SearchStatus;

namespace {

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = 2'000'000;
    std::string field = "z";
    std::string format = "json";
    bool strict = true;
    unsigned jobs = 0;
    std::string cert_path;
    std::string out_path;

    unsigned threads() const
    {
        if (jobs) return jobs;
        return std::max(1u, std::thread::hardware_concurrency());
    }

    morse::CollapseOptions collapse() const
    {
        morse::CollapseOptions o;
        o.seed = seed;
        o.budget = budget;
        return o;
    }
};

std::vector<std::string> split_labels(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

json labels_json(const FacePoset& p, int c)
{
    if (p.is_simplicial()) return p.cell_labels(c);
    return c;
}

json counts_json(const std::vector<long long>& v) { return json(v); }

json matching_summary(const MorseMatching& m)
{
    json j;
    j["critical"] = counts_json(m.critical_counts());
    j["interior_critical"] = counts_json(m.interior_critical_counts());
    j["boundary_critical"] = m.boundary_critical();
    j["equatorial"] = m.equatorial();
    j["polar"] = m.polar();
    j["pairs"] = m.pairs().size();
    return j;
}

/// Runs the subcommands and keeps the shared state they need.
class Session {
public:
    Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    RunConfig config;

    void emit(const json& report)
    {
        if (config.format == "text") {
            for (const auto& [key, value] : report.items())
                out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        } else {
            out_ << report.dump(2) << "\n";
        }
    }

    void emit_line(const json& j) { out_ << j.dump() << "\n" << std::flush; }

    void note(const std::string& text) { err_ << text << "\n"; }

    /// Writes to `path`, or returns false when no path was requested.
    bool write_if(const std::string& path, const std::string& text)
    {
        if (path.empty()) return false;
        io::write_text(path, text);
        return true;
    }

    /// Certificate goes to --cert when given, otherwise into the report.
    void attach_certificate(json& report, const FacePoset& p, const cert::Certificate& c)
    {
        const auto text = cert::to_json(p, c);
        if (write_if(config.cert_path, text)) report["certificate_path"] = config.cert_path;
        else report["certificate"] = json::parse(text);
    }

    static PosetPtr load_poset(const std::string& path)
    {
        if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
            return share(io::parse_poset_json(io::read_text(io::resolve_data_path(path))));
        return share(face_poset(io::read_complex(path)));
    }

    static MorseMatching load_matching(const PosetPtr& p, const std::string& cert_path)
    {
        const auto v = cert::validate_json(p, io::read_text(io::resolve_data_path(cert_path)));
        if (!v.ok || !v.matching) fail(ErrorKind::invalid_input, "certificate " + cert_path + " rejected: " + v.message);
        return *v.matching;
    }

    static int verdict_exit(SearchStatus s)
    {
        switch (s) {
        case SearchStatus::found: return Exit::yes;
        case SearchStatus::impossible: return Exit::no;
        case SearchStatus::indeterminate: return Exit::indeterminate;
        }
        return Exit::internal_error;
    }

    // ---- commands ------------------------------------------------------

    int check(const std::string& path)
    {
        const auto k = io::read_complex(path);
        const auto info = pseudomanifold_check(k);
        json r;
        r["dim"] = k.dim();
        r["f_vector"] = k.f_vector();
        r["pure"] = info.pure;
        r["strongly_connected"] = info.strongly_connected;
        r["max_ridge_degree"] = info.max_ridge_degree;
        r["pseudomanifold"] = info.is_pseudomanifold;
        r["closed"] = info.closed();
        r["boundary_facets"] = info.closed() ? 0 : info.boundary.facet_count();
        r["euler_characteristic"] = k.euler_characteristic();
        emit(r);
        return info.is_pseudomanifold ? Exit::yes : Exit::no;
    }

    int homology_cmd(const std::string& path, bool reduced)
    {
        const auto k = io::read_complex(path);
        const auto h = homology::homology(k, homology::parse_coefficients(config.field), reduced);
        auto r = json::parse(h.to_json());
        r["betti_text"] = h.betti_text();
        emit(r);
        return Exit::yes;
    }

    int adepth(const std::string& path)
    {
        const auto k = io::read_complex(path);
        const auto field = config.field == "z" ? homology::Coefficients::Q() : homology::parse_coefficients(config.field);
        const auto d = homology::algebraic_depth(k, field);
        json r;
        r["dim"] = d.dim;
        r["field"] = d.field.name();
        r["adepth"] = d.adepth;
        r["cohen_macaulay"] = d.cohen_macaulay;
        r["witness_face"] = d.witness_face.empty() ? json::array() : json(k.labels_of(d.witness_face));
        r["witness_degree"] = d.witness_degree;
        emit(r);
        return Exit::yes;
    }

    int collapse(const std::string& path, const std::string& target, const std::vector<std::string>& removed,
                 const std::string& strategy)
    {
        auto k = remove_facets(io::read_complex(path), removed);
        const auto p = share(face_poset(k));
        auto options = config.collapse();
        options.strategy = morse::parse_strategy(strategy);
        json r;
        r["target"] = target;
        morse::CollapseProblem problem;
        if (target == "point") {
            problem = morse::CollapseProblem::whole(p, 1);
            problem.description = "a single vertex";
            if (p->euler_characteristic() != 1) {
                r["status"] = "impossible";
                r["reason"] = "euler characteristic is not 1";
                emit(r);
                return Exit::no;
            }
        } else if (target == "boundary") {
            if (!p->has_boundary_mask()) fail(ErrorKind::precondition, "complex has no boundary");
            problem = morse::CollapseProblem::whole(p, 0);
            problem.protect = p->boundary_mask();
            problem.description = "the boundary";
        } else if (target.rfind("dim:", 0) == 0) {
            problem = morse::CollapseProblem::whole(p, std::stoi(target.substr(4)) + 1);
            problem.description = "a complex of dimension " + target.substr(4);
        } else {
            fail(ErrorKind::invalid_input, "unknown collapse target '" + target + "'", "use point, boundary or dim:<k>");
        }
        const auto res = morse::collapse_search(problem, options);
        r["status"] = morse::to_string(res.status);
        r["expansions"] = res.expansions;
        r["budget_exhausted"] = res.budget_exhausted;
        if (!res.reason.empty()) r["reason"] = res.reason;
        if (res.status == SearchStatus::found)
            attach_certificate(r, *p, cert::from_collapse(problem, res.sequence.pairs, "collapses onto " + problem.description));
        emit(r);
        return verdict_exit(res.status);
    }

    static SimplicialComplex remove_facets(const SimplicialComplex& k, const std::vector<std::string>& removed)
    {
        if (removed.empty()) return k;
        std::vector<std::size_t> keep;
        std::vector<Simplex> gone;
        for (const auto& r : removed) gone.push_back(k.face_of(split_labels(r)));
        for (std::size_t i = 0; i < k.facet_count(); ++i)
            if (std::find(gone.begin(), gone.end(), k.facets()[i]) == gone.end()) keep.push_back(i);
        if (keep.size() + gone.size() != k.facet_count()) fail(ErrorKind::invalid_input, "--remove must name facets");
        return subcomplex_of_facets(k, keep);
    }

    int endo(const std::string& path, const std::vector<std::string>& removed, const std::string& delta)
    {
        const auto k = remove_facets(io::read_complex(path), removed);
        const auto p = share(face_poset(k));
        morse::DepthOptions options;
        options.collapse = config.collapse();
        json r;
        if (!delta.empty()) {
            std::string why;
            if (!morse::is_pseudomanifold_poset(*p, &why)) fail(ErrorKind::precondition, "not a pseudo-manifold: " + why);
            const int cell = calculus::cell_by_labels(*p, split_labels(delta));
            const auto problem = morse::depth_problem(p, cell, p->max_dim());
            const auto res = morse::collapse_search(problem, options.collapse);
            r["status"] = morse::to_string(res.status);
            r["delta"] = labels_json(*p, cell);
            r["expansions"] = res.expansions;
            if (res.status == SearchStatus::found)
                attach_certificate(r, *p, cert::from_collapse(problem, res.sequence.pairs, "endo-collapsible"));
            emit(r);
            return verdict_exit(res.status);
        }
        const auto info = morse::topology_info(k);
        const auto res = morse::is_endo_collapsible(p, info, options);
        r["status"] = morse::to_string(res.status);
        r["obstructed"] = res.obstructed;
        if (!res.reason.empty()) r["reason"] = res.reason;
        r["expansions"] = res.certificate.expansions;
        if (res.status == SearchStatus::found) {
            const auto& c = res.certificate;
            r["delta"] = labels_json(*p, c.delta);
            const auto problem = morse::depth_problem(p, c.delta, c.k);
            attach_certificate(r, *p, cert::from_collapse(problem, c.sequence.pairs, "endo-collapsible"));
        }
        emit(r);
        return verdict_exit(res.status);
    }

    int cdepth(const std::string& path, std::size_t max_facets)
    {
        const auto k = io::read_complex(path);
        const auto p = share(face_poset(k));
        morse::DepthOptions options;
        options.collapse = config.collapse();
        options.max_facets = max_facets;
        const auto res = morse::collapse_depth(p, morse::topology_info(k), options);
        json r;
        r["dim"] = res.dim;
        r["status"] = morse::to_string(res.status);
        r["upper_bound"] = res.upper.bound;
        r["upper_reason"] = res.upper.reason;
        r["expansions"] = res.expansions;
        r["budget_exhausted"] = res.budget_exhausted;
        if (res.witness) {
            r["value"] = res.k;
            r["delta"] = labels_json(*p, res.delta);
            const auto problem = morse::depth_problem(p, res.delta, res.k);
            attach_certificate(r, *p, cert::from_collapse(problem, res.sequence.pairs, "cdepth>=" + std::to_string(res.k)));
        } else {
            r["value"] = nullptr;
        }
        emit(r);
        if (!res.witness) return Exit::indeterminate;
        return res.status == morse::DepthStatus::lower_bound ? Exit::indeterminate : Exit::yes;
    }

    int hdepth(const std::string& path)
    {
        const auto k = io::read_complex(path);
        recognition::SearchOptions options;
        options.budget = config.budget;
        options.collapse = config.collapse();
        const auto res = recognition::hamiltonian_depth(k, options);
        json r;
        r["value"] = res.value;
        r["status"] = morse::to_string(res.status);
        r["expansions"] = res.expansions;
        r["reason"] = res.reason;
        json faces = json::array();
        for (const auto& f : res.witness_faces) faces.push_back(k.labels_of(f));
        r["witness_faces"] = faces;
        emit(r);
        return res.status == morse::DepthStatus::lower_bound ? Exit::indeterminate : Exit::yes;
    }

    int build_bc(const std::string& path, const std::string& delta)
    {
        const auto k = io::read_complex(path);
        const auto p = share(face_poset(k));
        const int d = p->max_dim();
        const int top = delta.empty() ? p->cells_of_dim(d).front() : calculus::cell_by_labels(*p, split_labels(delta));
        const auto f = calculus::pin_critical(p, top);
        json r = matching_summary(f);
        r["delta"] = labels_json(*p, top);
        attach_certificate(r, *p, cert::from_matching(f, f.polar() ? "polar" : "boundary-critical"));
        emit(r);
        return Exit::yes;
    }

    int verify(const std::string& path, const std::string& cert_path, bool relative)
    {
        const auto k = io::read_complex(path);
        const auto p = share(face_poset(k));
        const auto f = load_matching(p, cert_path);
        const auto rep = morse::verify_morse_inequalities(k, f, relative);
        json r = matching_summary(f);
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"k", row.k}, {"degree", row.degree}, {"homology", row.homology}, {"critical", row.critical},
                            {"holds", row.holds}});
        r["relative"] = rep.relative;
        r["rows"] = rows;
        r["euler_sum"] = rep.euler_sum;
        r["euler_characteristic"] = rep.euler_characteristic;
        r["euler_ok"] = rep.euler_ok;
        r["all_hold"] = rep.all_hold;
        emit(r);
        return rep.all_hold && rep.euler_ok ? Exit::yes : Exit::no;
    }

    int dualize(const std::string& path, const std::string& cert_path, const std::string& mode)
    {
        const auto k = io::read_complex(path);
        const auto p = share(face_poset(k));
        const auto f = load_matching(p, cert_path);
        const auto dual = calculus::dual_block_poset(p);
        const auto g = calculus::dualize_matching(dual, f, calculus::parse_dual_mode(mode));
        json r;
        r["mode"] = calculus::to_string(calculus::parse_dual_mode(mode));
        r["input"] = matching_summary(f);
        r["dual"] = matching_summary(g);
        r["dual_cells"] = dual.dual->size();
        if (write_if(config.out_path, io::format_poset_json(*dual.dual))) r["dual_poset_path"] = config.out_path;
        attach_certificate(r, *dual.dual, cert::from_matching(g, "dual"));
        emit(r);
        return Exit::yes;
    }

    void write_complex(json& r, const SimplicialComplex& k)
    {
        if (write_if(config.out_path, io::format_facets(k))) {
            r["complex_path"] = config.out_path;
        } else {
            json facets = json::array();
            for (const auto& f : k.facets()) facets.push_back(k.labels_of(f));
            r["facets"] = facets;
        }
    }

    int cone(const std::string& path, const std::string& cert_path, const std::string& apex)
    {
        const auto k = io::read_complex(path);
        const auto p = share(face_poset(k));
        const auto f = load_matching(p, cert_path);
        const auto res = calculus::cone_morse(k, f, apex);
        json r;
        r["input"] = matching_summary(f);
        r["cone"] = matching_summary(res.matching);
        write_complex(r, res.complex);
        attach_certificate(r, res.matching.host(), cert::from_matching(res.matching, "cone"));
        emit(r);
        return Exit::yes;
    }

    int patch(const std::vector<std::string>& files, const std::string& sigma)
    {
        if (files.size() != 5) fail(ErrorKind::invalid_input, "patch needs M1 M2 F G H");
        const auto m1 = io::read_complex(files[0]);
        const auto m2 = io::read_complex(files[1]);
        const auto f = load_matching(share(face_poset(m1)), files[2]);
        const auto g = load_matching(share(face_poset(m2)), files[3]);
        const auto meet = complex_intersection(m1, m2);
        const auto h = load_matching(share(face_poset(meet)), files[4]);
        const auto res = calculus::patch_morse(m1, m2, f, g, h, split_labels(sigma));
        json r;
        r["f"] = matching_summary(f);
        r["g"] = matching_summary(g);
        r["h"] = matching_summary(h);
        r["patched"] = matching_summary(res.matching);
        write_complex(r, res.complex);
        attach_certificate(r, res.matching.host(), cert::from_matching(res.matching, "patched"));
        emit(r);
        return Exit::yes;
    }

    int subdivide(const std::string& path, const std::string& cert_path, const std::string& direction)
    {
        const auto k = io::read_complex(path);
        const auto p = share(face_poset(k));
        const auto f = load_matching(p, cert_path);
        const auto res = calculus::subdivide_morse(k, f, calculus::parse_transfer(direction), {}, config.collapse());
        json r;
        r["direction"] = calculus::to_string(calculus::parse_transfer(direction));
        r["input"] = matching_summary(f);
        r["subdivided"] = matching_summary(res.matching);
        r["expected"] = res.expected;
        r["actual"] = res.actual;
        r["formula_holds"] = res.formula_holds;
        r["link_matchings"] = res.links.size();
        write_complex(r, res.complex);
        attach_certificate(r, res.matching.host(), cert::from_matching(res.matching, "subdivided"));
        emit(r);
        return res.formula_holds ? Exit::yes : Exit::no;
    }

    int lc_assemble(const std::string& script_path)
    {
        const auto d = lc::script_from_json(io::read_text(io::resolve_data_path(script_path)));
        const auto res = lc::lc_assemble(d.tree, d.script, config.strict);
        json r;
        r["simplicial"] = res.simplicial;
        r["tree_facets"] = d.tree.size();
        r["phase_a"] = d.script.phase_a.size();
        r["phase_b"] = d.script.phase_b.size();
        write_complex(r, res.complex);
        if (res.matching) {
            r["matching"] = matching_summary(*res.matching);
            attach_certificate(r, res.matching->host(), cert::from_matching(*res.matching, "lc-assembly"));
        }
        emit(r);
        return Exit::yes;
    }

    int lc_disassemble(const std::string& path, const std::string& cert_path)
    {
        const auto k = io::read_complex(path);
        const auto f = load_matching(share(face_poset(k)), cert_path);
        const auto d = lc::lc_disassemble(k, f);
        const auto text = lc::script_to_json(d.tree, d.script);
        if (write_if(config.out_path, text)) {
            json r;
            r["script_path"] = config.out_path;
            r["tree_facets"] = d.tree.size();
            r["phase_a"] = d.script.phase_a.size();
            r["phase_b"] = d.script.phase_b.size();
            emit(r);
        } else {
            out_ << text << "\n";
        }
        return Exit::yes;
    }

    int census(int d, int n, const std::string& predicate, int max_phase_a)
    {
        lc::CensusOptions options;
        options.d = d;
        options.n = n;
        options.predicate = lc::parse_census_predicate(predicate);
        options.max_phase_a = max_phase_a;
        options.budget = config.budget;
        options.threads = config.threads();
        const auto res = lc::census(options, [&](const lc::CensusProgress& p) {
            emit_line({{"event", "progress"},
                       {"trees_done", p.trees_done},
                       {"trees_total", p.trees_total},
                       {"types", p.types},
                       {"labeled", p.labeled}});
        });
        json r;
        r["event"] = "summary";
        r["d"] = d;
        r["N"] = n;
        r["predicate"] = lc::to_string(options.predicate);
        r["max_phase_a"] = max_phase_a;
        r["types"] = res.types.size();
        r["labeled"] = res.labeled.str();
        r["tree_types"] = res.tree_types;
        r["complete"] = res.complete;
        r["fuss_catalan"] = res.fuss_catalan_bound.str();
        json bounds = json::array();
        for (const auto& b : res.bounds)
            bounds.push_back({{"m", b.m}, {"count", b.count}, {"bound", b.bound.str()}, {"holds", b.holds}});
        r["bounds"] = bounds;
        r["bounds_hold"] = res.bounds_hold;
        json types = json::array();
        for (const auto& [key, t] : res.types)
            types.push_back({{"facets", t.example.facet_count()},
                             {"vertices", t.example.vertex_count()},
                             {"labeled", t.labeled},
                             {"phase_a", t.phase_a_counts},
                             {"hash", cert::hash_text(std::hash<std::string>{}(key))}});
        r["type_list"] = types;
        emit_line(r);
        if (!res.bounds_hold) return Exit::internal_error;
        return res.complete ? Exit::yes : Exit::indeterminate;
    }

    int bounds_fuss(int d, int n)
    {
        const auto v = lc::fuss_catalan(d, n);
        if (config.format == "json") emit({{"d", d}, {"N", n}, {"fuss_catalan", v.str()}});
        else out_ << v.str() << "\n";
        return Exit::yes;
    }

    int bounds_enumeration(int d, int n, int m, const std::string& e_bound)
    {
        auto e = lc::default_e_bound();
        if (!e_bound.empty()) e = parse_rational(e_bound);
        const auto b = lc::enumeration_bound(d, n, m, e);
        json r;
        r["d"] = d;
        r["N"] = n;
        r["m"] = m;
        r["e_bound"] = e.str();
        r["value"] = b.value.str();
        r["ceiling"] = b.ceiling.str();
        emit(r);
        return Exit::yes;
    }

    static lc::BigRational parse_rational(const std::string& text)
    {
        // decimal or p/q
        const auto slash = text.find('/');
        try {
            if (slash != std::string::npos)
                return lc::BigRational(lc::BigInt(text.substr(0, slash)), lc::BigInt(text.substr(slash + 1)));
            const auto dot = text.find('.');
            if (dot == std::string::npos) return lc::BigRational(lc::BigInt(text));
            const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            lc::BigInt den = 1;
            for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
            return lc::BigRational(lc::BigInt(digits), den);
        } catch (const std::exception&) {
            fail(ErrorKind::invalid_input, "cannot read '" + text + "' as a rational number");
        }
    }

    int generate(const std::string& kind, const std::vector<int>& sizes, const std::string& knot,
                 const std::vector<std::string>& removed, int d, int n, int steps)
    {
        SimplicialComplex k;
        json r;
        r["kind"] = kind;
        if (kind == "furch") {
            KnotSpec spec = knot == "trefoil" ? KnotSpec::trefoil() : KnotSpec::straight(knot_size(knot));
            const auto ball = furch_ball(spec);
            k = ball.ball();
            r["spanning_edge"] = {ball.spanning_edge[0], ball.spanning_edge[1]};
        } else if (kind == "pile") {
            if (sizes.size() != 3) fail(ErrorKind::invalid_input, "pile needs three sizes");
            std::vector<CubeCoord> cubes;
            for (const auto& c : removed) {
                const auto parts = split_labels(c);
                if (parts.size() != 3) fail(ErrorKind::invalid_input, "--remove takes x,y,z");
                cubes.push_back({std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])});
            }
            k = pile_of_cubes(sizes[0], sizes[1], sizes[2], cubes).triangulation;
        } else if (kind == "tree") {
            k = lc::random_tree_of_simplices(d, n, config.seed).complex;
        } else if (kind == "stacked-sphere") {
            k = stacked_sphere(d, steps, config.seed);
        } else {
            fail(ErrorKind::invalid_input, "unknown generator '" + kind + "'");
        }
        r["f_vector"] = k.f_vector();
        if (config.out_path.empty()) {
            if (kind == "furch")
                out_ << "# knotted spanning edge: " << r["spanning_edge"][0].get<std::string>() << " "
                     << r["spanning_edge"][1].get<std::string>() << "\n";
            out_ << io::format_facets(k);
            return Exit::yes;
        }
        io::write_text(config.out_path, io::format_facets(k));
        r["complex_path"] = config.out_path;
        emit(r);
        return Exit::yes;
    }

    static int knot_size(const std::string& knot)
    {
        if (knot.rfind("straight:", 0) == 0) return std::stoi(knot.substr(9));
        if (knot == "straight") return 3;
        fail(ErrorKind::invalid_input, "unknown knot '" + knot + "'", "use trefoil or straight:<n>");
    }

    int hierarchy(const std::string& path)
    {
        const auto k = io::read_complex(path);
        recognition::SearchOptions options;
        options.budget = config.budget;
        options.collapse = config.collapse();
        options.jobs = config.threads();
        const auto rep = recognition::hierarchy_report(k, options);
        emit(json::parse(recognition::to_json(rep)));
        if (!rep.consistent()) {
            note("hierarchy violated: " + rep.violations.front());
            return Exit::internal_error;
        }
        return Exit::yes;
    }

    int validate_cert(const std::string& path, const std::string& cert_path)
    {
        const auto p = load_poset(path);
        const auto v = cert::validate_json(p, io::read_text(io::resolve_data_path(cert_path)));
        json r;
        r["valid"] = v.ok;
        r["message"] = v.message;
        if (v.matching) r["matching"] = matching_summary(*v.matching);
        emit(r);
        return v.ok ? Exit::yes : Exit::no;
    }

private:
    std::ostream& out_;
    std::ostream& err_;
};

int error_exit(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::internal: return Exit::internal_error;
    default: return Exit::input_error;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Session s(out, err);
    auto& cfg = s.config;
    CLI::App app{"Discrete Morse theory toolkit for triangulated manifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    app.add_option("--seed", cfg.seed, "Seed for every randomised search")->capture_default_str();
    app.add_option("--budget", cfg.budget, "Node expansions per search")->capture_default_str();
    app.add_option("--field", cfg.field, "Coefficients: z, q, f2, fp:<p>")->capture_default_str();
    app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_flag("--strict,!--permissive", cfg.strict, "Reject non-simplicial quotients in LC assembly");
    app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
    app.add_option("--cert", cfg.cert_path, "Write the certificate here instead of into the report");
    app.add_option("--out", cfg.out_path, "Write the produced complex, poset or script here");

    std::function<int()> action;
    std::string file, file2, text_arg;
    std::string target = "point", strategy = "auto", predicate = "closed", delta, e_bound, knot = "trefoil";
    std::vector<std::string> list_arg, files;
    bool flag = false;
    int d = 2, n = 1, m = 0, steps = 0;
    std::size_t max_facets = 0;
    std::vector<int> sizes;

    auto input = [&](CLI::App* sub) { sub->add_option("complex", file, "Facet file")->required(); };
    auto with_cert = [&](CLI::App* sub) { sub->add_option("certificate", file2, "Matching certificate (JSON)")->required(); };

    auto* check = app.add_subcommand("check", "Pseudo-manifold check");
    input(check);
    check->callback([&] { action = [&] { return s.check(file); }; });

    auto* hom = app.add_subcommand("homology", "Simplicial homology");
    input(hom);
    hom->add_flag("--reduced", flag, "Reduced homology");
    hom->callback([&] { action = [&] { return s.homology_cmd(file, flag); }; });

    auto* ad = app.add_subcommand("adepth", "Algebraic depth (default field q)");
    input(ad);
    ad->callback([&] { action = [&] { return s.adepth(file); }; });

    auto* col = app.add_subcommand("collapse", "Search for a collapse");
    input(col);
    col->add_option("--target", target, "point, boundary or dim:<k>")->capture_default_str();
    col->add_option("--remove", list_arg, "Facet to delete first (comma-separated labels)");
    col->add_option("--strategy", strategy, "auto, lex, random or exhaustive")->capture_default_str();
    col->callback([&] { action = [&] { return s.collapse(file, target, list_arg, strategy); }; });

    auto* endo = app.add_subcommand("endo", "Endo-collapsibility search");
    input(endo);
    endo->add_option("--remove", list_arg, "Facet to delete first (comma-separated labels)");
    endo->add_option("--delta", delta, "Pin the removed top cell (comma-separated labels)");
    endo->callback([&] { action = [&] { return s.endo(file, list_arg, delta); }; });

    auto* cd = app.add_subcommand("cdepth", "Collapse depth");
    input(cd);
    cd->add_option("--max-facets", max_facets, "Top cells tried per depth (0 = all)");
    cd->callback([&] { action = [&] { return s.cdepth(file, max_facets); }; });

    auto* hd = app.add_subcommand("hdepth", "Hamiltonian depth");
    input(hd);
    hd->callback([&] { action = [&] { return s.hdepth(file); }; });

    auto* morse_cmd = app.add_subcommand("morse", "Build or verify matchings");
    morse_cmd->require_subcommand(1);
    auto* bc = morse_cmd->add_subcommand("build-bc", "Boundary-critical (or polar) matching");
    input(bc);
    bc->add_option("--delta", delta, "Critical top cell (comma-separated labels)");
    bc->callback([&] { action = [&] { return s.build_bc(file, delta); }; });
    auto* ver = morse_cmd->add_subcommand("verify", "Validate a matching and check the Morse inequalities");
    input(ver);
    with_cert(ver);
    ver->add_flag("--relative", flag, "Relative inequalities (boundary-critical matchings)");
    ver->callback([&] { action = [&] { return s.verify(file, file2, flag); }; });

    auto* du = app.add_subcommand("dualize", "Transfer a matching to the dual block decomposition");
    input(du);
    with_cert(du);
    du->add_option("--mode", text_arg, "bc-to-plain or plain-to-bc")->required();
    du->callback([&] { action = [&] { return s.dualize(file, file2, text_arg); }; });

    auto* co = app.add_subcommand("cone", "Cone a matching");
    input(co);
    with_cert(co);
    co->add_option("--apex", text_arg, "Apex label")->required();
    co->callback([&] { action = [&] { return s.cone(file, file2, text_arg); }; });

    auto* pa = app.add_subcommand("patch", "Patch two matchings along a common boundary part");
    pa->add_option("inputs", files, "M1 M2 F G H")->required()->expected(5);
    pa->add_option("--sigma", text_arg, "Pinned (d-1)-cell (comma-separated labels)")->required();
    pa->callback([&] { action = [&] { return s.patch(files, text_arg); }; });

    auto* sd = app.add_subcommand("subdivide", "Transfer a matching to the barycentric subdivision");
    input(sd);
    with_cert(sd);
    sd->add_option("--direction", text_arg, "bc-to-plain (1) or plain-to-bc (2)")->required();
    sd->callback([&] { action = [&] { return s.subdivide(file, file2, text_arg); }; });

    auto* lc_cmd = app.add_subcommand("lc", "Local constructibility");
    lc_cmd->require_subcommand(1);
    auto* as = lc_cmd->add_subcommand("assemble", "Run a gluing script");
    as->add_option("script", file, "Gluing script (JSON)")->required();
    as->callback([&] { action = [&] { return s.lc_assemble(file); }; });
    auto* dis = lc_cmd->add_subcommand("disassemble", "Cut a complex into a tree of simplices and a gluing script");
    input(dis);
    with_cert(dis);
    dis->callback([&] { action = [&] { return s.lc_disassemble(file, file2); }; });

    auto* cen = app.add_subcommand("census", "Exhaustive census of trees or LC gluings");
    cen->add_option("-d", d, "Dimension")->required();
    cen->add_option("-N", n, "Number of facets")->required();
    cen->add_option("--predicate", predicate, "trees, all or closed")->capture_default_str();
    cen->add_option("-m,--phase-a", m, "Largest number of non-adjacent gluings");
    cen->callback([&] { action = [&] { return s.census(d, n, predicate, m); }; });

    auto* bo = app.add_subcommand("bounds", "Counting bounds");
    bo->require_subcommand(1);
    auto* fc = bo->add_subcommand("fuss-catalan", "Fuss-Catalan number C_d(N)");
    fc->add_option("-d", d, "Dimension")->required();
    fc->add_option("-N", n, "Number of facets")->required();
    fc->callback([&] {
        if (std::find(args.begin(), args.end(), "--format") == args.end()) cfg.format = "text";
        action = [&] { return s.bounds_fuss(d, n); };
    });
    auto* en = bo->add_subcommand("enumeration", "Upper bound on combinatorial types");
    en->add_option("-d", d, "Dimension")->required();
    en->add_option("-N", n, "Number of facets")->required();
    en->add_option("-m", m, "Interior critical (d-1)-cells")->required();
    en->add_option("--e-bound", e_bound, "Rational upper bound for e (decimal or p/q)");
    en->callback([&] { action = [&] { return s.bounds_enumeration(d, n, m, e_bound); }; });

    auto* gen = app.add_subcommand("generate", "Write a generated complex");
    gen->add_option("kind", text_arg, "furch, pile, tree or stacked-sphere")->required();
    gen->add_option("--knot", knot, "furch: trefoil or straight:<n>")->capture_default_str();
    gen->add_option("--size", sizes, "pile: nx ny nz")->expected(3);
    gen->add_option("--remove", list_arg, "pile: cube x,y,z to remove");
    gen->add_option("-d", d, "tree / stacked-sphere: dimension");
    gen->add_option("-N", n, "tree: number of facets");
    gen->add_option("--steps", steps, "stacked-sphere: stacking steps");
    gen->callback([&] {
        if (sizes.empty()) sizes = {3, 3, 3};
        action = [&] { return s.generate(text_arg, sizes, knot, list_arg, d, n, steps); };
    });

    auto* hi = app.add_subcommand("hierarchy", "Shellable / constructible / endo-collapsible / LC report");
    input(hi);
    hi->callback([&] { action = [&] { return s.hierarchy(file); }; });

    auto* vc = app.add_subcommand("validate-cert", "Re-check a certificate");
    vc->add_option("complex", file, "Facet file, or poset JSON (*.json)")->required();
    vc->add_option("certificate", file2, "Certificate (JSON)")->required();
    vc->callback([&] { action = [&] { return s.validate_cert(file, file2); }; });

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("morselab");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return Exit::yes;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return Exit::yes;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return Exit::usage;
    }
    if (!action) return Exit::usage;
    try {
        return action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::input_error;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        if (!e.hint().empty()) err << "hint: " << e.hint() << "\n";
        return error_exit(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Exit::internal_error;
    }
}

}  // namespace morselab::cli
