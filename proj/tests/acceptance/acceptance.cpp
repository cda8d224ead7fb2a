// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "cli.hpp"
#include "pstskit/coloring.hpp"
#include "pstskit/family.hpp"
#include "pstskit/io.hpp"
#include "pstskit/reduction.hpp"
#include "pstskit/solver.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace pstskit;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt_seconds(double s)
{
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << "s";
    return o.str();
}

// ---------------------------------------------------------------- 1

Verdict psts15_validity()
{
    Verdict v;
    const auto start = Clock::now();
    const auto ts = psts15();
    v.require(validate(ts).valid && oracle::is_packing(ts), "valid PSTS(15)");
    v.require(ts.order() == 15 && ts.size() == 27, "15 points, 27 triples");
    const auto l = leave(ts);
    v.require(l.size() == 24, "24 leave edges");
    v.require(is_even(l), "leave even");
    v.require(connected_components(l).size() == 2, "two components");
    std::size_t deg2 = 0;
    for (Point x : l.vertices())
        deg2 += l.degree(x) == 2;
    v.require(deg2 == 6, "six vertices of degree 2");
    const double t = seconds_since(start);
    v.require(t < 1.0, "runtime < 1s");
    v.note("edges=" + std::to_string(l.size()) + " components=" + std::to_string(connected_components(l).size()) +
           " degree2=" + std::to_string(deg2) + " time=" + fmt_seconds(t));
    return v;
}

// ---------------------------------------------------------------- 2

Verdict psts15_chromatic_index()
{
    Verdict v;
    const auto start = Clock::now();
    const auto l = leave(psts15());
    const auto ci = chromatic_index(l);
    v.require(ci.status == Status::proved_yes && ci.chromatic_index == 4, "chromatic index 4");
    v.require(ci.coloring && is_proper(*ci.coloring) && ci.coloring->palette.size() == 4, "explicit 4-colouring");
    std::uint64_t mismatches = 0;
    const auto e = enumerate_colorings(l, 4, [&](const EdgeColoring& c) {
        mismatches += missing_colors(c, 1) != missing_colors(c, 2);
        return true;
    });
    v.require(e.exhausted, "enumeration exhausted");
    v.require(mismatches == 0, "missing sets at 1 and 2 agree");
    const double t = seconds_since(start);
    v.require(t < 300.0, "runtime < 5min");
    v.note("chi'=" + std::to_string(ci.chromatic_index) + " colourings=" + std::to_string(e.visited) +
           " exhausted=" + (e.exhausted ? "yes" : "no") + " mismatches=" + std::to_string(mismatches) +
           " time=" + fmt_seconds(t));
    return v;
}

// ---------------------------------------------------------------- 3

Verdict counterexample_verdict()
{
    Verdict v;
    const auto start = Clock::now();
    const auto r = check_conjecture(leave(psts15()), 4);
    v.require(r.cond1 && r.cond2 && r.cond3, "conditions 1-3");
    v.require(r.witness_source == "L", "G = L");
    v.require(r.cond4_ii_value == 0, "w^2-(u+1)w+2|E| = 0");
    v.require(r.cond4, "condition 4");
    v.require(r.decomposition == Status::proved_no, "L v K_4 ProvedNo");
    const double t = seconds_since(start);
    v.require(t < 3600.0, "runtime < 60min");
    v.note("conditions=" + std::string(r.conditions_hold() ? "all true" : "not all") +
           " value=" + std::to_string(r.cond4_ii_value) + " decomposition=" + std::string(to_string(r.decomposition)) +
           " nodes=" + std::to_string(r.decomposition_effort) + " time=" + fmt_seconds(t));
    return v;
}

// ---------------------------------------------------------------- 4

Verdict gadget_sweep()
{
    Verdict v;
    const auto start = Clock::now();
    std::vector<Graph> corpus;
    for (std::size_t n : {4u, 6u, 8u, 10u})
        for (auto& g : oracle::cubic_graphs(n))
            corpus.push_back(std::move(g));
    const std::pair<const char*, Graph> named[] = {
        {"K4", k4_graph()},          {"K33", k33_graph()},
        {"prism3", prism_graph(3)},  {"prism4", prism_graph(4)},
        {"prism5", prism_graph(5)},  {"moebius4", moebius_ladder_graph(4)},
        {"moebius5", moebius_ladder_graph(5)}, {"petersen", petersen_graph()},
    };
    for (const auto& [name, g] : named) {
        bool found = false;
        for (const auto& c : corpus)
            found = found || oracle::isomorphic(c, g);
        v.require(found, std::string(name) + " in corpus");
    }
    std::size_t yes = 0, agree = 0;
    bool petersen_no = false;
    for (const auto& g : corpus) {
        const auto z = fresh_labels(g.vertices(), 3);
        TrianglePackingProblem p;
        p.host = join(make_edgeless(z), g);
        const auto d = exact_k3_decompose(p);
        const auto ci = chromatic_index(g);
        const bool class1 = ci.status == Status::proved_yes && ci.chromatic_index == 3;
        const bool decomposes = d.status == Status::proved_yes;
        if (d.status != Status::unknown && class1 == decomposes && class1 == oracle::k_edge_colorable(g, 3))
            ++agree;
        if (decomposes) {
            ++yes;
            v.require(verify_packing(p.host, {}, *d.witness, true), "witness verifies");
        }
        if (oracle::isomorphic(g, petersen_graph()))
            petersen_no = d.status == Status::proved_no;
    }
    v.require(agree == corpus.size(), "decomposable iff 3-edge-colourable");
    v.require(petersen_no, "Petersen ProvedNo");
    const double t = seconds_since(start);
    v.require(t < 300.0, "runtime < 5min");
    v.note("graphs=" + std::to_string(corpus.size()) + " agree=" + std::to_string(agree) +
           " decomposable=" + std::to_string(yes) + " time=" + fmt_seconds(t));
    return v;
}

// ---------------------------------------------------------------- 5

Verdict oracle_equivalence()
{
    Verdict v;
    const auto start = Clock::now();
    std::size_t checked = 0, disagreements = 0;
    auto compare = [&](const Graph& g) {
        TrianglePackingProblem p;
        p.host = g;
        const auto a = exact_k3_decompose(p);
        const auto b = brute_force_k3_decompose(g);
        const bool truth = oracle::k3_decomposable(g);
        ++checked;
        if (a.status == Status::unknown || a.status != b.status || (a.status == Status::proved_yes) != truth)
            ++disagreements;
    };
    for (std::size_t n = 1; n <= 8; ++n)
        oracle::for_each_even_graph(n, [&](const Graph& g) {
            if (g.size() % 3 == 0)
                compare(g);
        });
    const std::size_t exhaustive = checked;
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<std::size_t> size(3, 9);
    std::uniform_real_distribution<double> density(0.3, 0.9);
    for (int i = 0; i < 200; ++i)
        compare(oracle::random_graph(rng, size(rng), density(rng), i % 2 == 0));
    v.require(disagreements == 0, "zero disagreements");
    v.note("exhaustive=" + std::to_string(exhaustive) + " random=200 disagreements=" + std::to_string(disagreements) +
           " time=" + fmt_seconds(seconds_since(start)));
    return v;
}

// ---------------------------------------------------------------- 6

Verdict doyen_wilson()
{
    Verdict v;
    const auto start = Clock::now();
    const auto yes = decompose_complete_minus_hole(15, 7, 1);
    const auto hole = iota_points(0, 7);
    const auto host = subtract(make_complete(iota_points(0, 15)), make_complete(hole));
    v.require(yes.status == Status::proved_yes && verify_packing(host, {hole}, *yes.witness, true),
              "(15,7) ProvedYes with verified witness");
    const auto a = decompose_complete_minus_hole(13, 5, 1);
    const auto b = decompose_complete_minus_hole(13, 7, 1);
    v.require(a.status == Status::proved_no, "(13,5) ProvedNo");
    v.require(b.status == Status::proved_no, "(13,7) ProvedNo");
    const double t = seconds_since(start);
    v.require(t < 60.0, "runtime < 1min");
    v.note("(15,7)=" + std::string(to_string(yes.status)) + " (13,5)=" + std::string(to_string(a.status)) + " [" +
           a.reason + "] (13,7)=" + std::string(to_string(b.status)) + " [" + b.reason + "] time=" + fmt_seconds(t));
    return v;
}

// ---------------------------------------------------------------- 7

/// Colours 1, 2 alternately along the Hamilton cycle 0→1→…→k−1→2k−1→2k−2→…→k→0
/// of prism(k) (k odd), colour 3 on the remaining perfect matching.
EdgeColoring hamilton_coloring(std::size_t k)
{
    const auto g = prism_graph(k);
    EdgeColoring c(g, standard_palette(3));
    std::vector<Point> cycle;
    for (Point i = 0; i < k; ++i)
        cycle.push_back(i);
    for (Point i = 0; i < k; ++i)
        cycle.push_back(static_cast<Point>(2 * k - 1 - i));
    for (std::size_t i = 0; i < cycle.size(); ++i)
        c.set(cycle[i], cycle[(i + 1) % cycle.size()], i % 2 == 0 ? 1 : 2);
    for (const auto& e : g.edges())
        if (c.color(e.a, e.b) == EdgeColoring::unassigned)
            c.set(e.a, e.b, 3);
    return c;
}

Verdict reduction_pipeline()
{
    Verdict v;
    const auto start = Clock::now();
    const auto g = prism_graph(37);
    const auto gamma = hamilton_coloring(37);
    v.require(is_proper(gamma), "Hamilton 3-colouring proper");
    const auto check = check_params(74, 339, 451);
    v.require(check.ok() && check.params->u_prime == 325 && check.params->d == 126, "u'=325, d=126");
    const auto b = build_background(g, 339, 451, 7);
    v.require(b.status == Status::proved_yes, "build_background");
    if (!b.witness) {
        v.note(b.reason);
        return v;
    }
    const auto audit = verify_background(*b.witness);
    v.require(audit.ok, "verify_background");
    const auto& inst = *b.witness;
    Graph expect = join(make_edgeless(inst.z()), inst.source);
    expect = graph_union(expect, make_complete_bipartite(inst.a_prime(), inst.d_points()));
    const auto work = inst.working_points();
    v.require(induced_subgraph(leave(inst.system), work) == with_vertices(expect, work), "leave equals the gadget");
    v.require(audit.a_prime_min == 126 && audit.a_prime_max == 126, "A' minus Z degree 126");
    v.require(audit.z_min == 200 && audit.z_max == 200, "Z degree 200");
    v.require(audit.g_internal_min == 3 && audit.g_internal_max == 3, "G-vertices degree 3 in G");
    const auto emb = certify_yes(inst, gamma, 7);
    v.require(emb.status == Status::proved_yes, "certify_yes");
    if (!emb.witness) {
        v.note(emb.reason);
        return v;
    }
    v.require(emb.witness->order() == 451 && is_embedding(inst.system, *emb.witness), "verified STS(451) embedding");
    const auto back = extract_coloring(inst, *emb.witness);
    v.require(is_proper(back) && back.graph == g && back.palette.size() == 3, "extracted 3-colouring proper");
    const double t = seconds_since(start);
    v.require(t < 1800.0, "runtime < 30min");
    v.note("u'=" + std::to_string(check.params->u_prime) + " d=" + std::to_string(check.params->d) +
           " degrees A'=" + std::to_string(audit.a_prime_min) + " Z=" + std::to_string(audit.z_min) +
           " G=" + std::to_string(audit.g_internal_min) + "(+" + std::to_string(audit.g_to_z_min) +
           " to Z) triples=" + std::to_string(emb.witness->size()) + " time=" + fmt_seconds(t));
    return v;
}

// ---------------------------------------------------------------- 8

Verdict family_sweep()
{
    Verdict v;
    const auto start = Clock::now();
    std::size_t instances = 0;
    for (int w = 6; w <= 40; w += 2)
        for (long long u : family_orders(w, 3)) {
            ++instances;
            const std::string tag = "(u=" + std::to_string(u) + ",w=" + std::to_string(w) + ") ";
            v.require(u % 2 == 1 && u >= 4 * w + 1 && ((u + w) % 6 == 1 || (u + w) % 6 == 3), tag + "order");
            const auto f = build_family_leave(u, w);
            const auto m = static_cast<long long>(f.leave.size());
            v.require(2 * m == w * (u - w + 1), tag + "|E| = w(u-w+1)/2");
            v.require(is_even(f.leave), tag + "even");
            v.require(f.leave.max_degree() == static_cast<std::size_t>(w), tag + "max degree w");
            v.require((u * (u - 1) / 2 - m) % 3 == 0, tag + "|E| = C(u,2) mod 3");
            const auto k2 = koenig_coloring(f.l2);
            const auto c1 = l1_canonical_coloring(w);
            const auto v3 = vizing_coloring(f.l3);
            v.require(is_proper(k2) && k2.palette.size() == static_cast<std::size_t>(w), tag + "Koenig on L2");
            v.require(is_proper(c1) && c1.palette.size() == static_cast<std::size_t>(w), tag + "canonical on L1");
            v.require(is_proper(v3) && v3.palette.size() <= static_cast<std::size_t>(w), tag + "Vizing on L3");
            const auto gamma = family_coloring(f);
            v.require(is_proper(gamma) && colors_used(gamma) == static_cast<std::size_t>(w), tag + "chi' = w");
            const auto l31 = check_lemma31(f.leave, w, f.d1, f.d2, Lemma31Mode::structural, default_exact_budget,
                                           &gamma);
            v.require(l31.holds(), tag + "structural conditions");
        }
    const double t = seconds_since(start);
    v.require(t < 60.0, "runtime < 1min");
    v.note("instances=" + std::to_string(instances) + " time=" + fmt_seconds(t));
    return v;
}

// ---------------------------------------------------------------- 9

Verdict l1_checks()
{
    Verdict v;
    const auto start = Clock::now();
    std::string counts;
    for (int w : {4, 6}) {
        const auto r = enumerate_l1(w);
        v.require(r.exhausted, "w=" + std::to_string(w) + " enumeration exhausted");
        v.require(r.all_equal, "w=" + std::to_string(w) + " missing sets agree");
        counts += " w" + std::to_string(w) + "=" + std::to_string(r.visited);
    }
    for (int w = 4; w <= 40; w += 2) {
        const auto c = l1_canonical_coloring(w);
        const auto m1 = missing_colors(c, 1), m2 = missing_colors(c, 2);
        v.require(is_proper(c) && colors_used(c) == static_cast<std::size_t>(w) && m1.size() == 2 && m1 == m2,
                  "canonical colouring w=" + std::to_string(w));
    }
    const double t = seconds_since(start);
    v.require(t < 600.0, "runtime < 10min");
    v.note("colourings" + counts + " canonical w=4..40 ok time=" + fmt_seconds(t));
    return v;
}

// ---------------------------------------------------------------- 10

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

// Runs the CLI and returns stdout plus the named output files, in order.
std::string capture(const std::vector<std::string>& args, const std::vector<fs::path>& files)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    std::string all = "exit=" + std::to_string(code) + "\n" + out.str();
    for (const auto& f : files)
        all += "\n--- " + f.filename().string() + "\n" + slurp(f);
    return all;
}

Verdict determinism()
{
    Verdict v;
    const auto start = Clock::now();
    const fs::path dir = fs::temp_directory_path() / "pstskit_acceptance_determinism";
    const auto p = [&](const char* name) { return (dir / name).string(); };
    auto once = [&] {
        fs::remove_all(dir);
        fs::create_directories(dir);
        write_text_file(p("prism37.graph"), format_graph(prism_graph(37)));
        write_text_file(p("hamilton.ecol"), format_coloring(hamilton_coloring(37)));
        std::string s;
        s += capture({"counterexample", "--w", "4", "--seed", "7", "--out", p("ce")},
                     {p("ce.psts"), p("ce.leave.graph")});
        s += capture({"reduce", "--graph", p("prism37.graph"), "-u", "339", "-v", "451", "--seed", "7", "--out",
                      p("bg")},
                     {p("bg.psts"), p("bg.meta")});
        s += capture({"certify", "--background", p("bg.psts"), "--coloring", p("hamilton.ecol"), "--seed", "7",
                      "--out", p("emb.psts")},
                     {p("emb.psts")});
        s += capture({"extract", "--background", p("bg.psts"), "--embedding", p("emb.psts"), "--out", p("g.ecol")},
                     {p("g.ecol")});
        return s;
    };
    const auto first = once();
    const auto second = once();
    fs::remove_all(dir);
    v.require(first == second, "byte-identical reports and witnesses");
    v.require(first.find("exit=0\ncommand=counterexample") != std::string::npos, "counterexample run succeeded");
    v.require(first.find("exit=0\ncommand=certify") != std::string::npos, "certify run succeeded");
    v.note("compared_bytes=" + std::to_string(first.size()) + " time=" + fmt_seconds(seconds_since(start)));
    return v;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "psts15 validity", psts15_validity},
        {2, "chromatic index of the psts15 leave", psts15_chromatic_index},
        {3, "counterexample verdict", counterexample_verdict},
        {4, "cubic-graph gadget equivalence sweep", gadget_sweep},
        {5, "exact solver vs brute-force oracle", oracle_equivalence},
        {6, "Doyen-Wilson wrapper", doyen_wilson},
        {7, "full reduction pipeline at n=74, u=339, v=451", reduction_pipeline},
        {8, "family arithmetic sweep", family_sweep},
        {9, "L1 exhaustive and canonical colourings", l1_checks},
        {10, "determinism of criteria 3 and 7", determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failed += !v.pass;
        std::cout << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << " | " << c.name << " | "
                  << v.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
