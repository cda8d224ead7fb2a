#include "pstskit/reduction.hpp"

#include "pstskit/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pstskit {

namespace {

std::string str(long long x)
{
    return std::to_string(x);
}

std::string joined(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : "; ") + p;
    return out;
}

std::vector<Point> range_points(long long first, long long last)
{
    if (last < first)
        return {};
    return iota_points(static_cast<Point>(first), static_cast<std::size_t>(last - first + 1));
}

long long floor_div(long long a, long long b)
{
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

long long working_order(long long n, long long u, long long v)
{
    long long cap = std::min(u, floor_div(2 * v + n + 1, 3));
    const long long target = ((v % 6) + 6) % 6;
    while (cap >= 1 && ((cap % 6) + 6) % 6 != target)
        --cap;
    return cap;
}

}  // namespace

ParamCheck check_params(long long n, long long u, long long v, ReductionMode mode)
{
    ParamCheck out;
    auto& bad = out.violations;
    const bool strict = mode == ReductionMode::strict;

    if (n < 4 || n % 2 != 0)
        bad.push_back("n=" + str(n) + " is not the order of a cubic graph");
    if (strict && n < 74)
        bad.push_back("n=" + str(n) + " < 74");
    if (!is_admissible(v))
        bad.push_back("v=" + str(v) + " is not admissible");
    if (u > v)
        bad.push_back("u=" + str(u) + " > v=" + str(v));
    if (strict && u < 4 * n + 43)
        bad.push_back("u=" + str(u) + " < 4n+43=" + str(4 * n + 43));
    if (strict && v > 2 * u - 2 * n - 13)
        bad.push_back("v=" + str(v) + " > 2u-2n-13=" + str(2 * u - 2 * n - 13));
    if (!bad.empty())
        return out;

    BackgroundParams p;
    p.n = n;
    p.u = u;
    p.v = v;
    p.u_prime = working_order(n, u, v);
    p.d = v - p.u_prime;
    p.a_prime = p.u_prime - p.d - n - 1;
    p.working_case = 3 * u <= 2 * v + n + 1 ? 1 : 2;
    out.params = p;
    if (p.u_prime < 1) {
        bad.push_back("no working order u' <= min(u, (2v+n+1)/3) with u' = v mod 6");
        return out;
    }

    const long long up = p.u_prime;
    const long long d = p.d;
    if (strict) {
        if (up < 3 * n + 5)
            bad.push_back("u'=" + str(up) + " < 3n+5=" + str(3 * n + 5));
        if (3 * up - n - 1 > 2 * v)
            bad.push_back("v=" + str(v) + " < (3u'-n-1)/2");
        if (v > 2 * up - 2 * n - 3)
            bad.push_back("v=" + str(v) + " > 2u'-2n-3=" + str(2 * up - 2 * n - 3));
        if (p.working_case == 1 && up < u - 5)
            bad.push_back("case 1 requires u-5 <= u'");
        if (p.working_case == 2 && up <= 3 * n + 23)
            bad.push_back("case 2 requires u' > 3n+23");
    }
    if (!is_admissible(up))
        bad.push_back("u'=" + str(up) + " is not admissible");
    if (d % 6 != 0)
        bad.push_back("d=" + str(d) + " is not divisible by 6");
    if (d < n + 2)
        bad.push_back("d=" + str(d) + " < n+2=" + str(n + 2));
    if (p.a_prime < 3)
        bad.push_back("|A'|=" + str(p.a_prime) + " leaves no room for Z");
    const long long a = up - d;
    if (strict && a < 2 * n + 1)
        bad.push_back("|A|=" + str(a) + " < 2n+1");
    const auto dh = double_hole_conditions(v, a, d + n + 1, n + 1);
    if (!dh.all())
        bad.push_back("double-hole conditions " + dh.failures() + " fail");
    return out;
}

long long select_working_order(long long n, long long u, long long v, ReductionMode mode)
{
    const auto check = check_params(n, u, v, mode);
    if (!check.params || check.params->u_prime < 1)
        throw std::invalid_argument(joined(check.violations));
    if (mode == ReductionMode::strict && !check.ok())
        throw std::invalid_argument(joined(check.violations));
    return check.params->u_prime;
}

std::vector<Point> BackgroundInstance::graph_points() const
{
    return range_points(0, params.n - 1);
}

Point BackgroundInstance::x() const
{
    return static_cast<Point>(params.n);
}

std::vector<Point> BackgroundInstance::d_points() const
{
    return range_points(params.n + 1, params.n + params.d);
}

std::vector<Point> BackgroundInstance::a_prime() const
{
    return range_points(params.n + params.d + 1, params.u_prime - 1);
}

std::vector<Point> BackgroundInstance::z() const
{
    return range_points(params.n + params.d + 1, params.n + params.d + 3);
}

std::vector<Point> BackgroundInstance::padding() const
{
    return range_points(params.u_prime, params.u - 1);
}

std::vector<Point> BackgroundInstance::working_points() const
{
    return range_points(0, params.u_prime - 1);
}

std::vector<Point> BackgroundInstance::extension_points() const
{
    return range_points(params.u, params.v - 1);
}

namespace {

// (K̄_Z ∨ G) ∪ K_{A′,D} on the working set.
Graph expected_leave(const BackgroundInstance& b)
{
    const auto z = b.z();
    std::vector<Edge> edges(b.source.edges().begin(), b.source.edges().end());
    for (Point g : b.graph_points())
        for (Point c : z)
            edges.push_back(make_edge(g, c));
    for (Point a : b.a_prime())
        for (Point d : b.d_points())
            edges.push_back(make_edge(a, d));
    return Graph(b.working_points(), std::move(edges));
}

template <class F>
void degree_range(std::span<const Point> pts, F&& f, std::size_t& lo, std::size_t& hi)
{
    lo = hi = 0;
    bool first = true;
    for (Point p : pts) {
        const std::size_t k = f(p);
        lo = first ? k : std::min(lo, k);
        hi = first ? k : std::max(hi, k);
        first = false;
    }
}

}  // namespace

BackgroundAudit verify_background(const BackgroundInstance& b)
{
    BackgroundAudit out;
    auto fail = [&](std::string why) {
        out.ok = false;
        out.failures.push_back(std::move(why));
    };
    const auto& p = b.params;
    if (auto r = validate(b.system); !r) {
        fail("system is not a PSTS: " + r.message);
        return out;
    }
    if (p.u_prime < 1 || p.d < 0 || p.a_prime < 3 || p.u_prime > p.u || p.u_prime + p.d != p.v ||
        p.n + 1 + p.d + p.a_prime != p.u_prime) {
        fail("partition sizes are inconsistent");
        return out;
    }
    const auto all = range_points(0, p.u - 1);
    if (!std::equal(b.system.points().begin(), b.system.points().end(), all.begin(), all.end())) {
        fail("point set is not 0..u-1");
        return out;
    }
    if (b.source.order() != static_cast<std::size_t>(p.n) || !is_cubic(b.source) ||
        !std::ranges::equal(b.source.vertices(), b.graph_points())) {
        fail("source is not a cubic graph on 0..n-1");
        return out;
    }
    if (b.source_labels.size() != b.source.order())
        fail("source label list has the wrong length");

    const auto pad = b.padding();
    for (const auto& t : b.system.triples())
        for (Point q : {t.a, t.b, t.c})
            if (std::binary_search(pad.begin(), pad.end(), q)) {
                fail("padding point " + std::to_string(q) + " lies in a triple");
                break;
            }

    const auto work = b.working_points();
    const Graph got = induced_subgraph(leave(b.system), work);
    const Graph want = expected_leave(b);
    if (!(got == want)) {
        std::vector<Edge> extra, missing;
        std::ranges::set_difference(got.edges(), want.edges(), std::back_inserter(extra));
        std::ranges::set_difference(want.edges(), got.edges(), std::back_inserter(missing));
        std::string why = "leave differs from (K_Z-bar v G) u K_{A',D}:";
        if (!extra.empty())
            why += " " + std::to_string(extra.size()) + " extra (first " + std::to_string(extra[0].a) + "-" +
                   std::to_string(extra[0].b) + ")";
        if (!missing.empty())
            why += " " + std::to_string(missing.size()) + " missing (first " + std::to_string(missing[0].a) + "-" +
                   std::to_string(missing[0].b) + ")";
        fail(why);
    }

    const auto z = b.z();
    const auto ap = b.a_prime();
    std::vector<Point> ap_rest;
    std::ranges::set_difference(ap, z, std::back_inserter(ap_rest));
    const auto gp = b.graph_points();
    auto count_in = [&](Point x, const std::vector<Point>& set) {
        std::size_t k = 0;
        for (Point y : got.neighbors(x))
            k += std::binary_search(set.begin(), set.end(), y);
        return k;
    };
    degree_range(ap_rest, [&](Point y) { return got.degree(y); }, out.a_prime_min, out.a_prime_max);
    degree_range(z, [&](Point y) { return got.degree(y); }, out.z_min, out.z_max);
    degree_range(gp, [&](Point y) { return count_in(y, gp); }, out.g_internal_min, out.g_internal_max);
    degree_range(gp, [&](Point y) { return count_in(y, z); }, out.g_to_z_min, out.g_to_z_max);
    const auto d = static_cast<std::size_t>(p.d);
    const auto n = static_cast<std::size_t>(p.n);
    if (!ap_rest.empty() && (out.a_prime_min != d || out.a_prime_max != d))
        fail("degree audit: A' \\ Z degrees " + std::to_string(out.a_prime_min) + ".." +
             std::to_string(out.a_prime_max) + ", expected " + std::to_string(d));
    if (out.z_min != d + n || out.z_max != d + n)
        fail("degree audit: Z degrees " + std::to_string(out.z_min) + ".." + std::to_string(out.z_max) +
             ", expected " + std::to_string(d + n));
    if (out.g_internal_min != 3 || out.g_internal_max != 3)
        fail("degree audit: G-vertices do not have 3 neighbours in V(G)");
    if (out.g_to_z_min != 3 || out.g_to_z_max != 3)
        fail("degree audit: G-vertices do not have 3 neighbours in Z");
    if (got.degree(b.x()) != 0)
        fail("degree audit: x is not isolated in the leave");
    return out;
}

BackgroundInstance background_from_parts(TripleSystem system, const BackgroundParams& params,
                                         std::vector<Point> source_labels, ReductionMode mode)
{
    if (params.n < 1 || params.u < params.n || static_cast<long long>(system.order()) != params.u)
        throw std::invalid_argument("background sizes do not match the system");
    if (auto r = validate(system); !r)
        throw std::invalid_argument("invalid system: " + r.message);
    BackgroundInstance b;
    b.params = params;
    b.mode = mode;
    const auto gp = range_points(0, params.n - 1);
    b.source = induced_subgraph(leave(system), gp);
    if (source_labels.empty())
        source_labels = gp;
    b.source_labels = std::move(source_labels);
    b.system = std::move(system);
    return b;
}

BackgroundOutcome build_background(const Graph& g, long long u, long long v, std::uint64_t seed,
                                   std::uint64_t budget, ReductionMode mode, unsigned attempts)
{
    if (!is_cubic(g))
        throw std::invalid_argument("source graph is not cubic");
    const long long n = static_cast<long long>(g.order());
    const auto check = check_params(n, u, v, mode);
    if (!check.ok())
        throw std::invalid_argument(joined(check.violations));
    if (budget == 0)
        budget = climb_budget_from_env();
    attempts = std::max(attempts, 1u);

    BackgroundInstance b;
    b.params = *check.params;
    b.mode = mode;
    b.source_labels.assign(g.vertices().begin(), g.vertices().end());
    std::unordered_map<Point, Point> to_index;
    for (std::size_t i = 0; i < b.source_labels.size(); ++i)
        to_index[b.source_labels[i]] = static_cast<Point>(i);
    b.source = relabel(g, to_index);

    BackgroundOutcome out;
    const auto z = b.z();
    const auto a_second = range_points(0, n);  // V(G) ∪ {x}
    std::vector<Point> a = a_second;
    const auto ap = b.a_prime();
    a.insert(a.end(), ap.begin(), ap.end());
    const Graph kzg = join(make_edgeless(z), b.source);
    TrianglePackingProblem b0;
    b0.host = subtract(make_complete(a), kzg);
    if (auto nc = necessary_conditions(b0.host); !nc)
        throw std::invalid_argument("K_A - (K_Z-bar v G) fails divisibility: " + joined(nc.failures));
    b0.budget = budget;

    std::optional<Packing> first;
    for (unsigned attempt = 0; attempt < attempts && !first; ++attempt) {
        b0.seed = derive_seed(seed, "background:b0", attempt);
        auto r = hill_climb(b0);
        out.effort += r.effort;
        if (r.status == Status::proved_yes)
            first = std::move(r.witness);
    }
    if (!first) {
        out.status = Status::unknown;
        out.reason = "stage b0 (K_A - (K_Z-bar v G)): no decomposition after " + std::to_string(attempts) +
                     " attempts";
        return out;
    }

    std::vector<Point> hole_set = a_second;
    const auto dp = b.d_points();
    hole_set.insert(hole_set.end(), dp.begin(), dp.end());
    std::optional<Packing> second;
    for (unsigned attempt = 0; attempt < attempts && !second; ++attempt) {
        auto r = decompose_with_hole(hole_set, a_second, derive_seed(seed, "background:b1", attempt), budget);
        out.effort += r.effort;
        if (r.status == Status::proved_yes)
            second = std::move(r.witness);
        else if (r.status == Status::proved_no)
            throw std::invalid_argument("stage b1: " + r.reason);
    }
    if (!second) {
        out.status = Status::unknown;
        out.reason = "stage b1 (K_{A''+D} - K_{A''}): no decomposition after " + std::to_string(attempts) +
                     " attempts";
        return out;
    }

    std::vector<Triple> triples = std::move(*first);
    triples.insert(triples.end(), second->begin(), second->end());
    b.system = TripleSystem(range_points(0, u - 1), std::move(triples));
    if (auto audit = verify_background(b); !audit)
        throw std::logic_error("constructed background fails verification: " + joined(audit.failures));
    out.status = Status::proved_yes;
    out.witness = std::move(b);
    return out;
}

SearchOutcome<TripleSystem> certify_yes(const BackgroundInstance& b, const EdgeColoring& gamma, std::uint64_t seed,
                                        std::uint64_t budget, unsigned attempts)
{
    if (!(gamma.graph == b.source) || gamma.palette.size() != 3 || !is_proper(gamma))
        throw std::invalid_argument("colouring is not a proper 3-edge-colouring of the source graph");
    if (auto audit = verify_background(b); !audit)
        throw std::invalid_argument("background fails verification: " + joined(audit.failures));
    if (budget == 0)
        budget = climb_budget_from_env();
    attempts = std::max(attempts, 1u);

    const auto z = b.z();
    const auto dagger = coloring_to_decomposition(b.source, gamma, z);

    const auto& p = b.params;
    std::vector<Point> a = range_points(0, p.n);
    const auto ap = b.a_prime();
    a.insert(a.end(), ap.begin(), ap.end());
    std::vector<Point> bset = range_points(0, p.n + p.d);
    const auto vset = range_points(0, p.v - 1);

    SearchOutcome<TripleSystem> out;
    for (unsigned attempt = 0; attempt < attempts; ++attempt) {
        auto r = decompose_double_hole(vset, a, bset, derive_seed(seed, "certify:double-hole", attempt), budget);
        out.effort += r.effort;
        out.status = r.status;
        out.reason = r.reason;
        if (r.status != Status::unknown || r.reason.starts_with("sufficient conditions")) {
            if (r.status == Status::proved_yes) {
                std::vector<Triple> all(b.system.triples().begin(), b.system.triples().end());
                all.insert(all.end(), dagger.begin(), dagger.end());
                all.insert(all.end(), r.witness->begin(), r.witness->end());
                TripleSystem sts(vset, std::move(all));
                if (!is_embedding(b.system, sts))
                    throw std::logic_error("assembled system is not an embedding of the background");
                out.witness = std::move(sts);
            }
            break;
        }
    }
    if (out.status == Status::unknown)
        out.reason = "stage double-hole: " + out.reason;
    return out;
}

EdgeColoring extract_coloring(const BackgroundInstance& b, const TripleSystem& emb)
{
    if (static_cast<long long>(emb.order()) != b.params.v)
        throw std::invalid_argument("embedding has order " + std::to_string(emb.order()) + ", expected " +
                                    std::to_string(b.params.v));
    if (!validate(emb) || !validate(b.system) || !is_embedding(b.system, emb))
        throw std::invalid_argument("not an embedding of the background");
    const auto z = b.z();
    const auto n = static_cast<Point>(b.params.n);
    auto inside = [&](Point q) { return q < n || std::binary_search(z.begin(), z.end(), q); };
    std::vector<Triple> packing;
    for (const auto& t : emb.triples())
        if (!b.system.has_triple(t) && inside(t.a) && inside(t.b) && inside(t.c))
            packing.push_back(t);
    try {
        return decomposition_to_coloring(packing, b.source, z);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("inconsistent embedding: ") + e.what());
    }
}

}  // namespace pstskit
