#include "pstskit/solver.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <stdexcept>

namespace pstskit {

DivisibilityReport necessary_conditions(const Graph& g)
{
    DivisibilityReport r;
    for (Point x : g.vertices())
        if (g.degree(x) % 2 != 0) {
            r.ok = false;
            r.failures.push_back("vertex " + std::to_string(x) + " has odd degree " + std::to_string(g.degree(x)));
            break;
        }
    if (g.size() % 3 != 0) {
        r.ok = false;
        r.failures.push_back("edge count " + std::to_string(g.size()) + " is not divisible by 3");
    }
    return r;
}

bool verify_packing(const Graph& host, const std::vector<std::vector<Point>>& holes, const Packing& triples,
                    bool require_cover, std::string* why)
{
    auto fail = [&](std::string msg) {
        if (why != nullptr)
            *why = std::move(msg);
        return false;
    };
    std::vector<char> used(host.size(), 0);
    for (const auto& t : triples) {
        const auto name = "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
        for (const auto& hole : holes) {
            const auto inside = [&](Point x) { return std::find(hole.begin(), hole.end(), x) != hole.end(); };
            if (inside(t.a) && inside(t.b) && inside(t.c))
                return fail("triple " + name + " lies inside a hole");
        }
        for (auto [x, y] : {std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}}) {
            const int e = host.edge_index(x, y);
            if (e < 0)
                return fail("triple " + name + " uses non-edge " + std::to_string(x) + " " + std::to_string(y));
            if (used[e])
                return fail("edge " + std::to_string(x) + " " + std::to_string(y) + " covered twice");
            used[e] = 1;
        }
    }
    if (require_cover)
        for (std::size_t e = 0; e < host.size(); ++e)
            if (!used[e])
                return fail("edge " + std::to_string(host.edges()[e].a) + " " + std::to_string(host.edges()[e].b) +
                            " is not covered");
    return true;
}

Graph packing_leave(const Graph& host, const Packing& triples)
{
    std::vector<Edge> covered;
    for (const auto& t : triples) {
        covered.push_back({t.a, t.b});
        covered.push_back({t.a, t.c});
        covered.push_back({t.b, t.c});
    }
    std::sort(covered.begin(), covered.end());
    std::vector<Edge> rest;
    std::set_difference(host.edges().begin(), host.edges().end(), covered.begin(), covered.end(),
                        std::back_inserter(rest));
    return Graph({host.vertices().begin(), host.vertices().end()}, std::move(rest));
}

DecompositionOutcome brute_force_k3_decompose(const Graph& g, std::uint64_t budget)
{
    if (g.size() > brute_force_edge_limit)
        throw std::invalid_argument("brute_force_k3_decompose: more than " + std::to_string(brute_force_edge_limit) +
                                    " edges");
    DecompositionOutcome out;
    const int n = static_cast<int>(g.order());
    std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
    auto cov = [&](int x, int y) -> char& { return covered[static_cast<std::size_t>(x) * n + y]; };
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges())
        edges.emplace_back(g.index_of(e.a), g.index_of(e.b));
    std::vector<std::array<int, 3>> chosen;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    auto set = [&](int x, int y, int z, char v) {
        cov(x, y) = cov(y, x) = v;
        cov(x, z) = cov(z, x) = v;
        cov(y, z) = cov(z, y) = v;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        while (from < edges.size() && cov(edges[from].first, edges[from].second))
            ++from;
        if (from == edges.size())
            return true;
        const auto [x, y] = edges[from];
        for (int z = 0; z < n; ++z) {
            if (z == x || z == y || !g.adjacent_index(x, z) || !g.adjacent_index(y, z) || cov(x, z) || cov(y, z))
                continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            set(x, y, z, 1);
            chosen.push_back({x, y, z});
            if (rec(from + 1))
                return true;
            chosen.pop_back();
            set(x, y, z, 0);
            if (out_of_budget)
                return false;
        }
        return false;
    };
    const bool found = rec(0);
    out.effort = std::min(nodes, budget);
    if (found) {
        out.status = Status::proved_yes;
        Packing p;
        for (const auto& t : chosen)
            p.push_back(make_triple(g.label(t[0]), g.label(t[1]), g.label(t[2])));
        std::sort(p.begin(), p.end());
        out.witness = std::move(p);
    } else if (out_of_budget) {
        out.status = Status::unknown;
        out.reason = "node budget exhausted";
    } else {
        out.status = Status::proved_no;
    }
    return out;
}

DecompositionOutcome hill_climb(const TrianglePackingProblem& p, const HillClimbOptions& options)
{
    DecompositionOutcome out;
    const Graph& g = p.host;
    if (auto nc = necessary_conditions(g); !nc) {
        out.status = Status::proved_no;
        out.reason = nc.failures.front();
        return out;
    }
    const int n = static_cast<int>(g.order());
    const auto nn = static_cast<std::size_t>(n);
    const std::size_t m = g.size();
    const std::uint64_t budget = p.budget == 0 ? default_climb_budget : p.budget;

    std::vector<std::uint64_t> mask(nn, 0);
    for (std::size_t h = 0; h < p.holes.size() && h < 64; ++h)
        for (Point x : p.holes[h])
            if (int i = g.index_of(x); i >= 0)
                mask[i] |= std::uint64_t{1} << h;

    // third[x*n+y]: third point of the triple on pair xy, or -1.
    std::vector<int> third(nn * nn, -1);
    // Uncovered neighbours of each vertex, with positions for O(1) removal.
    std::vector<std::vector<int>> open(nn);
    std::vector<int> slot(nn * nn, -1);
    std::vector<int> live;
    std::vector<int> live_slot(nn, -1);
    for (int x = 0; x < n; ++x) {
        for (int y : g.neighbor_indices(x)) {
            slot[static_cast<std::size_t>(x) * nn + y] = static_cast<int>(open[x].size());
            open[x].push_back(y);
        }
        if (!open[x].empty()) {
            live_slot[x] = static_cast<int>(live.size());
            live.push_back(x);
        }
    }
    auto drop_live = [&](int x) {
        const int s = live_slot[x];
        const int last = live.back();
        live[s] = last;
        live_slot[last] = s;
        live.pop_back();
        live_slot[x] = -1;
    };
    auto add_live = [&](int x) {
        if (live_slot[x] >= 0)
            return;
        live_slot[x] = static_cast<int>(live.size());
        live.push_back(x);
    };
    auto close_half = [&](int x, int y) {
        auto& list = open[x];
        const int s = slot[static_cast<std::size_t>(x) * nn + y];
        const int last = list.back();
        list[s] = last;
        slot[static_cast<std::size_t>(x) * nn + last] = s;
        list.pop_back();
        slot[static_cast<std::size_t>(x) * nn + y] = -1;
        if (list.empty())
            drop_live(x);
    };
    auto open_half = [&](int x, int y) {
        slot[static_cast<std::size_t>(x) * nn + y] = static_cast<int>(open[x].size());
        open[x].push_back(y);
        add_live(x);
    };
    auto cover_pair = [&](int x, int y, int z) {
        third[static_cast<std::size_t>(x) * nn + y] = z;
        third[static_cast<std::size_t>(y) * nn + x] = z;
        close_half(x, y);
        close_half(y, x);
    };
    auto uncover_pair = [&](int x, int y) {
        third[static_cast<std::size_t>(x) * nn + y] = -1;
        third[static_cast<std::size_t>(y) * nn + x] = -1;
        open_half(x, y);
        open_half(y, x);
    };
    auto add_triple = [&](int x, int y, int z) {
        cover_pair(x, y, z);
        cover_pair(x, z, y);
        cover_pair(y, z, x);
    };
    auto remove_triple = [&](int x, int y, int z) {
        uncover_pair(x, y);
        uncover_pair(x, z);
        uncover_pair(y, z);
    };

    std::mt19937_64 rng(p.seed);
    auto pick = [&](std::size_t bound) {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
    };
    std::size_t covered = 0;
    std::uint64_t iterations = 0;
    while (covered < m && iterations < budget) {
        ++iterations;
        const int x = live[pick(live.size())];
        const auto& nb = open[x];
        const auto i = pick(nb.size());
        auto j = pick(nb.size() - 1);
        if (j >= i)
            ++j;
        const int y = nb[i];
        const int z = nb[j];
        if (!g.adjacent_index(y, z) || (mask[x] & mask[y] & mask[z]))
            continue;
        const int w = third[static_cast<std::size_t>(y) * nn + z];
        if (w < 0) {
            add_triple(x, y, z);
            covered += 3;
        } else {
            // xy and xz are open, so the only conflict is the triple on yz.
            remove_triple(y, z, w);
            add_triple(x, y, z);
        }
        if (options.on_move)
            options.on_move(covered);
    }
    out.effort = iterations;
    if (covered < m) {
        out.status = Status::unknown;
        out.reason = "iteration budget exhausted with " + std::to_string(m - covered) + " edges uncovered";
        return out;
    }
    Packing triples;
    triples.reserve(m / 3);
    for (int x = 0; x < n; ++x)
        for (int y : g.neighbor_indices(x)) {
            if (y <= x)
                continue;
            const int z = third[static_cast<std::size_t>(x) * nn + y];
            if (z > y)
                triples.push_back(make_triple(g.label(x), g.label(y), g.label(z)));
        }
    std::sort(triples.begin(), triples.end());
    out.status = Status::proved_yes;
    out.witness = std::move(triples);
    return out;
}

namespace {

long long choose2(long long k)
{
    return k * (k - 1) / 2;
}

std::vector<Point> sorted_set(std::vector<Point> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void require_subset(const std::vector<Point>& sub, const std::vector<Point>& super, const char* what)
{
    if (!std::includes(super.begin(), super.end(), sub.begin(), sub.end()))
        throw std::invalid_argument(std::string(what) + " is not a subset of the point set");
}

Graph complete_minus_holes(const std::vector<Point>& vset, const std::vector<std::vector<Point>>& holes)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vset.size(); ++i)
        for (std::size_t j = i + 1; j < vset.size(); ++j) {
            bool inside = false;
            for (const auto& h : holes)
                if (std::binary_search(h.begin(), h.end(), vset[i]) && std::binary_search(h.begin(), h.end(), vset[j]))
                    inside = true;
            if (!inside)
                edges.push_back({vset[i], vset[j]});
        }
    return Graph(vset, std::move(edges));
}

// Under condition (ii) W = V∖(A∪B) has |B∖A| points and every edge between
// A∖B and B∖A needs its third point in W, which forces a Latin rectangle.
// A plain climb covers W early and then stalls, so the rectangle is laid
// down cyclically and only the rest is climbed: K_W minus the pairing edges,
// joined to the independent set A∩B. Returns nothing when the cyclic
// pairing does not fit.
std::optional<DecompositionOutcome> structured_double_hole(const std::vector<Point>& vset,
                                                           const std::vector<Point>& a,
                                                           const std::vector<Point>& b,
                                                           const std::vector<Point>& ab, std::uint64_t seed,
                                                           std::uint64_t budget)
{
    std::vector<Point> a_only, b_only, both, w;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(a_only));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(b_only));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    std::set_difference(vset.begin(), vset.end(), both.begin(), both.end(), std::back_inserter(w));
    const std::size_t s = a_only.size();
    const std::size_t t = b_only.size();
    if (t == 0 || w.size() != t || s > t || (t - s) % 2 != 0 || 2 * (t - s) >= t + 2)
        return std::nullopt;
    if (!ab.empty() && t % 2 != 0)
        return std::nullopt;

    Packing triples;
    std::vector<Edge> paired;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < t; ++j)
            triples.push_back(make_triple(a_only[i], b_only[j], w[(i + j) % t]));
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t k = 0; k < (t - s) / 2; ++k) {
            const Point p = w[(j + s + k) % t];
            const Point q = w[(j + t - 1 - k) % t];
            triples.push_back(make_triple(b_only[j], p, q));
            paired.push_back(make_edge(p, q));
        }
    std::sort(paired.begin(), paired.end());

    std::vector<Point> rest_points = w;
    rest_points.insert(rest_points.end(), ab.begin(), ab.end());
    std::vector<Edge> rest_edges;
    for (std::size_t x = 0; x < t; ++x) {
        for (std::size_t y = x + 1; y < t; ++y) {
            const auto e = make_edge(w[x], w[y]);
            if (!std::binary_search(paired.begin(), paired.end(), e))
                rest_edges.push_back(e);
        }
        for (Point z : ab)
            rest_edges.push_back(make_edge(w[x], z));
    }
    TrianglePackingProblem p;
    p.host = Graph(std::move(rest_points), std::move(rest_edges));
    if (ab.size() >= 2)
        p.holes = {ab};
    p.seed = seed;
    p.budget = budget;
    auto out = hill_climb(p);
    if (out.status == Status::proved_yes) {
        triples.insert(triples.end(), out.witness->begin(), out.witness->end());
        std::sort(triples.begin(), triples.end());
        out.witness = std::move(triples);
    }
    return out;
}

}  // namespace

DecompositionOutcome decompose_with_hole(std::vector<Point> vset, std::vector<Point> hole, std::uint64_t seed,
                                         std::uint64_t budget)
{
    vset = sorted_set(std::move(vset));
    hole = sorted_set(std::move(hole));
    require_subset(hole, vset, "hole");
    const auto v = static_cast<long long>(vset.size());
    // A hole of size 0 has the same host as a hole of size 1.
    const long long w = std::max<long long>(static_cast<long long>(hole.size()), v > 0 ? 1 : 0);
    DecompositionOutcome out;
    std::vector<std::string> failures;
    if (v % 2 == 0 || w % 2 == 0)
        failures.push_back("v and w must both be odd (v=" + std::to_string(v) + ", w=" + std::to_string(w) + ")");
    if (v < 2 * w + 1 && !(v == 1 && w == 1))
        failures.push_back("v=" + std::to_string(v) + " < 2w+1=" + std::to_string(2 * w + 1));
    if ((choose2(v) - choose2(w)) % 3 != 0)
        failures.push_back("C(v,2)-C(w,2)=" + std::to_string(choose2(v) - choose2(w)) + " is not divisible by 3");
    if (!failures.empty()) {
        out.status = Status::proved_no;
        for (const auto& f : failures)
            out.reason += (out.reason.empty() ? "" : "; ") + f;
        return out;
    }
    TrianglePackingProblem p;
    p.holes = hole.size() >= 2 ? std::vector<std::vector<Point>>{hole} : std::vector<std::vector<Point>>{};
    p.host = complete_minus_holes(vset, p.holes);
    p.seed = seed;
    p.budget = budget;
    return hill_climb(p);
}

DecompositionOutcome decompose_complete_minus_hole(std::size_t v, std::size_t w, std::uint64_t seed,
                                                   std::uint64_t budget)
{
    if (w > v) {
        DecompositionOutcome out;
        out.status = Status::proved_no;
        out.reason = "hole larger than the point set";
        return out;
    }
    return decompose_with_hole(iota_points(0, v), iota_points(0, w), seed, budget);
}

std::string DoubleHoleConditions::failures() const
{
    std::string out;
    auto add = [&](bool ok, const char* name) {
        if (!ok)
            out += (out.empty() ? "" : ",") + std::string(name);
    };
    add(i, "(i)");
    add(ii, "(ii)");
    add(iii, "(iii)");
    add(iv, "(iv)");
    add(v, "(v)");
    return out;
}

DoubleHoleConditions double_hole_conditions(long long nv, long long na, long long nb, long long nab)
{
    DoubleHoleConditions c;
    c.i = nb >= na;
    c.ii = nv == 2 * nb + na - 2 * nab;
    c.iii = na % 2 == 1 && nb % 2 == 1;
    c.iv = na >= 2 * nab + 1;
    c.v = ((nb - nab) * (na - 2 * nab - 1)) % 3 == 0;
    return c;
}

DecompositionOutcome decompose_double_hole(std::vector<Point> vset, std::vector<Point> a, std::vector<Point> b,
                                           std::uint64_t seed, std::uint64_t budget)
{
    vset = sorted_set(std::move(vset));
    a = sorted_set(std::move(a));
    b = sorted_set(std::move(b));
    require_subset(a, vset, "A");
    require_subset(b, vset, "B");
    if (a.size() < 2 && b.size() < 2) {
        TrianglePackingProblem p;
        p.host = make_complete(vset);
        p.seed = seed;
        p.budget = budget;
        return hill_climb(p);
    }
    if (a.size() < 2)
        return decompose_with_hole(std::move(vset), std::move(b), seed, budget);
    if (b.size() < 2)
        return decompose_with_hole(std::move(vset), std::move(a), seed, budget);
    if (a.size() > b.size())
        std::swap(a, b);
    std::vector<Point> ab;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
    const auto cond = double_hole_conditions(static_cast<long long>(vset.size()), static_cast<long long>(a.size()),
                                             static_cast<long long>(b.size()), static_cast<long long>(ab.size()));
    if (!cond.all()) {
        DecompositionOutcome out;
        out.status = Status::unknown;
        out.reason = "sufficient conditions " + cond.failures() + " fail";
        return out;
    }
    if (auto built = structured_double_hole(vset, a, b, ab, seed, budget))
        return *built;
    TrianglePackingProblem p;
    p.holes = {a, b};
    p.host = complete_minus_holes(vset, p.holes);
    p.seed = seed;
    p.budget = budget;
    return hill_climb(p);
}

}  // namespace pstskit
