#pragma once

// Test-only reference implementations. Nothing here calls into the solver
// or colouring code of the library; only the Graph container is shared.

#include "pstskit/graph.hpp"
#include "pstskit/triple_system.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using pstskit::Edge;
using pstskit::Graph;
using pstskit::Point;

inline Graph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& es)
{
    std::vector<Point> vs(n);
    std::iota(vs.begin(), vs.end(), Point{0});
    std::vector<Edge> edges;
    for (auto [a, b] : es)
        edges.push_back(pstskit::make_edge(static_cast<Point>(a), static_cast<Point>(b)));
    return Graph(vs, edges);
}

// Adjacency matrix over indices 0..n-1, independent of Graph's internals.
struct Matrix {
    std::size_t n = 0;
    std::vector<std::vector<bool>> adj;

    explicit Matrix(const Graph& g) : n(g.order()), adj(n, std::vector<bool>(n, false))
    {
        for (const auto& e : g.edges()) {
            const auto i = static_cast<std::size_t>(g.index_of(e.a));
            const auto j = static_cast<std::size_t>(g.index_of(e.b));
            adj[i][j] = adj[j][i] = true;
        }
    }
};

// ------------------------------------------------------------- isomorphism

inline std::vector<std::uint64_t> vertex_invariants(const Matrix& m)
{
    std::vector<std::uint64_t> inv(m.n);
    for (std::size_t v = 0; v < m.n; ++v) {
        std::uint64_t deg = 0, tri = 0;
        std::vector<int> dist(m.n, -1);
        std::vector<std::size_t> queue{v};
        dist[v] = 0;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (std::size_t y = 0; y < m.n; ++y)
                if (m.adj[queue[q]][y] && dist[y] < 0) {
                    dist[y] = dist[queue[q]] + 1;
                    queue.push_back(y);
                }
        std::uint64_t layers = 0;
        for (std::size_t y = 0; y < m.n; ++y) {
            deg += m.adj[v][y];
            if (dist[y] > 0)
                layers += std::uint64_t{1} << (4 * dist[y]);
            for (std::size_t z = y + 1; z < m.n; ++z)
                tri += m.adj[v][y] && m.adj[v][z] && m.adj[y][z];
        }
        inv[v] = deg | (tri << 8) | (layers << 16);
    }
    return inv;
}

/// Plain backtracking isomorphism test guided by vertex invariants.
inline bool isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    const Matrix a(g), b(h);
    const auto ia = vertex_invariants(a), ib = vertex_invariants(b);
    {
        auto sa = ia, sb = ib;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    const std::size_t n = a.n;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> go = [&](std::size_t v) {
        if (v == n)
            return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || ia[v] != ib[w])
                continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                ok = a.adj[v][u] == b.adj[w][static_cast<std::size_t>(map[u])];
            if (!ok)
                continue;
            map[v] = static_cast<int>(w);
            used[w] = true;
            if (go(v + 1))
                return true;
            used[w] = false;
        }
        map[v] = -1;
        return false;
    };
    return go(0);
}

// ------------------------------------------------------------- cubic graphs

/// Every cubic graph on n vertices up to isomorphism (n even, n ≤ 10),
/// connected or not. Edges are added at the lowest vertex still short of
/// degree 3; among untouched vertices only the smallest is tried.
inline std::vector<Graph> cubic_graphs(std::size_t n)
{
    std::vector<Graph> reps;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::function<void()> go = [&] {
        int v = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (deg[i] < 3) {
                v = static_cast<int>(i);
                break;
            }
        if (v < 0) {
            Graph g = from_edges(n, edges);
            for (const auto& r : reps)
                if (isomorphic(r, g))
                    return;
            reps.push_back(std::move(g));
            return;
        }
        bool fresh_tried = false;
        for (std::size_t w = static_cast<std::size_t>(v) + 1; w < n; ++w) {
            if (deg[w] >= 3 || adj[v][w])
                continue;
            if (deg[w] == 0) {
                if (fresh_tried)
                    continue;
                fresh_tried = true;
            }
            adj[v][w] = adj[w][v] = true;
            ++deg[v];
            ++deg[w];
            edges.emplace_back(v, static_cast<int>(w));
            go();
            edges.pop_back();
            --deg[v];
            --deg[w];
            adj[v][w] = adj[w][v] = false;
        }
    };
    go();
    return reps;
}

inline bool connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    const Matrix m(g);
    std::vector<bool> seen(m.n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < m.n; ++y)
            if (m.adj[x][y] && !seen[y]) {
                seen[y] = true;
                ++count;
                stack.push_back(y);
            }
    }
    return count == m.n;
}

// ------------------------------------------------------------- colourings

/// Calls visit(colour per edge, in g.edges() order) for every proper
/// k-edge-colouring with colours 0..k-1. Labelled: no symmetry breaking.
/// visit returns false to stop.
inline void for_each_coloring(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& visit)
{
    const auto es = g.edges();
    std::vector<int> col(es.size(), -1);
    bool stop = false;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (stop)
            return;
        if (i == es.size()) {
            stop = !visit(col);
            return;
        }
        for (int c = 0; c < k && !stop; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                const bool touch = es[j].a == es[i].a || es[j].a == es[i].b || es[j].b == es[i].a ||
                                   es[j].b == es[i].b;
                ok = !(touch && col[j] == c);
            }
            if (!ok)
                continue;
            col[i] = c;
            go(i + 1);
        }
        col[i] = -1;
    };
    go(0);
}

inline bool k_edge_colorable(const Graph& g, int k)
{
    bool found = false;
    for_each_coloring(g, k, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

inline int chromatic_index(const Graph& g)
{
    int k = 0;
    while (!k_edge_colorable(g, k))
        ++k;
    return k;
}

/// Colours missing at x under a labelled colouring from for_each_coloring.
inline std::set<int> missing(const Graph& g, const std::vector<int>& col, int k, Point x)
{
    std::set<int> m;
    for (int c = 0; c < k; ++c)
        m.insert(c);
    const auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (es[i].a == x || es[i].b == x)
            m.erase(col[i]);
    return m;
}

// ------------------------------------------------------------- triangles

/// Naive K3-decomposability: every subset of triangles, by recursion on the
/// first uncovered edge, with no shared code path with the library.
inline bool k3_decomposable(const Graph& g)
{
    const Matrix m(g);
    std::vector<std::vector<bool>> left = m.adj;
    std::size_t remaining = g.size();
    if (remaining % 3 != 0)
        return false;
    std::function<bool()> go = [&] {
        if (remaining == 0)
            return true;
        std::size_t a = 0, b = 0;
        bool found = false;
        for (a = 0; a < m.n && !found; ++a)
            for (b = a + 1; b < m.n; ++b)
                if (left[a][b]) {
                    found = true;
                    break;
                }
        --a;
        for (std::size_t c = 0; c < m.n; ++c) {
            if (!left[a][c] || !left[b][c])
                continue;
            left[a][b] = left[b][a] = left[a][c] = left[c][a] = left[b][c] = left[c][b] = false;
            remaining -= 3;
            if (go())
                return true;
            remaining += 3;
            left[a][b] = left[b][a] = left[a][c] = left[c][a] = left[b][c] = left[c][b] = true;
        }
        return false;
    };
    return go();
}

// ------------------------------------------------------------- corpora

/// All labelled even graphs on 0..n-1 (n ≥ 1): any edge set on the first
/// n-1 vertices, then the last vertex fixes the parities.
inline void for_each_even_graph(std::size_t n, const std::function<void(const Graph&)>& visit)
{
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a + 1 < n; ++a)
        for (std::size_t b = a + 1; b + 1 < n; ++b)
            pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> es;
        std::vector<int> deg(n, 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) {
                es.push_back(pairs[i]);
                ++deg[static_cast<std::size_t>(pairs[i].first)];
                ++deg[static_cast<std::size_t>(pairs[i].second)];
            }
        for (std::size_t a = 0; a + 1 < n; ++a)
            if (deg[a] % 2)
                es.emplace_back(static_cast<int>(a), static_cast<int>(n - 1));
        visit(from_edges(n, es));
    }
}

/// G(n, p) with the given generator; when make_even, a final pass toggles
/// edges to the last vertex so every degree is even.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool make_even)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            adj[a][b] = adj[b][a] = coin(rng);
    if (make_even && n > 0)
        for (std::size_t a = 0; a + 1 < n; ++a) {
            std::size_t d = 0;
            for (std::size_t b = 0; b < n; ++b)
                d += adj[a][b];
            if (d % 2)
                adj[a][n - 1] = adj[n - 1][a] = !adj[a][n - 1];
        }
    std::vector<std::pair<int, int>> es;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (adj[a][b])
                es.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return from_edges(n, es);
}

// ------------------------------------------------------------- systems

/// Pair coverage counted from scratch: true iff no pair is in two triples
/// and all triples use points of the system.
inline bool is_packing(const pstskit::TripleSystem& ts)
{
    std::set<std::pair<Point, Point>> seen;
    std::set<Point> pts(ts.points().begin(), ts.points().end());
    for (const auto& t : ts.triples()) {
        const std::array<Point, 3> p{t.a, t.b, t.c};
        for (auto x : p)
            if (!pts.count(x))
                return false;
        if (p[0] == p[1] || p[1] == p[2] || p[0] == p[2])
            return false;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!seen.insert({std::min(p[i], p[j]), std::max(p[i], p[j])}).second)
                    return false;
    }
    return true;
}

/// Number of pairs of points covered by no triple.
inline std::size_t uncovered_pairs(const pstskit::TripleSystem& ts)
{
    const std::size_t u = ts.order();
    return u * (u - 1) / 2 - 3 * ts.size();
}

}  // namespace oracle
