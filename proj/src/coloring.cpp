#include "pstskit/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pstskit {

EdgeColoring::EdgeColoring(Graph g, std::vector<ColorId> palette_colors)
    : graph(std::move(g)), palette(std::move(palette_colors)), assignment(graph.size(), unassigned)
{
    std::sort(palette.begin(), palette.end());
}

EdgeColoring::EdgeColoring(Graph g, std::vector<ColorId> palette_colors, std::vector<ColorId> colors)
    : graph(std::move(g)), palette(std::move(palette_colors)), assignment(std::move(colors))
{
    std::sort(palette.begin(), palette.end());
    if (assignment.size() != graph.size())
        throw std::invalid_argument("colour vector length does not match the edge count");
}

ColorId EdgeColoring::color(Point x, Point y) const
{
    const int e = graph.edge_index(x, y);
    if (e < 0)
        throw std::out_of_range("no edge " + std::to_string(x) + " " + std::to_string(y));
    return assignment[static_cast<std::size_t>(e)];
}

void EdgeColoring::set(Point x, Point y, ColorId c)
{
    const int e = graph.edge_index(x, y);
    if (e < 0)
        throw std::out_of_range("no edge " + std::to_string(x) + " " + std::to_string(y));
    assignment[static_cast<std::size_t>(e)] = c;
}

std::vector<ColorId> standard_palette(std::size_t c)
{
    std::vector<ColorId> p(c);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

bool is_proper(const EdgeColoring& c)
{
    const auto& g = c.graph;
    if (c.assignment.size() != g.size())
        return false;
    if (std::adjacent_find(c.palette.begin(), c.palette.end()) != c.palette.end())
        return false;
    for (ColorId col : c.assignment)
        if (col == EdgeColoring::unassigned || !std::binary_search(c.palette.begin(), c.palette.end(), col))
            return false;
    for (int i = 0; i < static_cast<int>(g.order()); ++i) {
        std::vector<ColorId> seen;
        for (int j : g.neighbor_indices(i))
            seen.push_back(c.assignment[static_cast<std::size_t>(g.edge_index_by_index(i, j))]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            return false;
    }
    return true;
}

std::size_t colors_used(const EdgeColoring& c)
{
    std::vector<ColorId> used;
    for (ColorId col : c.assignment)
        if (col != EdgeColoring::unassigned)
            used.push_back(col);
    std::sort(used.begin(), used.end());
    return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

std::vector<ColorId> missing_colors(const EdgeColoring& c, Point x)
{
    const int i = c.graph.index_of(x);
    if (i < 0)
        throw std::out_of_range("unknown vertex " + std::to_string(x));
    std::vector<ColorId> hit;
    for (int j : c.graph.neighbor_indices(i))
        hit.push_back(c.assignment[static_cast<std::size_t>(c.graph.edge_index_by_index(i, j))]);
    std::sort(hit.begin(), hit.end());
    std::vector<ColorId> out;
    std::set_difference(c.palette.begin(), c.palette.end(), hit.begin(), hit.end(), std::back_inserter(out));
    return out;
}

namespace {

struct EdgeEnds {
    int a;
    int b;
};

std::vector<EdgeEnds> edge_ends(const Graph& g)
{
    std::vector<EdgeEnds> out;
    out.reserve(g.size());
    for (const auto& e : g.edges())
        out.push_back({g.index_of(e.a), g.index_of(e.b)});
    return out;
}

// Complete k-colouring search, most-constrained edge first. Colours not yet
// used anywhere are interchangeable, so only the lowest of them is tried.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, std::size_t k, std::uint64_t budget)
        : g_(g), ends_(edge_ends(g)), k_(static_cast<int>(k)), budget_(budget), color_(g.size(), -1),
          used_(g.order(), 0), count_(k, 0)
    {
        full_ = k_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1;
    }

    Status run()
    {
        const auto r = search(g_.size());
        return r;
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& colors() const { return color_; }

private:
    Status search(std::size_t remaining)
    {
        if (remaining == 0)
            return Status::proved_yes;
        int best = -1;
        int best_size = 65;
        for (std::size_t e = 0; e < ends_.size(); ++e) {
            if (color_[e] >= 0)
                continue;
            const auto avail = full_ & ~(used_[ends_[e].a] | used_[ends_[e].b]);
            const int size = std::popcount(avail);
            if (size < best_size) {
                best_size = size;
                best = static_cast<int>(e);
                if (size == 0)
                    return Status::proved_no;
            }
        }
        const auto [a, b] = ends_[static_cast<std::size_t>(best)];
        auto avail = full_ & ~(used_[a] | used_[b]);
        bool any_unknown = false;
        bool tried_fresh = false;
        while (avail) {
            const int col = std::countr_zero(avail);
            avail &= avail - 1;
            if (count_[col] == 0) {
                if (tried_fresh)
                    continue;
                tried_fresh = true;
            }
            if (++nodes_ > budget_)
                return Status::unknown;
            assign(best, a, b, col);
            const auto r = search(remaining - 1);
            if (r == Status::proved_yes)
                return r;
            unassign(best, a, b, col);
            if (r == Status::unknown) {
                any_unknown = true;
                break;
            }
        }
        return any_unknown ? Status::unknown : Status::proved_no;
    }

    void assign(int e, int a, int b, int col)
    {
        color_[e] = col;
        used_[a] |= std::uint64_t{1} << col;
        used_[b] |= std::uint64_t{1} << col;
        ++count_[col];
    }

    void unassign(int e, int a, int b, int col)
    {
        color_[e] = -1;
        used_[a] &= ~(std::uint64_t{1} << col);
        used_[b] &= ~(std::uint64_t{1} << col);
        --count_[col];
    }

    const Graph& g_;
    std::vector<EdgeEnds> ends_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t full_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<int> color_;
    std::vector<std::uint64_t> used_;
    std::vector<int> count_;
};

}  // namespace

SearchOutcome<EdgeColoring> find_edge_coloring(const Graph& g, std::size_t k, std::uint64_t budget)
{
    SearchOutcome<EdgeColoring> out;
    if (g.size() == 0) {
        out.status = Status::proved_yes;
        out.witness = EdgeColoring(g, standard_palette(k));
        return out;
    }
    if (k < g.max_degree()) {
        out.status = Status::proved_no;
        out.reason = "fewer colours than the maximum degree";
        return out;
    }
    if (k > 64) {
        out.status = Status::unknown;
        out.reason = "palettes above 64 colours are not searched";
        return out;
    }
    ColoringSearch search(g, k, budget);
    out.status = search.run();
    out.effort = search.nodes();
    if (out.status == Status::proved_yes) {
        std::vector<ColorId> colors;
        for (int c : search.colors())
            colors.push_back(c + 1);
        out.witness = EdgeColoring(g, standard_palette(k), std::move(colors));
    } else if (out.status == Status::unknown) {
        out.reason = "node budget exhausted";
    }
    return out;
}

ChromaticIndexResult chromatic_index(const Graph& g, std::uint64_t budget)
{
    ChromaticIndexResult result;
    const auto delta = g.max_degree();
    if (g.size() == 0) {
        result.status = Status::proved_yes;
        result.chromatic_index = 0;
        result.coloring = EdgeColoring(g, {});
        return result;
    }
    auto attempt = find_edge_coloring(g, delta, budget);
    result.effort = attempt.effort;
    if (attempt.status == Status::proved_yes) {
        result.status = Status::proved_yes;
        result.chromatic_index = delta;
        result.coloring = std::move(attempt.witness);
    } else if (attempt.status == Status::proved_no) {
        result.status = Status::proved_yes;
        result.chromatic_index = delta + 1;
        result.coloring = vizing_coloring(g);
    }
    return result;
}

EdgeColoring koenig_coloring(const Graph& g)
{
    const auto side = bipartition(g);
    if (side.empty() && g.order() > 0)
        throw std::invalid_argument("koenig_coloring: graph is not bipartite");
    const auto delta = g.max_degree();
    EdgeColoring out(g, standard_palette(delta));
    if (g.size() == 0)
        return out;

    // Dense ids per side.
    std::vector<int> pos(g.order());
    int nx = 0;
    int ny = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
        pos[i] = side[i] == 0 ? nx++ : ny++;
    const int n = std::max(nx, ny);

    struct MultiEdge {
        int x;
        int y;
        int original;  // -1 for padding
    };
    std::vector<MultiEdge> edges;
    std::vector<std::size_t> degx(n, 0);
    std::vector<std::size_t> degy(n, 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
        int i = g.index_of(g.edges()[k].a);
        int j = g.index_of(g.edges()[k].b);
        if (side[i] != 0)
            std::swap(i, j);
        edges.push_back({pos[i], pos[j], static_cast<int>(k)});
        ++degx[pos[i]];
        ++degy[pos[j]];
    }
    // Pad to a delta-regular bipartite multigraph; deficits on both sides
    // are equal, so the two cursors finish together.
    int px = 0;
    int py = 0;
    while (px < n) {
        if (degx[px] == delta) {
            ++px;
            continue;
        }
        while (degy[py] == delta)
            ++py;
        edges.push_back({px, py, -1});
        ++degx[px];
        ++degy[py];
    }

    std::vector<char> alive(edges.size(), 1);
    std::vector<std::vector<int>> incident(n);
    for (std::size_t k = 0; k < edges.size(); ++k)
        incident[edges[k].x].push_back(static_cast<int>(k));

    for (std::size_t round = 0; round < delta; ++round) {
        std::vector<int> match_y(n, -1);  // edge id matched at y
        std::vector<int> seen(n, -1);
        std::function<bool(int, int)> augment = [&](int x, int stamp) -> bool {
            for (int k : incident[x]) {
                if (!alive[k])
                    continue;
                const int y = edges[k].y;
                if (seen[y] == stamp)
                    continue;
                seen[y] = stamp;
                if (match_y[y] < 0 || augment(edges[match_y[y]].x, stamp)) {
                    match_y[y] = k;
                    return true;
                }
            }
            return false;
        };
        for (int x = 0; x < n; ++x)
            if (!augment(x, x))
                throw std::logic_error("koenig_coloring: regular bipartite multigraph without a perfect matching");
        for (int y = 0; y < n; ++y) {
            const int k = match_y[y];
            alive[k] = 0;
            if (edges[k].original >= 0)
                out.assignment[static_cast<std::size_t>(edges[k].original)] = static_cast<ColorId>(round + 1);
        }
    }
    return out;
}

EdgeColoring vizing_coloring(const Graph& g)
{
    const auto delta = g.max_degree();
    const int ncol = static_cast<int>(delta) + 1;
    EdgeColoring out(g, g.size() == 0 ? std::vector<ColorId>{} : standard_palette(delta + 1));
    if (g.size() == 0)
        return out;
    const auto n = g.order();
    const auto ends = edge_ends(g);
    std::vector<int> color(g.size(), -1);
    std::vector<int> at(n * static_cast<std::size_t>(ncol), -1);  // neighbour via colour
    auto at_ref = [&](int v, int c) -> int& { return at[static_cast<std::size_t>(v) * ncol + c]; };
    auto is_free = [&](int v, int c) { return at_ref(v, c) < 0; };
    auto edge_of = [&](int x, int y) { return g.edge_index_by_index(x, y); };
    auto paint = [&](int x, int y, int c) {
        color[edge_of(x, y)] = c;
        at_ref(x, c) = y;
        at_ref(y, c) = x;
    };
    auto erase = [&](int x, int y) {
        const int e = edge_of(x, y);
        const int c = color[e];
        if (c < 0)
            return;
        color[e] = -1;
        at_ref(x, c) = -1;
        at_ref(y, c) = -1;
    };
    auto lowest_free = [&](int v) {
        for (int c = 0; c < ncol; ++c)
            if (is_free(v, c))
                return c;
        throw std::logic_error("vizing_coloring: no free colour");
    };

    std::vector<int> in_fan(n, 0);
    for (std::size_t e = 0; e < g.size(); ++e) {
        const int u = ends[e].a;
        const int v = ends[e].b;
        // Maximal fan at u starting with the uncoloured edge uv.
        std::vector<int> fan{v};
        in_fan[v] = 1;
        bool grown = true;
        while (grown) {
            grown = false;
            const int last = fan.back();
            for (int w : g.neighbor_indices(u)) {
                if (in_fan[w])
                    continue;
                const int cw = color[edge_of(u, w)];
                if (cw >= 0 && is_free(last, cw)) {
                    fan.push_back(w);
                    in_fan[w] = 1;
                    grown = true;
                    break;
                }
            }
        }
        for (int w : fan)
            in_fan[w] = 0;

        const int c = lowest_free(u);
        const int d = lowest_free(fan.back());

        // Invert the cd-path through u (it starts with a d-edge since c is free at u).
        std::vector<std::pair<int, int>> path;
        {
            int cur = u;
            int want = d;
            int next = at_ref(cur, want);
            while (next >= 0) {
                path.emplace_back(cur, next);
                cur = next;
                want = want == d ? c : d;
                next = at_ref(cur, want);
            }
        }
        std::vector<int> path_colors;
        for (auto [x, y] : path)
            path_colors.push_back(color[edge_of(x, y)]);
        for (auto [x, y] : path)
            erase(x, y);
        for (std::size_t k = 0; k < path.size(); ++k)
            paint(path[k].first, path[k].second, path_colors[k] == d ? c : d);

        // First fan vertex, within the still-valid prefix, where d is free.
        int w = -1;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                const int ci = color[edge_of(u, fan[i])];
                if (ci < 0 || !is_free(fan[i - 1], ci))
                    break;
            }
            if (is_free(fan[i], d)) {
                w = static_cast<int>(i);
                break;
            }
        }
        if (w < 0)
            throw std::logic_error("vizing_coloring: fan rotation target not found");

        std::vector<int> shifted;
        for (int i = 0; i < w; ++i)
            shifted.push_back(color[edge_of(u, fan[i + 1])]);
        for (int i = 0; i <= w; ++i)
            erase(u, fan[i]);
        for (int i = 0; i < w; ++i)
            paint(u, fan[i], shifted[i]);
        paint(u, fan[w], d);
    }
    for (std::size_t e = 0; e < g.size(); ++e)
        out.assignment[e] = color[e] + 1;
    return out;
}

EnumerationResult enumerate_colorings(const Graph& g, std::size_t c, const ColoringVisitor& visitor,
                                      std::uint64_t budget)
{
    if (c < g.max_degree())
        throw std::invalid_argument("enumerate_colorings: palette smaller than the maximum degree");
    if (c > 64)
        throw std::invalid_argument("enumerate_colorings: palettes above 64 colours are not supported");
    EnumerationResult result;
    const auto ends = edge_ends(g);
    const auto m = ends.size();
    const std::uint64_t full = c == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
    std::vector<std::uint64_t> used(g.order(), 0);
    EdgeColoring current(g, standard_palette(c));
    bool stopped = false;

    // Later edges at each vertex, for forward checking.
    std::vector<std::vector<std::size_t>> later(m);
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t f = e + 1; f < m; ++f)
            if (ends[f].a == ends[e].a || ends[f].a == ends[e].b || ends[f].b == ends[e].a ||
                ends[f].b == ends[e].b)
                later[e].push_back(f);

    std::function<void(std::size_t, int)> rec = [&](std::size_t e, int introduced) {
        if (stopped)
            return;
        if (e == m) {
            ++result.visited;
            if (!visitor(current))
                stopped = true;
            return;
        }
        const auto [a, b] = ends[e];
        const int limit = std::min(introduced + 1, static_cast<int>(c));
        for (int col = 0; col < limit && !stopped; ++col) {
            const auto bit = std::uint64_t{1} << col;
            if ((used[a] | used[b]) & bit)
                continue;
            if (++result.nodes > budget) {
                stopped = true;
                return;
            }
            used[a] |= bit;
            used[b] |= bit;
            bool viable = true;
            for (std::size_t f : later[e])
                if ((full & ~(used[ends[f].a] | used[ends[f].b])) == 0) {
                    viable = false;
                    break;
                }
            if (viable) {
                current.assignment[e] = col + 1;
                rec(e + 1, std::max(introduced, col + 1));
                current.assignment[e] = EdgeColoring::unassigned;
            }
            used[a] &= ~bit;
            used[b] &= ~bit;
        }
    };
    rec(0, 0);
    result.exhausted = !stopped;
    return result;
}

namespace {

std::vector<Point> checked_z(const Graph& g, std::span<const Point> z)
{
    std::vector<Point> zs(z.begin(), z.end());
    std::sort(zs.begin(), zs.end());
    if (zs.size() != 3 || std::adjacent_find(zs.begin(), zs.end()) != zs.end())
        throw std::invalid_argument("Z must be three distinct points");
    for (Point p : zs)
        if (g.has_vertex(p))
            throw std::invalid_argument("Z point " + std::to_string(p) + " lies in V(G)");
    return zs;
}

}  // namespace

std::vector<Triple> coloring_to_decomposition(const Graph& g, const EdgeColoring& gamma, std::span<const Point> z)
{
    if (!is_cubic(g))
        throw std::invalid_argument("coloring_to_decomposition: graph is not cubic");
    const auto zs = checked_z(g, z);
    if (!(gamma.graph == g))
        throw std::invalid_argument("coloring_to_decomposition: colouring is for a different graph");
    if (gamma.palette.size() != 3)
        throw std::invalid_argument("coloring_to_decomposition: palette must have exactly 3 colours");
    if (!is_proper(gamma))
        throw std::invalid_argument("coloring_to_decomposition: colouring is not proper");
    std::vector<Triple> out;
    out.reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto rank = std::lower_bound(gamma.palette.begin(), gamma.palette.end(), gamma.assignment[k]) -
                          gamma.palette.begin();
        out.push_back(make_triple(g.edges()[k].a, g.edges()[k].b, zs[static_cast<std::size_t>(rank)]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

EdgeColoring decomposition_to_coloring(std::span<const Triple> decomp, const Graph& g, std::span<const Point> z)
{
    if (!is_cubic(g))
        throw std::invalid_argument("decomposition_to_coloring: graph is not cubic");
    const auto zs = checked_z(g, z);
    const Graph host = join(make_edgeless(zs), g);
    std::vector<int> owner(host.size(), -1);
    for (std::size_t k = 0; k < decomp.size(); ++k) {
        const auto& t = decomp[k];
        for (auto [x, y] : {std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}}) {
            const int e = host.edge_index(x, y);
            if (e < 0)
                throw std::invalid_argument("decomposition_to_coloring: triple {" + std::to_string(t.a) + "," +
                                            std::to_string(t.b) + "," + std::to_string(t.c) +
                                            "} is not a triangle of the join");
            if (owner[e] >= 0)
                throw std::invalid_argument("decomposition_to_coloring: pair " + std::to_string(x) + " " +
                                            std::to_string(y) + " covered twice");
            owner[e] = static_cast<int>(k);
        }
    }
    for (std::size_t e = 0; e < host.size(); ++e) {
        const auto& edge = host.edges()[e];
        const bool z_incident = std::binary_search(zs.begin(), zs.end(), edge.a) ||
                                std::binary_search(zs.begin(), zs.end(), edge.b);
        if (z_incident && owner[e] < 0)
            throw std::invalid_argument("decomposition_to_coloring: Z-incident edge " + std::to_string(edge.a) +
                                        " " + std::to_string(edge.b) + " is not covered");
    }
    std::vector<ColorId> palette(zs.begin(), zs.end());
    EdgeColoring out(g, palette);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto& edge = g.edges()[k];
        const int e = host.edge_index(edge.a, edge.b);
        if (owner[e] < 0)
            throw std::invalid_argument("decomposition_to_coloring: edge " + std::to_string(edge.a) + " " +
                                        std::to_string(edge.b) + " of G is not covered");
        const auto& t = decomp[static_cast<std::size_t>(owner[e])];
        Point third = t.a;
        for (Point p : {t.a, t.b, t.c})
            if (p != edge.a && p != edge.b)
                third = p;
        if (!std::binary_search(zs.begin(), zs.end(), third))
            throw std::invalid_argument("decomposition_to_coloring: edge of G covered by a triangle inside G");
        out.assignment[k] = static_cast<ColorId>(third);
    }
    if (!is_proper(out))
        throw std::logic_error("decomposition_to_coloring: recovered colouring is not proper");
    return out;
}

}  // namespace pstskit
