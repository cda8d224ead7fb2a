#include "pstskit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>
#include <string>

namespace pstskit {

namespace {

std::vector<Point> sorted_unique(std::vector<Point> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::size_t parse_size(std::string_view text, std::string_view what)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("bad " + std::string(what) + " parameter '" + std::string(text) + "'");
    return value;
}

}  // namespace

Edge make_edge(Point x, Point y)
{
    if (x == y)
        throw std::invalid_argument("loop at " + std::to_string(x));
    return x < y ? Edge{x, y} : Edge{y, x};
}

Graph::Graph(std::vector<Point> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("duplicate vertex");
    for (auto& e : edges_) {
        if (e.a == e.b)
            throw std::invalid_argument("loop at " + std::to_string(e.a));
        if (e.a > e.b)
            std::swap(e.a, e.b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->a) + " " + std::to_string(dup->b));

    const auto n = vertices_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        index_.emplace(vertices_[i], static_cast<int>(i));

    adj_.assign(n, {});
    adj_index_.assign(n, {});
    adj_edge_.assign(n, {});
    matrix_.assign((n * n + 63) / 64, 0);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto& e = edges_[k];
        const int i = index_of(e.a);
        const int j = index_of(e.b);
        if (i < 0 || j < 0)
            throw std::invalid_argument("edge " + std::to_string(e.a) + " " + std::to_string(e.b) +
                                        " has an endpoint outside the vertex set");
        adj_index_[i].push_back(j);
        adj_index_[j].push_back(i);
        for (const auto bit : {static_cast<std::size_t>(i) * n + j, static_cast<std::size_t>(j) * n + i})
            matrix_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto& nb = adj_index_[i];
        std::sort(nb.begin(), nb.end());
        adj_[i].reserve(nb.size());
        adj_edge_[i].reserve(nb.size());
        for (int j : nb) {
            adj_[i].push_back(vertices_[j]);
            const Edge e = make_edge(vertices_[i], vertices_[j]);
            adj_edge_[i].push_back(
                static_cast<int>(std::lower_bound(edges_.begin(), edges_.end(), e) - edges_.begin()));
        }
    }
}

int Graph::index_of(Point x) const
{
    auto it = index_.find(x);
    return it == index_.end() ? -1 : it->second;
}

bool Graph::has_edge(Point x, Point y) const
{
    const int i = index_of(x);
    const int j = index_of(y);
    return i >= 0 && j >= 0 && i != j && adjacent_index(i, j);
}

std::size_t Graph::degree(Point x) const
{
    const int i = index_of(x);
    if (i < 0)
        throw std::out_of_range("unknown vertex " + std::to_string(x));
    return adj_index_[i].size();
}

std::span<const Point> Graph::neighbors(Point x) const
{
    const int i = index_of(x);
    if (i < 0)
        throw std::out_of_range("unknown vertex " + std::to_string(x));
    return adj_[i];
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (const auto& nb : adj_index_)
        best = std::max(best, nb.size());
    return best;
}

std::size_t Graph::min_degree() const
{
    if (adj_index_.empty())
        return 0;
    std::size_t best = adj_index_.front().size();
    for (const auto& nb : adj_index_)
        best = std::min(best, nb.size());
    return best;
}

int Graph::edge_index(Point x, Point y) const
{
    const int i = index_of(x);
    const int j = index_of(y);
    if (i < 0 || j < 0)
        return -1;
    return edge_index_by_index(i, j);
}

int Graph::edge_index_by_index(int i, int j) const
{
    const auto& nb = adj_index_[i];
    auto it = std::lower_bound(nb.begin(), nb.end(), j);
    if (it == nb.end() || *it != j)
        return -1;
    return adj_edge_[i][static_cast<std::size_t>(it - nb.begin())];
}

Graph make_edgeless(std::vector<Point> points)
{
    return Graph(sorted_unique(std::move(points)), {});
}

Graph make_complete(std::vector<Point> points)
{
    points = sorted_unique(std::move(points));
    std::vector<Edge> edges;
    edges.reserve(points.size() * (points.size() > 0 ? points.size() - 1 : 0) / 2);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            edges.push_back({points[i], points[j]});
    return Graph(std::move(points), std::move(edges));
}

Graph make_complete_bipartite(std::vector<Point> s, std::vector<Point> t)
{
    s = sorted_unique(std::move(s));
    t = sorted_unique(std::move(t));
    std::vector<Point> both;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
    if (!both.empty())
        throw std::invalid_argument("bipartite parts overlap at " + std::to_string(both.front()));
    std::vector<Edge> edges;
    edges.reserve(s.size() * t.size());
    for (Point x : s)
        for (Point y : t)
            edges.push_back(make_edge(x, y));
    std::vector<Point> vertices = s;
    vertices.insert(vertices.end(), t.begin(), t.end());
    return Graph(std::move(vertices), std::move(edges));
}

Graph join(const Graph& g, const Graph& h)
{
    for (Point x : g.vertices())
        if (h.has_vertex(x))
            throw std::invalid_argument("join of graphs sharing vertex " + std::to_string(x));
    std::vector<Point> vertices(g.vertices().begin(), g.vertices().end());
    vertices.insert(vertices.end(), h.vertices().begin(), h.vertices().end());
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.insert(edges.end(), h.edges().begin(), h.edges().end());
    for (Point x : g.vertices())
        for (Point y : h.vertices())
            edges.push_back(make_edge(x, y));
    return Graph(std::move(vertices), std::move(edges));
}

Graph graph_union(const Graph& g, const Graph& h)
{
    std::vector<Point> vertices;
    std::set_union(g.vertices().begin(), g.vertices().end(), h.vertices().begin(), h.vertices().end(),
                   std::back_inserter(vertices));
    std::vector<Edge> edges;
    std::set_union(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end(),
                   std::back_inserter(edges));
    return Graph(std::move(vertices), std::move(edges));
}

Graph subtract(const Graph& g, const Graph& h)
{
    std::vector<Edge> edges;
    std::set_difference(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end(),
                        std::back_inserter(edges));
    return Graph({g.vertices().begin(), g.vertices().end()}, std::move(edges));
}

Graph complement(const Graph& g)
{
    const auto n = static_cast<int>(g.order());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent_index(i, j))
                edges.push_back({g.label(i), g.label(j)});
    return Graph({g.vertices().begin(), g.vertices().end()}, std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const Point> keep)
{
    std::vector<Point> vertices;
    for (Point x : keep)
        if (g.has_vertex(x))
            vertices.push_back(x);
    vertices = sorted_unique(std::move(vertices));
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (std::binary_search(vertices.begin(), vertices.end(), e.a) &&
            std::binary_search(vertices.begin(), vertices.end(), e.b))
            edges.push_back(e);
    return Graph(std::move(vertices), std::move(edges));
}

Graph with_vertices(const Graph& g, std::span<const Point> extra)
{
    std::vector<Point> vertices(g.vertices().begin(), g.vertices().end());
    for (Point x : extra)
        if (!g.has_vertex(x))
            vertices.push_back(x);
    return Graph(sorted_unique(std::move(vertices)), {g.edges().begin(), g.edges().end()});
}

Graph relabel(const Graph& g, const std::unordered_map<Point, Point>& f)
{
    auto map = [&](Point x) {
        auto it = f.find(x);
        if (it == f.end())
            throw std::invalid_argument("relabel: no image for " + std::to_string(x));
        return it->second;
    };
    std::vector<Point> vertices;
    vertices.reserve(g.order());
    for (Point x : g.vertices())
        vertices.push_back(map(x));
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges())
        edges.push_back(make_edge(map(e.a), map(e.b)));
    return Graph(std::move(vertices), std::move(edges));
}

bool is_even(const Graph& g)
{
    for (Point x : g.vertices())
        if (g.degree(x) % 2 != 0)
            return false;
    return true;
}

std::size_t degree(const Graph& g, Point x)
{
    return g.degree(x);
}

bool is_regular(const Graph& g, std::size_t k)
{
    for (Point x : g.vertices())
        if (g.degree(x) != k)
            return false;
    return true;
}

bool is_cubic(const Graph& g)
{
    return is_regular(g, 3);
}

std::vector<std::vector<Point>> connected_components(const Graph& g)
{
    const auto n = g.order();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<Point>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Point> comp;
        std::deque<int> queue{static_cast<int>(s)};
        seen[s] = 1;
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            comp.push_back(g.label(i));
            for (int j : g.neighbor_indices(i))
                if (!seen[j]) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> bipartition(const Graph& g)
{
    const auto n = g.order();
    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::deque<int> queue{static_cast<int>(s)};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j : g.neighbor_indices(i)) {
                if (side[j] < 0) {
                    side[j] = 1 - side[i];
                    queue.push_back(j);
                } else if (side[j] == side[i]) {
                    return {};
                }
            }
        }
    }
    return side;
}

std::vector<Point> iota_points(Point first, std::size_t count)
{
    std::vector<Point> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = first + static_cast<Point>(i);
    return out;
}

Graph cycle_graph(std::size_t k)
{
    if (k < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i)
        edges.push_back(make_edge(static_cast<Point>(i), static_cast<Point>((i + 1) % k)));
    return Graph(iota_points(0, k), std::move(edges));
}

Graph petersen_graph()
{
    std::vector<Edge> edges;
    for (Point i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));          // outer 5-cycle
        edges.push_back(make_edge(i, i + 5));                // spokes
        edges.push_back(make_edge(i + 5, (i + 2) % 5 + 5));  // inner pentagram
    }
    return Graph(iota_points(0, 10), std::move(edges));
}

Graph k4_graph()
{
    return make_complete(iota_points(0, 4));
}

Graph k33_graph()
{
    return make_complete_bipartite({0, 1, 2}, {3, 4, 5});
}

Graph prism_graph(std::size_t k)
{
    if (k < 3)
        throw std::invalid_argument("prism(k) needs k >= 3");
    std::vector<Edge> edges;
    const auto kk = static_cast<Point>(k);
    for (Point i = 0; i < kk; ++i) {
        edges.push_back(make_edge(i, (i + 1) % kk));
        edges.push_back(make_edge(kk + i, kk + (i + 1) % kk));
        edges.push_back(make_edge(i, kk + i));
    }
    return Graph(iota_points(0, 2 * k), std::move(edges));
}

Graph moebius_ladder_graph(std::size_t k)
{
    if (k < 2)
        throw std::invalid_argument("moebius_ladder(k) needs k >= 2");
    const auto n = static_cast<Point>(2 * k);
    std::vector<Edge> edges;
    for (Point i = 0; i < n; ++i)
        edges.push_back(make_edge(i, (i + 1) % n));
    for (Point i = 0; i < static_cast<Point>(k); ++i)
        edges.push_back(make_edge(i, i + static_cast<Point>(k)));
    return Graph(iota_points(0, n), std::move(edges));
}

Graph circulant_graph(std::size_t n, std::span<const std::size_t> connections)
{
    if (n < 1)
        throw std::invalid_argument("circulant needs n >= 1");
    std::vector<Edge> edges;
    for (std::size_t s : connections) {
        if (s % n == 0)
            throw std::invalid_argument("circulant connection " + std::to_string(s) + " is a loop");
        for (std::size_t i = 0; i < n; ++i)
            edges.push_back(make_edge(static_cast<Point>(i), static_cast<Point>((i + s) % n)));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(iota_points(0, n), std::move(edges));
}

Graph standard_graph(std::string_view name)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto colon = name.find(':', start);
        parts.push_back(name.substr(start, colon == std::string_view::npos ? colon : colon - start));
        if (colon == std::string_view::npos)
            break;
        start = colon + 1;
    }
    const auto kind = parts.front();
    auto arg = [&](std::size_t i) {
        if (parts.size() <= i)
            throw std::invalid_argument("standard graph '" + std::string(name) + "' is missing a parameter");
        return parse_size(parts[i], kind);
    };
    if (kind == "petersen")
        return petersen_graph();
    if (kind == "k4")
        return k4_graph();
    if (kind == "k33")
        return k33_graph();
    if (kind == "prism")
        return prism_graph(arg(1));
    if (kind == "moebius")
        return moebius_ladder_graph(arg(1));
    if (kind == "cycle")
        return cycle_graph(arg(1));
    if (kind == "complete")
        return make_complete(iota_points(0, arg(1)));
    if (kind == "circulant") {
        const auto n = arg(1);
        if (parts.size() < 3)
            throw std::invalid_argument("circulant needs a connection set");
        std::vector<std::size_t> conn;
        std::string_view rest = parts[2];
        while (!rest.empty()) {
            auto comma = rest.find(',');
            conn.push_back(parse_size(rest.substr(0, comma), kind));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        return circulant_graph(n, conn);
    }
    throw std::invalid_argument("unknown standard graph '" + std::string(name) + "'");
}

}  // namespace pstskit
