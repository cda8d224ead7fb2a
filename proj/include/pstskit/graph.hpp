#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pstskit {

/// Points are plain nonnegative integer labels; their natural order is the
/// canonical order used by every emitter.
using Point = std::uint32_t;

/// Unordered pair stored with a < b.
struct Edge {
    Point a = 0;
    Point b = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Normalizes the endpoint order. Throws std::invalid_argument on a loop.
Edge make_edge(Point x, Point y);

/// Immutable simple undirected graph.
///
/// Vertices are kept sorted and each one gets a dense index in [0, order()).
/// Solvers work in index space through neighbor_indices() / adjacent_index();
/// everything user-facing speaks labels. Edge membership is a bit-matrix
/// lookup, degree is O(1) and neighbor iteration is linear.
class Graph {
public:
    Graph() = default;

    /// Builds from an explicit vertex list and edge list. Both are sorted;
    /// duplicates, loops and edges touching unknown vertices throw
    /// std::invalid_argument.
    Graph(std::vector<Point> vertices, std::vector<Edge> edges);

    std::span<const Point> vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    bool has_vertex(Point x) const { return index_.count(x) != 0; }
    bool has_edge(Point x, Point y) const;

    /// Throws std::out_of_range for unknown vertices.
    std::size_t degree(Point x) const;
    std::span<const Point> neighbors(Point x) const;

    std::size_t max_degree() const;
    std::size_t min_degree() const;

    // Index-space access.
    int index_of(Point x) const;
    Point label(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    std::span<const int> neighbor_indices(int i) const { return adj_index_[static_cast<std::size_t>(i)]; }
    bool adjacent_index(int i, int j) const
    {
        const auto bit = static_cast<std::size_t>(i) * vertices_.size() + static_cast<std::size_t>(j);
        return (matrix_[bit >> 6] >> (bit & 63)) & 1U;
    }
    /// Position of the edge in edges(), or -1.
    int edge_index(Point x, Point y) const;
    int edge_index_by_index(int i, int j) const;

    friend bool operator==(const Graph& g, const Graph& h)
    {
        return g.vertices_ == h.vertices_ && g.edges_ == h.edges_;
    }

private:
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<Point, int> index_;
    std::vector<std::vector<Point>> adj_;
    std::vector<std::vector<int>> adj_index_;
    std::vector<std::vector<int>> adj_edge_;
    std::vector<std::uint64_t> matrix_;
};

// Constructions. Point sets may be passed unsorted; duplicates are merged.

Graph make_edgeless(std::vector<Point> points);
Graph make_complete(std::vector<Point> points);
/// Throws std::invalid_argument when s and t intersect.
Graph make_complete_bipartite(std::vector<Point> s, std::vector<Point> t);

/// g ∨ h. Throws std::invalid_argument unless the vertex sets are disjoint.
Graph join(const Graph& g, const Graph& h);
Graph graph_union(const Graph& g, const Graph& h);
/// Vertex set of g, edges of g not in h.
Graph subtract(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Point> keep);
/// Adds the vertices of extra that g does not have yet.
Graph with_vertices(const Graph& g, std::span<const Point> extra);
/// Maps every label through f (which must be injective on V(g)).
Graph relabel(const Graph& g, const std::unordered_map<Point, Point>& f);

bool is_even(const Graph& g);
std::size_t degree(const Graph& g, Point x);
bool is_regular(const Graph& g, std::size_t k);
bool is_cubic(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by smallest
/// member. Isolated vertices are their own components.
std::vector<std::vector<Point>> connected_components(const Graph& g);

/// Proper 2-colouring of the vertices (0/1 per vertex, in vertices() order),
/// or an empty vector when g has an odd cycle.
std::vector<int> bipartition(const Graph& g);

std::vector<Point> iota_points(Point first, std::size_t count);

// Standard test graphs. Labels start at 0.

Graph cycle_graph(std::size_t k);
Graph petersen_graph();
Graph k4_graph();
Graph k33_graph();
/// Two k-cycles joined by a perfect matching (k >= 3).
Graph prism_graph(std::size_t k);
/// A 2k-cycle plus its k diameters (k >= 2).
Graph moebius_ladder_graph(std::size_t k);
/// Vertex i adjacent to i ± s (mod n) for each s in connections.
Graph circulant_graph(std::size_t n, std::span<const std::size_t> connections);

/// Parses names such as "petersen", "k4", "k33", "prism:37",
/// "moebius:5", "circulant:10:1,4", "cycle:7", "complete:7".
Graph standard_graph(std::string_view name);

}  // namespace pstskit
