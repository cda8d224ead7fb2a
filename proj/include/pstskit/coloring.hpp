#pragma once

#include "pstskit/graph.hpp"
#include "pstskit/search.hpp"
#include "pstskit/triple_system.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace pstskit {

using ColorId = std::int32_t;

/// An assignment of palette colours to the edges of a graph, indexed like
/// graph.edges(). Unassigned edges hold `unassigned`.
struct EdgeColoring {
    static constexpr ColorId unassigned = -1;

    Graph graph;
    std::vector<ColorId> palette;  // ascending, distinct
    std::vector<ColorId> assignment;

    EdgeColoring() = default;
    EdgeColoring(Graph g, std::vector<ColorId> palette_colors);
    EdgeColoring(Graph g, std::vector<ColorId> palette_colors, std::vector<ColorId> colors);

    ColorId color(Point x, Point y) const;
    void set(Point x, Point y, ColorId c);

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Palette {1, ..., c}.
std::vector<ColorId> standard_palette(std::size_t c);

/// Total, palette-valued, and no two edges at a vertex share a colour.
bool is_proper(const EdgeColoring& c);

/// Number of distinct colours actually used.
std::size_t colors_used(const EdgeColoring& c);

/// Palette minus the colours on edges at x. Throws std::out_of_range for an
/// unknown vertex.
std::vector<ColorId> missing_colors(const EdgeColoring& c, Point x);

struct ChromaticIndexResult {
    Status status = Status::unknown;
    std::size_t chromatic_index = 0;  // meaningful when status == proved_yes
    std::optional<EdgeColoring> coloring;
    std::uint64_t effort = 0;
};

/// Exact χ′. A complete Δ-colour search runs first; if it is exhausted the
/// graph is class 2 and a Vizing colouring witnesses Δ+1. Budget counts
/// decision nodes.
ChromaticIndexResult chromatic_index(const Graph& g, std::uint64_t budget = default_exact_budget);

/// Complete search for a proper colouring with palette {1..k}; proved_no
/// means no k-edge-colouring exists.
SearchOutcome<EdgeColoring> find_edge_coloring(const Graph& g, std::size_t k,
                                               std::uint64_t budget = default_exact_budget);

/// König: Δ colours for a bipartite graph, via perfect matchings of a
/// Δ-regular bipartite multigraph padding g. Throws std::invalid_argument
/// for a non-bipartite graph.
EdgeColoring koenig_coloring(const Graph& g);

/// Misra–Gries constructive Vizing colouring with palette {1..Δ+1}.
EdgeColoring vizing_coloring(const Graph& g);

/// Visitor over canonical colourings; return false to stop early.
using ColoringVisitor = std::function<bool(const EdgeColoring&)>;

struct EnumerationResult {
    bool exhausted = false;
    std::uint64_t visited = 0;
    std::uint64_t nodes = 0;
};

/// Visits every proper colouring with palette {1..c} exactly once up to a
/// global permutation of colours: colours are introduced in first-use order
/// along the lexicographic edge order. Throws std::invalid_argument when
/// c < Δ(g) or c > 64.
EnumerationResult enumerate_colorings(const Graph& g, std::size_t c, const ColoringVisitor& visitor,
                                      std::uint64_t budget = default_exact_budget);

/// {x, y, γ(xy)} for each edge of a cubic g, with the palette identified
/// with the three points of z in ascending order (palette[i] ↦ z[i]).
/// Throws std::invalid_argument when g is not cubic, z is not three points
/// outside V(g), or gamma is not a proper 3-colouring of g.
std::vector<Triple> coloring_to_decomposition(const Graph& g, const EdgeColoring& gamma,
                                              std::span<const Point> z);

/// Inverse of coloring_to_decomposition: verifies that decomp is a
/// K_3-decomposition of K̄_Z ∨ g and reads γ(xy) = the z in {x, y, z}.
/// The palette is z itself. Throws std::invalid_argument if the
/// decomposition leaves a Z-incident edge uncovered or is not a
/// decomposition.
EdgeColoring decomposition_to_coloring(std::span<const Triple> decomp, const Graph& g,
                                       std::span<const Point> z);

}  // namespace pstskit
