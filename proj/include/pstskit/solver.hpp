#pragma once

#include "pstskit/graph.hpp"
#include "pstskit/search.hpp"
#include "pstskit/triple_system.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pstskit {

/// Triangles chosen from a host graph; sorted, pairwise edge-disjoint.
using Packing = std::vector<Triple>;
using DecompositionOutcome = SearchOutcome<Packing>;

/// A host graph plus "holes": point sets inside which no triple may lie.
struct TrianglePackingProblem {
    Graph host;
    std::vector<std::vector<Point>> holes;
    std::uint64_t budget = 0;  // 0 selects the solver's default
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

struct DivisibilityReport {
    bool ok = true;
    std::vector<std::string> failures;

    explicit operator bool() const { return ok; }
};

/// Every degree even and |E| ≡ 0 (mod 3).
DivisibilityReport necessary_conditions(const Graph& g);

/// True iff triples are host triangles outside every hole interior, pairwise
/// edge-disjoint, and (when require_cover) cover every host edge. On failure
/// `why` names the first problem.
bool verify_packing(const Graph& host, const std::vector<std::vector<Point>>& holes, const Packing& triples,
                    bool require_cover, std::string* why = nullptr);

/// Host minus the edges covered by the packing.
Graph packing_leave(const Graph& host, const Packing& triples);

/// Complete exact-cover search: columns are host edges, rows are host
/// triangles not inside a hole, in lexicographic order; the column with
/// fewest live rows is branched on first (ties by edge order). Budget counts
/// decision nodes. jobs > 1 splits the first branching column across
/// threads; the reported witness is still the one the sequential search
/// would return whenever the sequential search would have found it within
/// budget.
DecompositionOutcome exact_k3_decompose(const TrianglePackingProblem& p);

/// Independent naive oracle: recursive cover of the lexicographically first
/// uncovered edge. Throws std::invalid_argument when the host has more than
/// 45 edges.
DecompositionOutcome brute_force_k3_decompose(const Graph& g, std::uint64_t budget = default_exact_budget);

inline constexpr std::size_t brute_force_edge_limit = 45;

struct HillClimbOptions {
    /// Called after every accepted move with the covered-edge count.
    std::function<void(std::size_t covered)> on_move;
};

/// Randomized Stinson-style climb. Never returns proved_no except when the
/// host fails necessary_conditions. Deterministic in (problem, seed,
/// budget); budget counts iterations.
DecompositionOutcome hill_climb(const TrianglePackingProblem& p, const HillClimbOptions& options = {});

/// K_v − K_w on points {0..v-1} with the hole {0..w-1}. Checks the
/// Doyen–Wilson conditions (v, w odd; v ≥ 2w+1; C(v,2) − C(w,2) ≡ 0 mod 3)
/// and returns proved_no when one fails; otherwise climbs.
DecompositionOutcome decompose_complete_minus_hole(std::size_t v, std::size_t w, std::uint64_t seed,
                                                   std::uint64_t budget = default_climb_budget);

/// K_V − K_hole on explicit labels; same conditions as above.
DecompositionOutcome decompose_with_hole(std::vector<Point> vset, std::vector<Point> hole, std::uint64_t seed,
                                         std::uint64_t budget = default_climb_budget);

struct DoubleHoleConditions {
    bool i = false;    // |B| ≥ |A|
    bool ii = false;   // |V| = 2|B| + |A| − 2|A∩B|
    bool iii = false;  // |A|, |B| odd
    bool iv = false;   // |A| ≥ 2|A∩B| + 1
    bool v = false;    // (|B| − |A∩B|)(|A| − 2|A∩B| − 1) ≡ 0 (mod 3)

    bool all() const { return i && ii && iii && iv && v; }
    std::string failures() const;
};

DoubleHoleConditions double_hole_conditions(long long nv, long long na, long long nb, long long nab);

/// K_V − (K_A ∪ K_B). The five sufficient conditions are checked first;
/// any failure gives unknown with the failing conditions as reason. Holes
/// with fewer than two points have no interior and are dropped, reducing to
/// the single-hole or hole-free case. Throws std::invalid_argument unless
/// a, b ⊆ vset.
DecompositionOutcome decompose_double_hole(std::vector<Point> vset, std::vector<Point> a, std::vector<Point> b,
                                           std::uint64_t seed, std::uint64_t budget = default_climb_budget);

}  // namespace pstskit
