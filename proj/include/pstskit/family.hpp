#pragma once

#include "pstskit/coloring.hpp"
#include "pstskit/graph.hpp"
#include "pstskit/search.hpp"
#include "pstskit/triple_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pstskit {

/// The 27-triple PSTS(15) on {1..15} whose leave defeats the conjecture
/// for w = 4.
TripleSystem psts15();

/// Label used for ∞ in L1: the vertices are 0..w and w+1 = ∞.
inline Point l1_infinity(int w)
{
    return static_cast<Point>(w + 1);
}

/// Complement of C(w) on Z_{w+1} ∪ {∞}, where C(w) = {x, w+1−x} (1 ≤ x ≤ w/2)
/// plus {0,2}, {1,2}, {1,∞}. Vertices 1 and 2 have degree w−2, the rest w.
/// Throws std::invalid_argument unless w is even and ≥ 4.
Graph build_L1(int w);

/// γ(xy) = x+y, γ(x∞) = 2x (x ≥ 2), γ(0∞) = 2, all mod w+1; palette 1..w.
EdgeColoring l1_canonical_coloring(int w);

struct L1Enumeration {
    bool exhausted = false;
    bool all_equal = true;  // missing sets at 1 and 2 agree in every colouring
    std::uint64_t visited = 0;
};

/// Runs through every w-colouring of L1 (up to colour permutation) and
/// compares the colours missing at vertices 1 and 2.
L1Enumeration enumerate_l1(int w, std::uint64_t budget = default_exact_budget);

/// Bipartite a_i b_j, j ∈ {i..i+w−1} mod t, minus a0b1, a0b2, a1b1, a1b2,
/// with t = (u−2w−1)/2. a_i = first+i, b_j = first+t+j. Throws
/// std::invalid_argument unless w is even ≥ 4, u is odd, and t ≥ w.
Graph build_L2(long long u, int w, Point first = 0);

/// Bowtie on c1..c5 plus w−6 isolated points; c_k = first+k−1. Throws
/// std::invalid_argument unless w is even and ≥ 6.
Graph build_L3(int w, Point first = 0);

struct FamilyLeave {
    int w = 0;
    long long u = 0;
    long long t = 0;
    Graph l1;  // on 0..w+1
    Graph l2;  // on w+2..w+1+2t
    Graph l3;  // on w+2+2t..u−1
    Graph leave;
    Point d1 = 1;
    Point d2 = 2;
};

/// L1 ∪ L2 ∪ L3 on 0..u−1. Throws std::invalid_argument unless w is even
/// ≥ 6, u is odd, u ≥ 4w+1 and u+w ≡ 1, 3 (mod 6).
FamilyLeave build_family_leave(long long u, int w);

/// u+w ≡ 1,3 (mod 6), u odd, u ≥ 4w+1.
bool is_family_order(long long u, int w);

/// The smallest `count` valid family orders for w.
std::vector<long long> family_orders(int w, std::size_t count);

/// A w-colouring of the family leave: the canonical colouring on L1,
/// König on L2 and Vizing on L3, palette 1..w.
EdgeColoring family_coloring(const FamilyLeave& f);

enum class Lemma31Mode { enumerate, structural };

struct Lemma31Report {
    long long order = 0;
    std::size_t edges = 0;
    long long expected_edges = 0;
    bool cond_i = false;
    Status cond_ii = Status::unknown;   // χ′(L) = w
    std::string cond_ii_method;
    Status cond_iii = Status::unknown;  // missing sets at d1, d2 always agree
    std::string cond_iii_method;
    std::uint64_t colorings_visited = 0;
    bool enumeration_exhausted = false;
    std::optional<EdgeColoring> coloring;  // a w-colouring when (ii) holds
    std::vector<std::string> notes;

    bool holds() const
    {
        return cond_i && cond_ii == Status::proved_yes && cond_iii == Status::proved_yes;
    }
};

/// Checks the three counterexample conditions for L, w, d1, d2. A proper
/// w-colouring may be supplied as a certificate for (ii); otherwise each
/// component is coloured by König, Vizing (when Δ+1 ≤ w) or exact search.
/// Throws std::invalid_argument when L is not even, has even order, w is
/// odd, or d1/d2 are not vertices.
Lemma31Report check_lemma31(const Graph& l, int w, Point d1, Point d2, Lemma31Mode mode,
                            std::uint64_t budget = default_exact_budget,
                            const EdgeColoring* certificate = nullptr);

struct ConjectureReport {
    long long u = 0;
    int w = 0;
    std::size_t edges = 0;
    bool cond1 = false;  // deg ≡ w (mod 2) everywhere
    bool cond2 = false;  // u + w odd when w > 0
    bool cond3 = false;  // |E| + uw + C(w,2) ≡ 0 (mod 3)
    std::string witness_source;  // "L", "provided", "searched" or "none"
    std::optional<Graph> witness;
    Status cond4_i = Status::unknown;    // L − G decomposable
    long long cond4_ii_value = 0;        // w² − (u+1)w + 2|E(G)|
    bool cond4_ii = false;
    Status cond4_iii = Status::unknown;  // χ′(G) ≤ w
    bool cond4 = false;
    Status decomposition = Status::unknown;  // of L ∨ K_w
    std::uint64_t decomposition_effort = 0;
    std::string decomposition_reason;

    bool conditions_hold() const { return cond1 && cond2 && cond3 && cond4; }
    bool counterexample() const { return conditions_hold() && decomposition == Status::proved_no; }
};

/// Evaluates conditions (1)–(4) and the ground truth for L ∨ K_w. Without a
/// witness G = L is tried first, then (when |E(L)| ≤ 20) every subgraph.
ConjectureReport check_conjecture(const Graph& l, int w, const std::optional<Graph>& witness = std::nullopt,
                                  std::uint64_t budget = default_exact_budget, unsigned jobs = 1);

inline constexpr std::size_t witness_search_edge_limit = 20;

struct RealizeOutcome {
    /// δ(complement) ≥ 91u/100, the density under which a system is known
    /// to exist for large u.
    bool density_hypothesis = false;
    SearchOutcome<TripleSystem> outcome;
};

/// A PSTS on V(L) whose leave is exactly L, by climbing on complement(L).
/// Throws std::invalid_argument when L is not even, has even order, or
/// |E(L)| ≢ C(u,2) (mod 3).
RealizeOutcome realize_as_leave(const Graph& l, std::uint64_t seed, std::uint64_t budget = 0,
                                unsigned attempts = 5);

}  // namespace pstskit
