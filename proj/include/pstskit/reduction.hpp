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

/// strict enforces the order hypotheses of the background theorem;
/// best_effort only the arithmetic each construction stage needs, so small
/// gadgets can be built with no guarantee attached.
enum class ReductionMode { strict, best_effort };

/// Sizes of a (u, v, G)-background. The working system has order u_prime;
/// the remaining u − u_prime points are padding with no triples.
struct BackgroundParams {
    long long n = 0;
    long long u = 0;
    long long v = 0;
    long long u_prime = 0;
    long long d = 0;        // |D| = v − u_prime
    long long a_prime = 0;  // |A′| = u_prime − d − n − 1
    int working_case = 0;   // 1 when u ≤ (2v+n+1)/3, else 2

    friend bool operator==(const BackgroundParams&, const BackgroundParams&) = default;
};

struct ParamCheck {
    std::optional<BackgroundParams> params;
    std::vector<std::string> violations;

    bool ok() const { return params.has_value() && violations.empty(); }
};

/// Validates (n, u, v); computes u′ and d; re-checks every stage's
/// arithmetic (working-order hypotheses, d ≡ 0 mod 6, d ≥ n+2, the
/// Doyen–Wilson hole, the double-hole conditions). Never throws.
ParamCheck check_params(long long n, long long u, long long v, ReductionMode mode = ReductionMode::strict);

/// Largest u′ ≤ min(u, (2v+n+1)/3) with u′ ≡ v (mod 6). Throws
/// std::invalid_argument when the strict hypotheses fail or no such u′ ≥ 1
/// exists.
long long select_working_order(long long n, long long u, long long v,
                               ReductionMode mode = ReductionMode::strict);

/// A background and its labelling. Points are 0..u−1: V(G) takes 0..n−1
/// (source vertices in ascending label order), x = n, D = n+1..n+d, A′ the
/// rest of the working set up to u′−1, Z the three lowest points of A′,
/// padding u′..u−1. Extension points for an order-v embedding are u..v−1.
struct BackgroundInstance {
    TripleSystem system;
    Graph source;                     // relabelled onto 0..n−1
    std::vector<Point> source_labels; // original label of source vertex i
    BackgroundParams params;
    ReductionMode mode = ReductionMode::strict;

    std::vector<Point> graph_points() const;
    Point x() const;
    std::vector<Point> d_points() const;
    std::vector<Point> a_prime() const;
    std::vector<Point> z() const;
    std::vector<Point> padding() const;
    std::vector<Point> working_points() const;  // 0..u′−1
    std::vector<Point> extension_points() const;  // u..v−1

    friend bool operator==(const BackgroundInstance&, const BackgroundInstance&) = default;
};

/// Attempts per stochastic stage before an unknown is propagated.
inline constexpr unsigned default_stage_attempts = 5;

using BackgroundOutcome = SearchOutcome<BackgroundInstance>;

/// Builds B0 (climb on K_A − (K̄_Z ∨ G)), B1 (K_{A″∪D} − K_{A″}), takes their
/// union, pads, and verifies. Stage failures come back as unknown with the
/// stage named in the reason. Throws std::invalid_argument when g is not
/// cubic or the parameters are rejected.
BackgroundOutcome build_background(const Graph& g, long long u, long long v, std::uint64_t seed,
                                   std::uint64_t budget = 0, ReductionMode mode = ReductionMode::strict,
                                   unsigned attempts = default_stage_attempts);

struct BackgroundAudit {
    bool ok = true;
    std::vector<std::string> failures;
    // Leave degrees inside the working set, min..max per class.
    std::size_t a_prime_min = 0, a_prime_max = 0;
    std::size_t z_min = 0, z_max = 0;
    std::size_t g_internal_min = 0, g_internal_max = 0;  // neighbours inside V(G)
    std::size_t g_to_z_min = 0, g_to_z_max = 0;          // neighbours in Z

    explicit operator bool() const { return ok; }
};

/// Structural check of a background; never throws.
BackgroundAudit verify_background(const BackgroundInstance& b);

/// Reassembles an instance from its system, sizes and source labels, with
/// the source graph read off the leave on 0..n−1. Throws
/// std::invalid_argument when the sizes do not fit the system.
BackgroundInstance background_from_parts(TripleSystem system, const BackgroundParams& params,
                                         std::vector<Point> source_labels, ReductionMode mode);

/// Completes the background to an STS(v) from a proper 3-edge-colouring of
/// the source (palette ranks map to Z). Throws std::invalid_argument for an
/// improper colouring or a background that fails verification.
SearchOutcome<TripleSystem> certify_yes(const BackgroundInstance& b, const EdgeColoring& gamma,
                                        std::uint64_t seed, std::uint64_t budget = 0,
                                        unsigned attempts = default_stage_attempts);

/// Reads a proper 3-edge-colouring of the source (palette = Z) out of an
/// order-v embedding. Throws std::invalid_argument when emb is not an
/// embedding of order v, std::runtime_error when a Z-edge of K̄_Z ∨ G is
/// covered through a point outside V(G) ∪ Z.
EdgeColoring extract_coloring(const BackgroundInstance& b, const TripleSystem& emb);

}  // namespace pstskit
