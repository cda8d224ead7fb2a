#pragma once

#include "pstskit/search.hpp"
#include "pstskit/triple_system.hpp"

#include <cstdint>
#include <vector>

namespace pstskit {

/// One F-embed question: does `system` embed in an STS of any of the
/// listed orders? F(|U|) is given extensionally as `target_orders`.
struct EmbedQuery {
    TripleSystem system;
    std::vector<long long> target_orders;
    std::uint64_t budget = 0;  // per order; 0 selects the solver default
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

using EmbedOutcome = SearchOutcome<TripleSystem>;

struct OrderVerdict {
    long long order = 0;
    /// v >= 2u+1: an embedding is known to exist and is built by climbing.
    bool guaranteed = false;
    EmbedOutcome outcome;
};

/// Embedding attempts per guaranteed order before giving up with unknown.
inline constexpr unsigned embed_climb_attempts = 5;

/// One verdict per target order, in the query's order. Orders below 2u+1
/// go to the exact solver, so a "no" is a proof. Throws
/// std::invalid_argument for an invalid system, an inadmissible order, or
/// an order below u.
std::vector<OrderVerdict> decide_f_embed(const EmbedQuery& q);

}  // namespace pstskit
