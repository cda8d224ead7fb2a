#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pstskit {

/// Three-valued search verdict. proved_no only ever comes out of a complete
/// search (or a necessary-condition failure); unknown only out of budget
/// exhaustion or an inconclusive sufficient-condition check.
enum class Status { proved_yes, proved_no, unknown };

std::string_view to_string(Status s);

/// CLI exit code for a verdict: 0 / 1 / 2.
int exit_code(Status s);

template <class Witness>
struct SearchOutcome {
    Status status = Status::unknown;
    std::optional<Witness> witness;
    std::uint64_t effort = 0;  // decision nodes or climb iterations
    std::string reason;

    bool proved_yes() const { return status == Status::proved_yes; }
    bool proved_no() const { return status == Status::proved_no; }
    bool unknown() const { return status == Status::unknown; }
};

inline constexpr std::uint64_t default_exact_budget = 100'000'000;
inline constexpr std::uint64_t default_climb_budget = 10'000'000;

/// Defaults, overridable through PSTSKIT_EXACT_BUDGET / PSTSKIT_CLIMB_BUDGET.
std::uint64_t exact_budget_from_env();
std::uint64_t climb_budget_from_env();

/// Named seed derivation: every stochastic stage draws from
/// derive_seed(user seed, stage name, attempt index) and nothing else.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage, std::uint64_t attempt);

}  // namespace pstskit
