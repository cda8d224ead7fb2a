#include "pstskit/search.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <random>
#include <vector>

namespace pstskit {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::proved_yes:
        return "ProvedYes";
    case Status::proved_no:
        return "ProvedNo";
    case Status::unknown:
        return "Unknown";
    }
    return "Unknown";
}

int exit_code(Status s)
{
    switch (s) {
    case Status::proved_yes:
        return 0;
    case Status::proved_no:
        return 1;
    case Status::unknown:
        return 2;
    }
    return 2;
}

namespace {

std::uint64_t budget_from_env(const char* name, std::uint64_t fallback)
{
    const char* text = std::getenv(name);
    if (text == nullptr || *text == '\0')
        return fallback;
    std::uint64_t value = 0;
    const char* end = text + std::strlen(text);
    auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc{} || ptr != end || value == 0)
        return fallback;
    return value;
}

}  // namespace

std::uint64_t exact_budget_from_env()
{
    return budget_from_env("PSTSKIT_EXACT_BUDGET", default_exact_budget);
}

std::uint64_t climb_budget_from_env()
{
    return budget_from_env("PSTSKIT_CLIMB_BUDGET", default_climb_budget);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage, std::uint64_t attempt)
{
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                     static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
    for (unsigned char ch : stage)
        words.push_back(ch);
    std::seed_seq seq(words.begin(), words.end());
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

}  // namespace pstskit
