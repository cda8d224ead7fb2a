#include "pstskit/embed.hpp"

#include "pstskit/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pstskit {

std::vector<OrderVerdict> decide_f_embed(const EmbedQuery& q)
{
    if (auto r = validate(q.system); !r)
        throw std::invalid_argument("invalid system: " + r.message);
    const auto u = static_cast<long long>(q.system.order());
    for (long long v : q.target_orders) {
        if (!is_admissible(v))
            throw std::invalid_argument("target order " + std::to_string(v) + " is not admissible");
        if (v < u)
            throw std::invalid_argument("target order " + std::to_string(v) + " is below the system order " +
                                        std::to_string(u));
    }
    const Graph covered = covered_graph(q.system);
    std::vector<OrderVerdict> out;
    for (long long v : q.target_orders) {
        OrderVerdict verdict;
        verdict.order = v;
        verdict.guaranteed = v >= 2 * u + 1;

        std::vector<Point> points(q.system.points().begin(), q.system.points().end());
        const auto extra = fresh_labels(points, static_cast<std::size_t>(v - u));
        points.insert(points.end(), extra.begin(), extra.end());
        std::sort(points.begin(), points.end());

        TrianglePackingProblem p;
        p.host = subtract(make_complete(points), covered);
        p.budget = q.budget;
        p.jobs = q.jobs;

        auto finish = [&](const DecompositionOutcome& d) {
            verdict.outcome.status = d.status;
            verdict.outcome.effort += d.effort;
            verdict.outcome.reason = d.reason;
            if (d.witness) {
                std::vector<Triple> all(q.system.triples().begin(), q.system.triples().end());
                all.insert(all.end(), d.witness->begin(), d.witness->end());
                verdict.outcome.witness = TripleSystem(points, std::move(all));
            }
        };

        if (verdict.guaranteed) {
            if (p.budget == 0)
                p.budget = climb_budget_from_env();
            const std::string stage = "embed:" + std::to_string(v);
            for (unsigned attempt = 0; attempt < embed_climb_attempts; ++attempt) {
                p.seed = derive_seed(q.seed, stage, attempt);
                const auto d = hill_climb(p);
                finish(d);
                if (d.status != Status::unknown)
                    break;
            }
        } else {
            if (p.budget == 0)
                p.budget = exact_budget_from_env();
            finish(exact_k3_decompose(p));
        }
        out.push_back(std::move(verdict));
    }
    return out;
}

}  // namespace pstskit
