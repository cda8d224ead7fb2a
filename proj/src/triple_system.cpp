#include "pstskit/triple_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pstskit {

Triple make_triple(Point x, Point y, Point z)
{
    if (x == y || y == z || x == z)
        throw std::invalid_argument("degenerate triple " + std::to_string(x) + " " + std::to_string(y) + " " +
                                    std::to_string(z));
    Point p[3] = {x, y, z};
    std::sort(p, p + 3);
    return {p[0], p[1], p[2]};
}

TripleSystem::TripleSystem(std::vector<Point> points, std::vector<Triple> triples)
    : points_(std::move(points)), triples_(std::move(triples))
{
    for (auto& t : triples_) {
        Point p[3] = {t.a, t.b, t.c};
        std::sort(p, p + 3);
        t = {p[0], p[1], p[2]};
    }
    std::sort(points_.begin(), points_.end());
    std::sort(triples_.begin(), triples_.end());
}

bool TripleSystem::has_point(Point x) const
{
    return std::binary_search(points_.begin(), points_.end(), x);
}

bool TripleSystem::has_triple(const Triple& t) const
{
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

namespace {

std::uint64_t pair_key(Point x, Point y)
{
    if (x > y)
        std::swap(x, y);
    return (static_cast<std::uint64_t>(x) << 32) | y;
}

}  // namespace

ValidationReport validate(const TripleSystem& ts)
{
    ValidationReport report;
    const auto pts = ts.points();
    if (auto dup = std::adjacent_find(pts.begin(), pts.end()); dup != pts.end()) {
        report.valid = false;
        report.message = "duplicate point " + std::to_string(*dup);
        return report;
    }
    std::unordered_map<std::uint64_t, std::size_t> owner;
    owner.reserve(ts.size() * 3);
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const auto& t = ts.triples()[k];
        if (t.a == t.b || t.b == t.c) {
            report.valid = false;
            report.message = "degenerate triple " + std::to_string(t.a) + " " + std::to_string(t.b) + " " +
                             std::to_string(t.c);
            return report;
        }
        for (Point x : {t.a, t.b, t.c}) {
            if (!ts.has_point(x)) {
                report.valid = false;
                report.message = "triple uses point " + std::to_string(x) + " outside the point set";
                return report;
            }
        }
        for (auto [x, y] : {std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}}) {
            auto [it, fresh] = owner.emplace(pair_key(x, y), k);
            if (!fresh) {
                report.valid = false;
                report.repeated_pair = std::pair{x, y};
                report.message = "pair " + std::to_string(x) + " " + std::to_string(y) + " lies in two triples";
                return report;
            }
        }
    }
    return report;
}

Graph covered_graph(const TripleSystem& ts)
{
    std::vector<Edge> edges;
    edges.reserve(ts.size() * 3);
    for (const auto& t : ts.triples()) {
        edges.push_back({t.a, t.b});
        edges.push_back({t.a, t.c});
        edges.push_back({t.b, t.c});
    }
    return Graph({ts.points().begin(), ts.points().end()}, std::move(edges));
}

Graph leave(const TripleSystem& ts)
{
    if (auto r = validate(ts); !r)
        throw std::invalid_argument("leave of invalid system: " + r.message);
    return complement(covered_graph(ts));
}

bool is_complete(const TripleSystem& ts)
{
    const auto u = ts.order();
    return 3 * ts.size() == u * (u > 0 ? u - 1 : 0) / 2;
}

bool is_embedding(const TripleSystem& small, const TripleSystem& big)
{
    if (auto r = validate(small); !r)
        throw std::invalid_argument("embedding check: small system invalid: " + r.message);
    if (auto r = validate(big); !r)
        throw std::invalid_argument("embedding check: big system invalid: " + r.message);
    if (!std::includes(big.points().begin(), big.points().end(), small.points().begin(), small.points().end()))
        return false;
    if (!std::includes(big.triples().begin(), big.triples().end(), small.triples().begin(),
                       small.triples().end()))
        return false;
    return is_complete(big);
}

bool is_admissible(long long v)
{
    return v >= 1 && (v % 6 == 1 || v % 6 == 3);
}

std::vector<Point> fresh_labels(std::span<const Point> used, std::size_t k)
{
    std::vector<Point> out;
    out.reserve(k);
    Point candidate = 0;
    std::size_t pos = 0;
    while (out.size() < k) {
        while (pos < used.size() && used[pos] < candidate)
            ++pos;
        if (pos < used.size() && used[pos] == candidate) {
            ++candidate;
            continue;
        }
        out.push_back(candidate++);
    }
    return out;
}

TripleSystem add_isolated_points(const TripleSystem& ts, std::size_t k)
{
    std::vector<Point> points(ts.points().begin(), ts.points().end());
    auto extra = fresh_labels(ts.points(), k);
    points.insert(points.end(), extra.begin(), extra.end());
    return TripleSystem(std::move(points), {ts.triples().begin(), ts.triples().end()});
}

}  // namespace pstskit
