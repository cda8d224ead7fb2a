#pragma once

#include "pstskit/graph.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pstskit {

/// A 3-subset stored with a < b < c.
struct Triple {
    Point a = 0;
    Point b = 0;
    Point c = 0;

    auto operator<=>(const Triple&) const = default;

    bool contains(Point x) const { return x == a || x == b || x == c; }
};

/// Sorts the points. Throws std::invalid_argument("degenerate triple ...")
/// when two of them coincide.
Triple make_triple(Point x, Point y, Point z);

/// A point set together with a set of triples. Construction canonicalizes
/// (sorts points and triples) but does not enforce the packing property;
/// call validate() for that.
class TripleSystem {
public:
    TripleSystem() = default;
    TripleSystem(std::vector<Point> points, std::vector<Triple> triples);

    std::span<const Point> points() const { return points_; }
    std::span<const Triple> triples() const { return triples_; }
    std::size_t order() const { return points_.size(); }
    std::size_t size() const { return triples_.size(); }
    bool has_point(Point x) const;
    bool has_triple(const Triple& t) const;

    friend bool operator==(const TripleSystem&, const TripleSystem&) = default;

private:
    std::vector<Point> points_;
    std::vector<Triple> triples_;
};

struct ValidationReport {
    bool valid = true;
    std::string message;
    /// First pair found in two triples, if that is the failure.
    std::optional<std::pair<Point, Point>> repeated_pair;

    explicit operator bool() const { return valid; }
};

/// Never throws. Checks that triples are 3 distinct points of the point set,
/// that the point set has no duplicates, and that no pair is covered twice.
ValidationReport validate(const TripleSystem& ts);

/// Uncovered pairs, on the full point set. Throws std::invalid_argument for
/// an invalid system.
Graph leave(const TripleSystem& ts);

/// Triples of the system regarded as a K_3-packing: the covered pairs.
Graph covered_graph(const TripleSystem& ts);

/// True iff small's points and triples are contained in big's and big is a
/// complete system. Throws std::invalid_argument if either is invalid.
bool is_embedding(const TripleSystem& small, const TripleSystem& big);

bool is_complete(const TripleSystem& ts);

/// v >= 1 and v ≡ 1, 3 (mod 6).
bool is_admissible(long long v);

/// Adds k points with the smallest labels not already in use.
TripleSystem add_isolated_points(const TripleSystem& ts, std::size_t k);

/// The k smallest labels not in `used` (which must be sorted).
std::vector<Point> fresh_labels(std::span<const Point> used, std::size_t k);

}  // namespace pstskit
