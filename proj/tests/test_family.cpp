#include "pstskit/coloring.hpp"
#include "pstskit/family.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace pstskit;

namespace {

// L1 straight from its definition, with ∞ = w+1.
Graph l1_by_definition(int w)
{
    std::set<std::pair<Point, Point>> c;
    auto add = [&](int x, int y) { c.insert({static_cast<Point>(std::min(x, y)), static_cast<Point>(std::max(x, y))}); };
    for (int x = 1; x <= w / 2; ++x)
        add(x, w + 1 - x);
    add(0, 2);
    add(1, 2);
    add(1, w + 1);
    std::vector<Edge> es;
    for (int x = 0; x <= w + 1; ++x)
        for (int y = x + 1; y <= w + 1; ++y)
            if (!c.count({static_cast<Point>(x), static_cast<Point>(y)}))
                es.push_back(make_edge(static_cast<Point>(x), static_cast<Point>(y)));
    return Graph(iota_points(0, static_cast<std::size_t>(w) + 2), es);
}

}  // namespace

TEST(Family, L1MatchesDefinition)
{
    for (int w = 4; w <= 40; w += 2) {
        const auto l1 = build_L1(w);
        EXPECT_EQ(l1, l1_by_definition(w));
        EXPECT_TRUE(is_even(l1));
        EXPECT_EQ(l1.degree(1), static_cast<std::size_t>(w - 2));
        EXPECT_EQ(l1.degree(2), static_cast<std::size_t>(w - 2));
        EXPECT_EQ(l1.max_degree(), static_cast<std::size_t>(w));
    }
    EXPECT_THROW(build_L1(5), std::invalid_argument);
    EXPECT_THROW(build_L1(2), std::invalid_argument);
}

TEST(Family, CanonicalL1Colouring)
{
    for (int w = 4; w <= 40; w += 2) {
        const auto c = l1_canonical_coloring(w);
        EXPECT_EQ(c.graph, build_L1(w));
        EXPECT_TRUE(is_proper(c));
        EXPECT_EQ(colors_used(c), static_cast<std::size_t>(w));
        const auto m1 = missing_colors(c, 1);
        EXPECT_EQ(m1.size(), 2u);
        EXPECT_EQ(m1, missing_colors(c, 2));
    }
}

TEST(Family, L1EnumerationAgreesWithLabelledOracle)
{
    const auto r = enumerate_l1(4);
    EXPECT_TRUE(r.exhausted);
    EXPECT_TRUE(r.all_equal);
    const auto l1 = build_L1(4);
    std::size_t labelled = 0;
    oracle::for_each_coloring(l1, 4, [&](const std::vector<int>& col) {
        ++labelled;
        EXPECT_EQ(oracle::missing(l1, col, 4, 1), oracle::missing(l1, col, 4, 2));
        return true;
    });
    // Every 4-colouring of L1 uses all four colours, so 4! labelled per class.
    EXPECT_EQ(labelled, 24 * r.visited);
}

TEST(Family, L1EnumerationSixExhausts)
{
    const auto r = enumerate_l1(6);
    EXPECT_TRUE(r.exhausted);
    EXPECT_TRUE(r.all_equal);
    EXPECT_GT(r.visited, 0u);
}

TEST(Family, L2IsBipartiteWithDegreesW)
{
    for (int w = 4; w <= 12; w += 2)
        for (long long u : {4LL * w + 1, 4LL * w + 7, 6LL * w + 3}) {
            const auto l2 = build_L2(u, w, 100);
            const long long t = (u - 2 * w - 1) / 2;
            EXPECT_EQ(l2.order(), static_cast<std::size_t>(2 * t));
            EXPECT_EQ(l2.size(), static_cast<std::size_t>(t * w - 4));
            EXPECT_FALSE(bipartition(l2).empty());
            EXPECT_TRUE(is_even(l2));
            EXPECT_EQ(l2.max_degree(), static_cast<std::size_t>(w));
            EXPECT_FALSE(l2.has_edge(100, 100 + static_cast<Point>(t) + 1));
            EXPECT_TRUE(is_proper(koenig_coloring(l2)));
        }
    EXPECT_THROW(build_L2(20, 6), std::invalid_argument);
}

TEST(Family, L3IsABowtie)
{
    const auto l3 = build_L3(8, 10);
    EXPECT_EQ(l3.order(), 7u);
    EXPECT_EQ(l3.size(), 6u);
    EXPECT_EQ(l3.max_degree(), 4u);
    EXPECT_TRUE(is_even(l3));
}

TEST(Family, OrdersFollowTheArithmetic)
{
    for (int w = 6; w <= 40; w += 2) {
        const auto us = family_orders(w, 3);
        ASSERT_EQ(us.size(), 3u);
        long long expect = 4 * w + 1;
        for (long long u : us) {
            while (!(expect % 2 == 1 && ((expect + w) % 6 == 1 || (expect + w) % 6 == 3)))
                ++expect;
            EXPECT_EQ(u, expect);
            EXPECT_TRUE(is_family_order(u, w));
            ++expect;
        }
    }
    EXPECT_FALSE(is_family_order(24, 6));
    EXPECT_THROW(build_family_leave(24, 6), std::invalid_argument);
}

TEST(Family, LeaveShape)
{
    const auto f = build_family_leave(25, 6);
    EXPECT_EQ(f.leave.order(), 25u);
    EXPECT_EQ(f.leave.size(), 60u);  // 6 · 20 / 2
    EXPECT_EQ(graph_union(graph_union(f.l1, f.l2), f.l3), f.leave);
    EXPECT_EQ(connected_components(f.leave).size(), 3u);
    const auto gamma = family_coloring(f);
    EXPECT_TRUE(is_proper(gamma));
    EXPECT_EQ(gamma.palette.size(), 6u);
}

TEST(Family, StructuralConditionsOnPsts15LeaveEnumerate)
{
    const auto l = leave(psts15());
    const auto r = check_lemma31(l, 4, 1, 2, Lemma31Mode::enumerate);
    EXPECT_TRUE(r.cond_i);
    EXPECT_EQ(r.cond_ii, Status::proved_yes);
    EXPECT_EQ(r.cond_iii, Status::proved_yes);
    EXPECT_TRUE(r.enumeration_exhausted);
    EXPECT_TRUE(r.holds());
}

TEST(Family, StructuralConditionsFailWhenMissingSetsDiffer)
{
    // A triangle and a 5-cycle sharing vertex 0: 8 = 4(7-4+1)/2 edges and
    // four colours suffice, but the 5-cycle can be recoloured on its own.
    const Graph g(iota_points(0, 7), {make_edge(0, 1), make_edge(1, 2), make_edge(0, 2), make_edge(0, 3),
                                      make_edge(3, 4), make_edge(4, 5), make_edge(5, 6), make_edge(0, 6)});
    const auto r = check_lemma31(g, 4, 1, 4, Lemma31Mode::enumerate);
    EXPECT_TRUE(r.cond_i);
    EXPECT_EQ(r.cond_ii, Status::proved_yes);
    EXPECT_EQ(r.cond_iii, Status::proved_no);
    EXPECT_FALSE(r.holds());
    EXPECT_THROW(check_lemma31(cycle_graph(4), 4, 0, 1, Lemma31Mode::enumerate), std::invalid_argument);
}

TEST(Family, Conjecture)
{
    const auto r = check_conjecture(leave(psts15()), 4);
    EXPECT_TRUE(r.cond1 && r.cond2 && r.cond3 && r.cond4);
    EXPECT_EQ(r.witness_source, "L");
    EXPECT_EQ(r.cond4_ii_value, 0);
    EXPECT_EQ(r.decomposition, Status::proved_no);
    EXPECT_TRUE(r.counterexample());
    // K_7 as L with w = 0: decomposable, so no counterexample.
    const auto k7 = check_conjecture(make_complete(iota_points(0, 7)), 0);
    EXPECT_EQ(k7.decomposition, Status::proved_yes);
    EXPECT_FALSE(k7.counterexample());
}

TEST(Family, RealizeAsLeave)
{
    const auto l = leave(psts15());
    const auto r = realize_as_leave(l, 1);
    ASSERT_EQ(r.outcome.status, Status::proved_yes);
    EXPECT_EQ(leave(*r.outcome.witness), l);
    const auto f = build_family_leave(25, 6);
    const auto rf = realize_as_leave(f.leave, 1);
    EXPECT_FALSE(rf.density_hypothesis);
    ASSERT_EQ(rf.outcome.status, Status::proved_yes);
    EXPECT_EQ(leave(*rf.outcome.witness), f.leave);
    EXPECT_THROW(realize_as_leave(cycle_graph(4), 1), std::invalid_argument);
}
