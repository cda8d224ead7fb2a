#include "pstskit/family.hpp"
#include "pstskit/io.hpp"
#include "pstskit/triple_system.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace pstskit;

namespace {

// The 27 triples of the order-15 example, typed in independently.
const char* const psts15_text = R"(psts 15 27
p 1
p 2
p 3
p 4
p 5
p 6
p 7
p 8
p 9
p 10
p 11
p 12
p 13
p 14
p 15
t 1 2 7
t 1 3 12
t 1 4 11
t 1 8 15
t 1 9 10
t 1 13 14
t 2 5 10
t 2 6 13
t 2 8 11
t 2 9 14
t 2 12 15
t 3 7 8
t 3 9 15
t 3 10 14
t 3 11 13
t 4 7 15
t 4 8 14
t 4 9 13
t 4 10 12
t 5 7 13
t 5 8 12
t 5 9 11
t 5 14 15
t 6 7 10
t 6 8 9
t 6 11 15
t 6 12 14
)";

TripleSystem parse(const std::string& s, SymbolMap* symbols = nullptr, bool check = true)
{
    std::istringstream in(s);
    return parse_triples(in, symbols, check);
}

Graph parse_g(const std::string& s, SymbolMap* symbols = nullptr)
{
    std::istringstream in(s);
    return parse_graph(in, symbols);
}

TripleSystem random_packing(std::mt19937_64& rng, std::size_t u, std::size_t tries)
{
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(u - 1));
    std::vector<Triple> ts;
    std::set<std::pair<Point, Point>> used;
    for (std::size_t i = 0; i < tries; ++i) {
        const Point a = pick(rng), b = pick(rng), c = pick(rng);
        if (a == b || b == c || a == c)
            continue;
        const auto t = make_triple(a, b, c);
        if (used.count({t.a, t.b}) || used.count({t.a, t.c}) || used.count({t.b, t.c}))
            continue;
        used.insert({t.a, t.b});
        used.insert({t.a, t.c});
        used.insert({t.b, t.c});
        ts.push_back(t);
    }
    return TripleSystem(iota_points(0, u), ts);
}

}  // namespace

TEST(TripleSystem, MakeTripleSortsAndRejectsDegenerate)
{
    EXPECT_EQ(make_triple(5, 1, 3), (Triple{1, 3, 5}));
    EXPECT_THROW(make_triple(1, 1, 2), std::invalid_argument);
}

TEST(TripleSystem, ValidateCatchesRepeatedPairAndForeignPoint)
{
    const TripleSystem bad({0, 1, 2, 3}, {{0, 1, 2}, {0, 1, 3}});
    const auto r = validate(bad);
    EXPECT_FALSE(r.valid);
    ASSERT_TRUE(r.repeated_pair.has_value());
    EXPECT_EQ(*r.repeated_pair, (std::pair<Point, Point>{0, 1}));
    EXPECT_FALSE(validate(TripleSystem({0, 1}, {{0, 1, 2}})).valid);
    EXPECT_THROW(leave(bad), std::invalid_argument);
}

TEST(TripleSystem, Psts15MatchesIndependentTranscription)
{
    const auto ts = psts15();
    EXPECT_EQ(ts, parse(psts15_text));
    EXPECT_TRUE(validate(ts).valid);
    EXPECT_TRUE(oracle::is_packing(ts));
    EXPECT_EQ(ts.size(), 27u);
}

TEST(TripleSystem, Psts15Leave)
{
    const auto l = leave(psts15());
    EXPECT_EQ(l.size(), 24u);
    EXPECT_EQ(l.size(), oracle::uncovered_pairs(psts15()));
    EXPECT_TRUE(is_even(l));
    EXPECT_EQ(l.max_degree(), 4u);
    const auto comps = connected_components(l);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].size() + comps[1].size(), 15u);
    std::size_t deg2 = 0;
    for (Point x : l.vertices())
        deg2 += l.degree(x) == 2;
    EXPECT_EQ(deg2, 6u);
}

TEST(TripleSystem, LeaveAndCoveredPartitionTheCompleteGraph)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto ts = random_packing(rng, 3 + i % 15, 40);
        ASSERT_TRUE(oracle::is_packing(ts));
        const auto l = leave(ts);
        const auto c = covered_graph(ts);
        EXPECT_EQ(l.size(), oracle::uncovered_pairs(ts));
        EXPECT_EQ(c.size(), 3 * ts.size());
        EXPECT_EQ(graph_union(l, c).size(), ts.order() * (ts.order() - 1) / 2);
        EXPECT_EQ(subtract(l, c), l);
    }
}

TEST(TripleSystem, Admissibility)
{
    for (long long v = -3; v < 200; ++v)
        EXPECT_EQ(is_admissible(v), v >= 1 && (v % 6 == 1 || v % 6 == 3)) << v;
}

TEST(TripleSystem, EmbeddingAndCompleteness)
{
    const TripleSystem fano(iota_points(0, 7),
                            {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    EXPECT_TRUE(is_complete(fano));
    EXPECT_TRUE(is_embedding(TripleSystem({0, 1, 2, 3}, {{0, 1, 2}}), fano));
    EXPECT_FALSE(is_embedding(TripleSystem({0, 1, 3}, {{0, 1, 3}}), fano));
    EXPECT_FALSE(is_embedding(fano, psts15()));
    EXPECT_FALSE(is_complete(psts15()));
}

TEST(TripleSystem, IsolatedPointsAndFreshLabels)
{
    const std::vector<Point> used{0, 1, 3, 7};
    EXPECT_EQ(fresh_labels(used, 4), (std::vector<Point>{2, 4, 5, 6}));
    const auto ts = psts15();
    const auto big = add_isolated_points(ts, 3);
    EXPECT_EQ(big.order(), 18u);
    EXPECT_TRUE(big.has_point(0));
    EXPECT_TRUE(big.has_point(16));
    // A point in no triple meets every other point in the leave.
    const auto l = leave(big);
    EXPECT_EQ(l.degree(0), 17u);
    EXPECT_EQ(l.size(), 24u + 3 * 15 + 3);
}

TEST(Io, Psts15RoundTripsByteIdentically)
{
    EXPECT_EQ(format_triples(parse(psts15_text)), psts15_text);
    EXPECT_EQ(format_triples(psts15()), psts15_text);
}

TEST(Io, GraphRoundTrip)
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        const auto g = oracle::random_graph(rng, 1 + i % 10, 0.5, false);
        const auto text = format_graph(g);
        EXPECT_EQ(parse_g(text), g);
        EXPECT_EQ(format_graph(parse_g(text)), text);
    }
}

TEST(Io, ColoringRoundTrip)
{
    const auto g = leave(psts15());
    const auto gamma = family_coloring(build_family_leave(25, 6));
    const auto text = format_coloring(gamma);
    std::istringstream in(text);
    EXPECT_EQ(format_coloring(parse_coloring(in, gamma.graph)), text);
    std::istringstream wrong(text);
    EXPECT_THROW(parse_coloring(wrong, g), ParseError);
}

TEST(Io, ParseErrorsNameTheLine)
{
    try {
        parse("psts 3 1\np 1\np 2\np 3\nt 1 1 2\n");
        FAIL();
    } catch (const std::exception& e) {
        EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("degenerate triple"), std::string::npos);
    }
    EXPECT_THROW(parse("psts 4 2\np 1\np 2\np 3\np 4\nt 1 2 3\nt 1 2 4\n"), ParseError);
    EXPECT_NO_THROW(parse("psts 4 2\np 1\np 2\np 3\np 4\nt 1 2 3\nt 1 2 4\n", nullptr, false));
    EXPECT_THROW(parse("psts 3 1\np 1\np 2\np 3\n"), ParseError);
    EXPECT_THROW(parse_g("graph 2 1\nv 0\nv 1\ne 0 0\n"), ParseError);
    EXPECT_THROW(parse_g("graph 2 2\nv 0\nv 1\ne 0 1\ne 1 0\n"), ParseError);
    EXPECT_THROW(parse_g("graph 2 0\nv 1\nv 1\n"), ParseError);
    EXPECT_THROW(parse_g("graph 3 0\nv 0\nv 1\n"), ParseError);
}

TEST(Io, CommentsAndBlankLinesIgnored)
{
    EXPECT_EQ(parse_g("# header\ngraph 2 1\n\nv 0\nv 1\n# edge\ne 0 1\n"), make_complete({0, 1}));
}

TEST(Io, SymbolicLabelsGetUnusedIntegers)
{
    SymbolMap symbols;
    const auto g = parse_g("graph 3 2\nv 0\nv 2\nv inf\ne 0 inf\ne 2 inf\n", &symbols);
    ASSERT_EQ(symbols.size(), 1u);
    EXPECT_EQ(symbols[0], (std::pair<std::string, Point>{"inf", 1}));
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_EQ(format_symbols(symbols), "inf:1");
}

TEST(Io, Metadata)
{
    const Metadata m{{"b", "2"}, {"a", "x y"}};
    std::istringstream in(format_metadata(m));
    const auto back = parse_metadata(in);
    EXPECT_EQ(back, m);
    EXPECT_EQ(metadata_value(back, "a"), "x y");
    EXPECT_THROW(metadata_value(back, "c"), ParseError);
}
