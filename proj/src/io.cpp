#include "pstskit/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace pstskit {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> words;
};

std::vector<Line> read_lines(std::istream& in)
{
    std::vector<Line> out;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        std::istringstream words(text);
        Line line{number, {}};
        for (std::string w; words >> w;)
            line.words.push_back(w);
        if (line.words.empty() || line.words[0][0] == '#')
            continue;
        out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Line& l, const std::string& why)
{
    throw ParseError("line " + std::to_string(l.number) + ": " + why);
}

[[noreturn]] void fail(const std::string& why)
{
    throw ParseError(why);
}

bool parse_uint(const std::string& s, std::uint64_t& value)
{
    if (s.empty() || s[0] == '+' || s[0] == '-')
        return false;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

std::size_t count_field(const Line& l, std::size_t i)
{
    std::uint64_t v = 0;
    if (!parse_uint(l.words[i], v))
        fail(l, "expected a count, got '" + l.words[i] + "'");
    return static_cast<std::size_t>(v);
}

// Labels are numeric or symbolic; symbolic ones are resolved once all
// numeric labels of the file are known.
class Labels {
public:
    // Returns a provisional id: numeric labels as themselves, symbolic ones
    // tagged by index.
    std::pair<bool, std::uint64_t> read(const Line& l, const std::string& word)
    {
        std::uint64_t v = 0;
        if (parse_uint(word, v)) {
            if (v > 0xFFFFFFFFull)
                fail(l, "label " + word + " is too large");
            numeric_.push_back(static_cast<Point>(v));
            return {true, v};
        }
        auto it = std::find(names_.begin(), names_.end(), word);
        if (it == names_.end()) {
            names_.push_back(word);
            return {false, names_.size() - 1};
        }
        return {false, static_cast<std::uint64_t>(it - names_.begin())};
    }

    void resolve(SymbolMap* out)
    {
        std::sort(numeric_.begin(), numeric_.end());
        numeric_.erase(std::unique(numeric_.begin(), numeric_.end()), numeric_.end());
        symbolic_ = fresh_labels(numeric_, names_.size());
        if (out) {
            out->clear();
            for (std::size_t i = 0; i < names_.size(); ++i)
                out->emplace_back(names_[i], symbolic_[i]);
        }
    }

    Point get(std::pair<bool, std::uint64_t> id) const
    {
        return id.first ? static_cast<Point>(id.second) : symbolic_[id.second];
    }

private:
    std::vector<Point> numeric_;
    std::vector<std::string> names_;
    std::vector<Point> symbolic_;
};

using Id = std::pair<bool, std::uint64_t>;

const Line& header(const std::vector<Line>& lines, const std::string& tag, std::size_t fields)
{
    if (lines.empty())
        fail("empty input, expected '" + tag + "' header");
    const auto& h = lines[0];
    if (h.words[0] != tag || h.words.size() != fields)
        fail(h, "expected '" + tag + "' header with " + std::to_string(fields - 1) + " counts");
    return h;
}

}  // namespace

Graph parse_graph(std::istream& in, SymbolMap* symbols)
{
    const auto lines = read_lines(in);
    const auto& h = header(lines, "graph", 3);
    const auto n = count_field(h, 1);
    const auto m = count_field(h, 2);
    Labels labels;
    std::vector<std::pair<const Line*, Id>> vs;
    std::vector<std::tuple<const Line*, Id, Id>> es;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.words[0] == "v" && l.words.size() == 2)
            vs.emplace_back(&l, labels.read(l, l.words[1]));
        else if (l.words[0] == "e" && l.words.size() == 3)
            es.emplace_back(&l, labels.read(l, l.words[1]), labels.read(l, l.words[2]));
        else
            fail(l, "expected 'v <label>' or 'e <a> <b>'");
    }
    if (vs.size() != n)
        fail("header declares " + std::to_string(n) + " vertices, found " + std::to_string(vs.size()));
    if (es.size() != m)
        fail("header declares " + std::to_string(m) + " edges, found " + std::to_string(es.size()));
    labels.resolve(symbols);

    std::map<Point, const Line*> seen;
    std::vector<Point> vertices;
    for (const auto& [l, id] : vs) {
        const Point p = labels.get(id);
        if (!seen.emplace(p, l).second)
            fail(*l, "duplicate vertex " + l->words[1]);
        vertices.push_back(p);
    }
    std::map<Edge, const Line*> edge_seen;
    std::vector<Edge> edges;
    for (const auto& [l, x, y] : es) {
        const Point a = labels.get(x);
        const Point b = labels.get(y);
        if (a == b)
            fail(*l, "loop at " + l->words[1]);
        if (!seen.count(a) || !seen.count(b))
            fail(*l, "edge endpoint is not a declared vertex");
        const auto e = make_edge(a, b);
        if (!edge_seen.emplace(e, l).second)
            fail(*l, "duplicate edge " + l->words[1] + " " + l->words[2]);
        edges.push_back(e);
    }
    return Graph(std::move(vertices), std::move(edges));
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    out << "graph " << g.order() << ' ' << g.size() << '\n';
    for (Point v : g.vertices())
        out << "v " << v << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.a << ' ' << e.b << '\n';
    return out.str();
}

TripleSystem parse_triples(std::istream& in, SymbolMap* symbols, bool check_packing)
{
    const auto lines = read_lines(in);
    const auto& h = header(lines, "psts", 3);
    const auto u = count_field(h, 1);
    const auto k = count_field(h, 2);
    Labels labels;
    std::vector<std::pair<const Line*, Id>> ps;
    std::vector<std::pair<const Line*, std::array<Id, 3>>> ts;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.words[0] == "p" && l.words.size() == 2)
            ps.emplace_back(&l, labels.read(l, l.words[1]));
        else if (l.words[0] == "t" && l.words.size() == 4)
            ts.emplace_back(&l, std::array<Id, 3>{labels.read(l, l.words[1]), labels.read(l, l.words[2]),
                                                  labels.read(l, l.words[3])});
        else
            fail(l, "expected 'p <label>' or 't <a> <b> <c>'");
    }
    if (ps.size() != u)
        fail("header declares " + std::to_string(u) + " points, found " + std::to_string(ps.size()));
    if (ts.size() != k)
        fail("header declares " + std::to_string(k) + " triples, found " + std::to_string(ts.size()));
    labels.resolve(symbols);

    std::map<Point, const Line*> seen;
    std::vector<Point> points;
    for (const auto& [l, id] : ps) {
        const Point p = labels.get(id);
        if (!seen.emplace(p, l).second)
            fail(*l, "duplicate point " + l->words[1]);
        points.push_back(p);
    }
    std::map<Triple, const Line*> triple_seen;
    std::map<Edge, const Line*> pair_seen;
    std::vector<Triple> triples;
    for (const auto& [l, ids] : ts) {
        const Point a = labels.get(ids[0]);
        const Point b = labels.get(ids[1]);
        const Point c = labels.get(ids[2]);
        if (a == b || a == c || b == c)
            fail(*l, "degenerate triple " + l->words[1] + " " + l->words[2] + " " + l->words[3]);
        for (Point q : {a, b, c})
            if (!seen.count(q))
                fail(*l, "triple uses an undeclared point");
        const auto t = make_triple(a, b, c);
        if (!triple_seen.emplace(t, l).second)
            fail(*l, "duplicate triple");
        if (check_packing)
            for (const auto& e : {make_edge(t.a, t.b), make_edge(t.a, t.c), make_edge(t.b, t.c)})
                if (auto [it, fresh] = pair_seen.emplace(e, l); !fresh)
                    fail(*l, "pair " + std::to_string(e.a) + " " + std::to_string(e.b) + " already covered at line " +
                                 std::to_string(it->second->number));
        triples.push_back(t);
    }
    return TripleSystem(std::move(points), std::move(triples));
}

std::string format_triples(const TripleSystem& ts)
{
    std::ostringstream out;
    out << "psts " << ts.order() << ' ' << ts.size() << '\n';
    for (Point p : ts.points())
        out << "p " << p << '\n';
    for (const auto& t : ts.triples())
        out << "t " << t.a << ' ' << t.b << ' ' << t.c << '\n';
    return out.str();
}

EdgeColoring parse_coloring(std::istream& in, const Graph& g)
{
    const auto lines = read_lines(in);
    const auto& h = header(lines, "ecol", 3);
    const auto m = count_field(h, 1);
    const auto c = count_field(h, 2);
    if (m != g.size())
        fail(h, "colouring has " + std::to_string(m) + " edges, graph has " + std::to_string(g.size()));
    EdgeColoring out(g, standard_palette(c));
    std::size_t found = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.words[0] != "c" || l.words.size() != 4)
            fail(l, "expected 'c <a> <b> <colour>'");
        std::uint64_t a = 0, b = 0, col = 0;
        if (!parse_uint(l.words[1], a) || !parse_uint(l.words[2], b) || !parse_uint(l.words[3], col))
            fail(l, "expected integers");
        const int idx = a == b ? -1 : g.edge_index(static_cast<Point>(a), static_cast<Point>(b));
        if (idx < 0)
            fail(l, "not an edge of the graph");
        if (col < 1 || col > c)
            fail(l, "colour " + l.words[3] + " outside 1.." + std::to_string(c));
        if (out.assignment[static_cast<std::size_t>(idx)] != EdgeColoring::unassigned)
            fail(l, "edge coloured twice");
        out.assignment[static_cast<std::size_t>(idx)] = static_cast<ColorId>(col);
        ++found;
    }
    if (found != m)
        fail("header declares " + std::to_string(m) + " coloured edges, found " + std::to_string(found));
    return out;
}

std::string format_coloring(const EdgeColoring& c)
{
    std::ostringstream out;
    out << "ecol " << c.graph.size() << ' ' << c.palette.size() << '\n';
    const auto edges = c.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto col = c.assignment[i];
        const auto it = std::find(c.palette.begin(), c.palette.end(), col);
        out << "c " << edges[i].a << ' ' << edges[i].b << ' ';
        if (it == c.palette.end())
            out << 0;
        else
            out << (it - c.palette.begin()) + 1;
        out << '\n';
    }
    return out.str();
}

Metadata parse_metadata(std::istream& in)
{
    Metadata out;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        if (text.empty() || text[0] == '#')
            continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("line " + std::to_string(number) + ": expected key=value");
        out.emplace_back(text.substr(0, eq), text.substr(eq + 1));
    }
    return out;
}

std::string format_metadata(const Metadata& m)
{
    std::string out;
    for (const auto& [k, v] : m)
        out += k + "=" + v + "\n";
    return out;
}

const std::string& metadata_value(const Metadata& m, const std::string& key)
{
    for (const auto& [k, v] : m)
        if (k == key)
            return v;
    throw ParseError("metadata key '" + key + "' is missing");
}

namespace {

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return in;
}

template <class F>
auto with_path(const std::string& path, F&& f)
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

Graph read_graph_file(const std::string& path, SymbolMap* symbols)
{
    auto in = open_input(path);
    return with_path(path, [&] { return parse_graph(in, symbols); });
}

TripleSystem read_triples_file(const std::string& path, SymbolMap* symbols, bool check_packing)
{
    auto in = open_input(path);
    return with_path(path, [&] { return parse_triples(in, symbols, check_packing); });
}

EdgeColoring read_coloring_file(const std::string& path, const Graph& g)
{
    auto in = open_input(path);
    return with_path(path, [&] { return parse_coloring(in, g); });
}

Metadata read_metadata_file(const std::string& path)
{
    auto in = open_input(path);
    return with_path(path, [&] { return parse_metadata(in); });
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

std::string format_symbols(const SymbolMap& symbols)
{
    std::string out;
    for (const auto& [name, p] : symbols)
        out += (out.empty() ? "" : ",") + name + ":" + std::to_string(p);
    return out;
}

}  // namespace pstskit
