#include "cli.hpp"

#include "pstskit/coloring.hpp"
#include "pstskit/embed.hpp"
#include "pstskit/family.hpp"
#include "pstskit/io.hpp"
#include "pstskit/reduction.hpp"
#include "pstskit/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace pstskit::cli {

namespace {

constexpr int exit_usage = 3;

/// key=value lines in insertion order.
class Report {
public:
    template <class T>
    void add(const std::string& key, const T& value)
    {
        std::ostringstream s;
        s << value;
        lines_.emplace_back(key, s.str());
    }
    void add(const std::string& key, bool value) { lines_.emplace_back(key, value ? "true" : "false"); }
    void add(const std::string& key, Status value) { lines_.emplace_back(key, std::string(to_string(value))); }

    std::string str() const
    {
        std::string out;
        for (const auto& [k, v] : lines_)
            out += k + "=" + v + "\n";
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

struct Common {
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    unsigned jobs = 1;
    std::string out;
};

void add_seed(CLI::App* app, Common& c)
{
    app->add_option("--seed", c.seed, "random seed; every stochastic stage derives from it");
}

void add_budget(CLI::App* app, Common& c)
{
    app->add_option("--budget", c.budget, "search budget (nodes or iterations; 0 = default)");
}

void add_jobs(CLI::App* app, Common& c)
{
    app->add_option("--jobs", c.jobs, "worker threads for the exact solver")->check(CLI::Range(1u, 256u));
}

CLI::Option* add_out(CLI::App* app, Common& c, const char* what)
{
    return app->add_option("--out", c.out, what);
}

std::string join_args(const std::vector<std::string>& args)
{
    std::string s;
    for (const auto& a : args)
        s += (s.empty() ? "" : " ") + a;
    return s;
}

std::string point_list(std::span<const Point> pts)
{
    std::string s;
    for (Point p : pts)
        s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
}

std::string point_range(std::span<const Point> pts)
{
    if (pts.empty())
        return "";
    return std::to_string(pts.front()) + ".." + std::to_string(pts.back());
}

// "1,2,5-9" → sorted point list.
std::vector<Point> parse_points(const std::string& text)
{
    std::vector<Point> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty())
            continue;
        const auto dash = item.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(static_cast<Point>(std::stoul(item)));
            } else {
                const auto lo = std::stoul(item.substr(0, dash));
                const auto hi = std::stoul(item.substr(dash + 1));
                if (hi < lo)
                    throw std::invalid_argument("empty range");
                for (auto p = lo; p <= hi; ++p)
                    out.push_back(static_cast<Point>(p));
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad point list '" + text + "'");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long long> parse_orders(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad order list '" + text + "'");
        }
    }
    if (out.empty())
        throw std::invalid_argument("no target orders given");
    return out;
}

std::string graph_summary(const Graph& g)
{
    std::map<std::size_t, std::size_t> hist;
    for (Point x : g.vertices())
        ++hist[g.degree(x)];
    std::string s;
    for (const auto& [d, k] : hist)
        s += (s.empty() ? "" : ",") + std::to_string(d) + ":" + std::to_string(k);
    return s;
}

/// Collects witness text: written to a file when a path is known, appended
/// after the report otherwise.
class Outputs {
public:
    explicit Outputs(Report& r) : report_(r) {}

    void emit(const std::string& key, const std::string& path, const std::string& text)
    {
        if (path.empty()) {
            report_.add(key, "stdout");
            trailing_.push_back(text);
        } else {
            write_text_file(path, text);
            report_.add(key, path);
        }
    }

    void flush(std::ostream& out) const
    {
        out << report_.str();
        for (const auto& t : trailing_)
            out << '\n' << t;
    }

private:
    Report& report_;
    std::vector<std::string> trailing_;
};

std::string with_suffix(const std::string& prefix, const std::string& suffix)
{
    return prefix.empty() ? std::string{} : prefix + suffix;
}

void add_symbols(Report& r, const SymbolMap& symbols)
{
    if (!symbols.empty())
        r.add("label_map", format_symbols(symbols));
}

// ---------------------------------------------------------------- backgrounds

Metadata background_metadata(const BackgroundInstance& b)
{
    const auto& p = b.params;
    const bool strict = b.mode == ReductionMode::strict;
    return {
        {"format", "background"},
        {"mode", strict ? "strict" : "best-effort"},
        {"guarantee", strict ? "background" : "none"},
        {"n", std::to_string(p.n)},
        {"u", std::to_string(p.u)},
        {"v", std::to_string(p.v)},
        {"u_prime", std::to_string(p.u_prime)},
        {"d", std::to_string(p.d)},
        {"a_prime", std::to_string(p.a_prime)},
        {"case", std::to_string(p.working_case)},
        {"graph_points", point_range(b.graph_points())},
        {"x", std::to_string(b.x())},
        {"D", point_range(b.d_points())},
        {"A_prime", point_range(b.a_prime())},
        {"Z", point_list(b.z())},
        {"padding", point_range(b.padding())},
        {"extension", point_range(b.extension_points())},
        {"source_labels", point_list(b.source_labels)},
    };
}

long long meta_int(const Metadata& m, const std::string& key)
{
    const auto& v = metadata_value(m, key);
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::logic_error&) {
        throw ParseError("metadata key '" + key + "' is not an integer: " + v);
    }
}

std::string meta_path_for(const std::string& psts_path)
{
    const std::string ext = ".psts";
    if (psts_path.size() > ext.size() && psts_path.ends_with(ext))
        return psts_path.substr(0, psts_path.size() - ext.size()) + ".meta";
    return psts_path + ".meta";
}

BackgroundInstance load_background(const std::string& psts_path, std::string meta_path)
{
    if (meta_path.empty())
        meta_path = meta_path_for(psts_path);
    const auto meta = read_metadata_file(meta_path);
    if (metadata_value(meta, "format") != "background")
        throw ParseError(meta_path + ": not background metadata");
    BackgroundParams p;
    p.n = meta_int(meta, "n");
    p.u = meta_int(meta, "u");
    p.v = meta_int(meta, "v");
    p.u_prime = meta_int(meta, "u_prime");
    p.d = meta_int(meta, "d");
    p.a_prime = meta_int(meta, "a_prime");
    p.working_case = static_cast<int>(meta_int(meta, "case"));
    const auto mode =
        metadata_value(meta, "mode") == "strict" ? ReductionMode::strict : ReductionMode::best_effort;
    auto labels = parse_points(metadata_value(meta, "source_labels"));
    // parse_points sorts; the stored list is ascending by construction.
    auto b = background_from_parts(read_triples_file(psts_path), p, std::move(labels), mode);
    if (auto audit = verify_background(b); !audit)
        throw std::invalid_argument("background fails verification: " + audit.failures.front());
    return b;
}

// Source graph under its original labels and the maps between the two.
struct SourceLabels {
    Graph original;
    std::unordered_map<Point, Point> to_internal;
    std::unordered_map<Point, Point> to_original;
};

SourceLabels source_labels(const BackgroundInstance& b)
{
    SourceLabels s;
    for (std::size_t i = 0; i < b.source_labels.size(); ++i) {
        s.to_original[static_cast<Point>(i)] = b.source_labels[i];
        s.to_internal[b.source_labels[i]] = static_cast<Point>(i);
    }
    s.original = relabel(b.source, s.to_original);
    return s;
}

EdgeColoring map_coloring(const EdgeColoring& c, const Graph& target, const std::unordered_map<Point, Point>& f)
{
    EdgeColoring out(target, c.palette);
    for (const auto& e : c.graph.edges())
        out.set(f.at(e.a), f.at(e.b), c.color(e.a, e.b));
    return out;
}

// ---------------------------------------------------------------- commands

int cmd_verify(const std::string& file, const std::string& embeds, const std::string& host_path,
               const std::string& graph_path, const std::string& coloring_path, Report& r)
{
    if (!coloring_path.empty()) {
        if (graph_path.empty())
            throw std::invalid_argument("--coloring needs --graph");
        const auto g = read_graph_file(graph_path);
        const auto c = read_coloring_file(coloring_path, g);
        const bool ok = is_proper(c);
        r.add("kind", "coloring");
        r.add("edges", g.size());
        r.add("colors", c.palette.size());
        r.add("colors_used", colors_used(c));
        r.add("proper", ok);
        return ok ? 0 : 1;
    }
    if (file.empty())
        throw std::invalid_argument("nothing to verify");
    SymbolMap symbols;
    const auto ts = read_triples_file(file, &symbols, false);
    add_symbols(r, symbols);
    const auto v = validate(ts);
    r.add("kind", "psts");
    r.add("order", ts.order());
    r.add("triples", ts.size());
    r.add("valid", v.valid);
    if (!v.valid) {
        r.add("violation", v.message);
        return 1;
    }
    const bool complete = is_complete(ts);
    r.add("leave_edges", leave(ts).size());
    r.add("complete", complete);
    int code = 0;
    if (!embeds.empty()) {
        const auto small = read_triples_file(embeds);
        const bool emb = is_embedding(small, ts);
        r.add("embeds", emb);
        if (!emb)
            code = 1;
    }
    if (!host_path.empty()) {
        const auto host = read_graph_file(host_path);
        std::string why;
        const bool ok = verify_packing(host, {}, {ts.triples().begin(), ts.triples().end()}, true, &why);
        r.add("decomposes_host", ok);
        if (!ok) {
            r.add("host_violation", why);
            code = 1;
        }
    }
    return code;
}

int cmd_leave(const std::string& file, const Common& c, Report& r, Outputs& o)
{
    SymbolMap symbols;
    const auto ts = read_triples_file(file, &symbols);
    add_symbols(r, symbols);
    const auto l = leave(ts);
    r.add("order", l.order());
    r.add("edges", l.size());
    r.add("even", is_even(l));
    r.add("components", connected_components(l).size());
    r.add("degrees", graph_summary(l));
    o.emit("leave", c.out, format_graph(l));
    return 0;
}

int cmd_embed(const std::string& file, const std::string& orders, const Common& c, Report& r, Outputs& o)
{
    SymbolMap symbols;
    EmbedQuery q;
    q.system = read_triples_file(file, &symbols);
    q.target_orders = parse_orders(orders);
    q.seed = c.seed;
    q.budget = c.budget;
    q.jobs = c.jobs;
    add_symbols(r, symbols);
    r.add("order", q.system.order());
    r.add("jobs", c.jobs);
    bool any_yes = false;
    bool any_unknown = false;
    for (const auto& v : decide_f_embed(q)) {
        const std::string k = "target." + std::to_string(v.order);
        r.add(k + ".method", v.guaranteed ? "climb" : "exact");
        r.add(k + ".status", v.outcome.status);
        r.add(k + ".effort", v.outcome.effort);
        if (!v.outcome.reason.empty())
            r.add(k + ".reason", v.outcome.reason);
        if (v.outcome.witness)
            o.emit(k + ".witness", with_suffix(c.out, "." + std::to_string(v.order) + ".psts"),
                   format_triples(*v.outcome.witness));
        any_yes |= v.outcome.status == Status::proved_yes;
        any_unknown |= v.outcome.status == Status::unknown;
    }
    const Status overall = any_yes ? Status::proved_yes : any_unknown ? Status::unknown : Status::proved_no;
    r.add("status", overall);
    return exit_code(overall);
}

int cmd_decompose(const std::string& file, const std::vector<std::string>& holes, bool climb, const Common& c,
                  Report& r, Outputs& o)
{
    SymbolMap symbols;
    const auto g = read_graph_file(file, &symbols);
    add_symbols(r, symbols);
    TrianglePackingProblem p;
    for (const auto& h : holes) {
        auto pts = parse_points(h);
        for (Point x : pts)
            if (!g.has_vertex(x))
                throw std::invalid_argument("hole point " + std::to_string(x) + " is not a vertex");
        p.holes.push_back(std::move(pts));
    }
    std::vector<Edge> inside;
    for (const auto& h : p.holes)
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = i + 1; j < h.size(); ++j)
                if (g.has_edge(h[i], h[j]))
                    inside.push_back(make_edge(h[i], h[j]));
    std::sort(inside.begin(), inside.end());
    inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
    p.host = subtract(g, Graph(std::vector<Point>(g.vertices().begin(), g.vertices().end()), inside));
    p.seed = derive_seed(c.seed, "decompose", 0);
    p.budget = c.budget;
    p.jobs = c.jobs;
    r.add("vertices", p.host.order());
    r.add("edges", p.host.size());
    r.add("holes", p.holes.size());
    r.add("hole_edges_removed", inside.size());
    r.add("method", climb ? "climb" : "exact");
    r.add("jobs", c.jobs);
    const auto d = climb ? hill_climb(p) : exact_k3_decompose(p);
    r.add("status", d.status);
    r.add("effort", d.effort);
    if (!d.reason.empty())
        r.add("reason", d.reason);
    if (d.witness) {
        TripleSystem ts(std::vector<Point>(p.host.vertices().begin(), p.host.vertices().end()), *d.witness);
        r.add("triples", ts.size());
        o.emit("witness", c.out, format_triples(ts));
    }
    return exit_code(d.status);
}

int cmd_chromatic(const std::string& file, std::size_t colors, const Common& c, Report& r, Outputs& o)
{
    SymbolMap symbols;
    const auto g = read_graph_file(file, &symbols);
    const std::uint64_t budget = c.budget == 0 ? exact_budget_from_env() : c.budget;
    add_symbols(r, symbols);
    r.add("vertices", g.order());
    r.add("edges", g.size());
    r.add("max_degree", g.max_degree());
    if (colors > 0) {
        r.add("colors", colors);
        const auto s = find_edge_coloring(g, colors, budget);
        r.add("status", s.status);
        r.add("effort", s.effort);
        if (s.witness)
            o.emit("coloring", c.out, format_coloring(*s.witness));
        return exit_code(s.status);
    }
    const auto s = chromatic_index(g, budget);
    r.add("status", s.status);
    r.add("effort", s.effort);
    if (s.status == Status::proved_yes) {
        r.add("chromatic_index", s.chromatic_index);
        r.add("class", s.chromatic_index == g.max_degree() ? 1 : 2);
    }
    if (s.coloring)
        o.emit("coloring", c.out, format_coloring(*s.coloring));
    return exit_code(s.status);
}

int cmd_reduce(const std::string& graph_path, long long u, long long v, bool best_effort, unsigned attempts,
               const Common& c, Report& r, Outputs& o)
{
    SymbolMap symbols;
    const auto g = read_graph_file(graph_path, &symbols);
    add_symbols(r, symbols);
    const auto mode = best_effort ? ReductionMode::best_effort : ReductionMode::strict;
    r.add("mode", best_effort ? "best-effort" : "strict");
    r.add("n", g.order());
    r.add("u", u);
    r.add("v", v);
    if (!is_cubic(g))
        throw std::invalid_argument("source graph is not cubic");
    const auto check = check_params(static_cast<long long>(g.order()), u, v, mode);
    if (!check.ok()) {
        std::string s;
        for (const auto& x : check.violations)
            s += (s.empty() ? "" : "; ") + x;
        throw std::invalid_argument("parameters rejected: " + s);
    }
    r.add("u_prime", check.params->u_prime);
    r.add("d", check.params->d);
    const auto b = build_background(g, u, v, c.seed, c.budget, mode, attempts);
    r.add("status", b.status);
    r.add("effort", b.effort);
    if (!b.reason.empty())
        r.add("reason", b.reason);
    if (b.witness) {
        const auto audit = verify_background(*b.witness);
        r.add("verified", audit.ok);
        r.add("audit.a_prime_degree", audit.a_prime_min);
        r.add("audit.z_degree", audit.z_min);
        r.add("audit.g_degree_in_g", audit.g_internal_min);
        r.add("audit.g_degree_to_z", audit.g_to_z_min);
        r.add("triples", b.witness->system.size());
        o.emit("background", with_suffix(c.out, ".psts"), format_triples(b.witness->system));
        o.emit("metadata", with_suffix(c.out, ".meta"), format_metadata(background_metadata(*b.witness)));
    }
    return exit_code(b.status);
}

int cmd_certify(const std::string& bg, const std::string& meta, const std::string& coloring_path, unsigned attempts,
                const Common& c, Report& r, Outputs& o)
{
    const auto b = load_background(bg, meta);
    const auto labels = source_labels(b);
    EdgeColoring gamma;
    if (coloring_path.empty()) {
        const auto s = find_edge_coloring(b.source, 3, c.budget == 0 ? exact_budget_from_env() : c.budget);
        r.add("coloring_search", s.status);
        if (s.status != Status::proved_yes) {
            r.add("status", s.status);
            r.add("reason", "source graph has no 3-edge-colouring to certify with");
            return exit_code(s.status);
        }
        gamma = *s.witness;
    } else {
        gamma = map_coloring(read_coloring_file(coloring_path, labels.original), b.source, labels.to_internal);
    }
    const auto s = certify_yes(b, gamma, c.seed, c.budget, attempts);
    r.add("v", b.params.v);
    r.add("status", s.status);
    r.add("effort", s.effort);
    if (!s.reason.empty())
        r.add("reason", s.reason);
    if (s.witness) {
        r.add("embedding_verified", is_embedding(b.system, *s.witness));
        o.emit("embedding", c.out, format_triples(*s.witness));
    }
    return exit_code(s.status);
}

int cmd_extract(const std::string& bg, const std::string& meta, const std::string& emb_path, const Common& c,
                Report& r, Outputs& o)
{
    const auto b = load_background(bg, meta);
    const auto emb = read_triples_file(emb_path);
    const auto labels = source_labels(b);
    const auto gamma = map_coloring(extract_coloring(b, emb), labels.original, labels.to_original);
    r.add("proper", is_proper(gamma));
    r.add("colors_used", colors_used(gamma));
    r.add("palette", point_list(b.z()));
    o.emit("coloring", c.out, format_coloring(gamma));
    return 0;
}

int cmd_family(int w, long long u, const Common& c, Report& r, Outputs& o)
{
    if (u == 0) {
        if (w < 6 || w % 2 != 0)
            throw std::invalid_argument("w must be even and at least 6");
        u = family_orders(w, 1).front();
    }
    const auto f = build_family_leave(u, w);
    const auto gamma = family_coloring(f);
    const auto l31 = check_lemma31(f.leave, w, f.d1, f.d2, Lemma31Mode::structural, default_exact_budget, &gamma);
    const long long choose_u = u * (u - 1) / 2;
    r.add("w", w);
    r.add("u", u);
    r.add("t", f.t);
    r.add("edges", f.leave.size());
    r.add("edges_l1", f.l1.size());
    r.add("edges_l2", f.l2.size());
    r.add("edges_l3", f.l3.size());
    r.add("expected_edges", l31.expected_edges);
    r.add("even", is_even(f.leave));
    r.add("max_degree", f.leave.max_degree());
    r.add("edges_mod3_matches", (choose_u - static_cast<long long>(f.leave.size())) % 3 == 0);
    r.add("d1", f.d1);
    r.add("d2", f.d2);
    r.add("structure.i", l31.cond_i);
    r.add("structure.ii", l31.cond_ii);
    r.add("structure.ii_method", l31.cond_ii_method);
    r.add("structure.iii", l31.cond_iii);
    r.add("structure.iii_method", l31.cond_iii_method);
    const Metadata meta = {
        {"format", "family"},
        {"w", std::to_string(w)},
        {"u", std::to_string(u)},
        {"t", std::to_string(f.t)},
        {"L1", point_range(f.l1.vertices())},
        {"infinity", std::to_string(l1_infinity(w))},
        {"L2_a", std::to_string(w + 2) + ".." + std::to_string(w + 1 + f.t)},
        {"L2_b", std::to_string(w + 2 + f.t) + ".." + std::to_string(w + 1 + 2 * f.t)},
        {"L3", point_range(f.l3.vertices())},
        {"d1", std::to_string(f.d1)},
        {"d2", std::to_string(f.d2)},
    };
    o.emit("leave", with_suffix(c.out, ".graph"), format_graph(f.leave));
    o.emit("metadata", with_suffix(c.out, ".meta"), format_metadata(meta));
    o.emit("coloring", with_suffix(c.out, ".ecol"), format_coloring(gamma));
    return l31.holds() ? 0 : 1;
}

void add_conjecture(Report& r, const ConjectureReport& cr)
{
    r.add("u", cr.u);
    r.add("w", cr.w);
    r.add("edges", cr.edges);
    r.add("cond1_degree_parity", cr.cond1);
    r.add("cond2_order_parity", cr.cond2);
    r.add("cond3_divisibility", cr.cond3);
    r.add("cond4_witness", cr.witness_source);
    if (cr.witness)
        r.add("cond4_witness_edges", cr.witness->size());
    r.add("cond4_i_rest_decomposable", cr.cond4_i);
    r.add("cond4_ii_value", cr.cond4_ii_value);
    r.add("cond4_ii", cr.cond4_ii);
    r.add("cond4_iii_colourable", cr.cond4_iii);
    r.add("cond4", cr.cond4);
    r.add("conditions_hold", cr.conditions_hold());
    r.add("decomposition", cr.decomposition);
    r.add("decomposition_effort", cr.decomposition_effort);
    if (!cr.decomposition_reason.empty())
        r.add("decomposition_reason", cr.decomposition_reason);
    r.add("counterexample", cr.counterexample());
}

int cmd_counterexample(int w, long long u, const Common& c, Report& r, Outputs& o)
{
    const std::uint64_t budget = c.budget == 0 ? exact_budget_from_env() : c.budget;
    if (w == 4) {
        const auto ts = psts15();
        const auto l = leave(ts);
        const auto l31 = check_lemma31(l, 4, 1, 2, Lemma31Mode::enumerate, budget);
        const auto cr = check_conjecture(l, 4, std::nullopt, budget, c.jobs);
        r.add("system_order", ts.order());
        r.add("system_triples", ts.size());
        r.add("leave_components", connected_components(l).size());
        r.add("structure.i", l31.cond_i);
        r.add("structure.ii", l31.cond_ii);
        r.add("structure.iii", l31.cond_iii);
        r.add("structure.iii_method", l31.cond_iii_method);
        r.add("structure.colorings_visited", l31.colorings_visited);
        add_conjecture(r, cr);
        r.add("jobs", c.jobs);
        o.emit("system", with_suffix(c.out, ".psts"), format_triples(ts));
        o.emit("leave", with_suffix(c.out, ".leave.graph"), format_graph(l));
        return cr.counterexample() ? 0 : exit_code(cr.decomposition == Status::proved_yes ? Status::proved_no
                                                                                          : Status::unknown);
    }
    if (u == 0) {
        if (w < 6 || w % 2 != 0)
            throw std::invalid_argument("w must be 4 or an even integer of at least 6");
        u = family_orders(w, 1).front();
    }
    const auto f = build_family_leave(u, w);
    const auto gamma = family_coloring(f);
    const auto l31 = check_lemma31(f.leave, w, f.d1, f.d2, Lemma31Mode::structural, budget, &gamma);
    const auto real = realize_as_leave(f.leave, c.seed, 0);
    r.add("u", u);
    r.add("w", w);
    r.add("structure.i", l31.cond_i);
    r.add("structure.ii", l31.cond_ii);
    r.add("structure.iii", l31.cond_iii);
    r.add("structure.iii_method", l31.cond_iii_method);
    r.add("realize.density_hypothesis", real.density_hypothesis);
    r.add("realize.status", real.outcome.status);
    r.add("realize.effort", real.outcome.effort);
    if (real.outcome.witness)
        o.emit("system", with_suffix(c.out, ".psts"), format_triples(*real.outcome.witness));
    o.emit("leave", with_suffix(c.out, ".leave.graph"), format_graph(f.leave));
    // The structural conditions plus a realizing system give the counterexample; the direct
    // search on L ∨ K_w is out of reach at these orders.
    const bool established = l31.holds() && real.outcome.status == Status::proved_yes;
    r.add("basis", "structural+realized");
    r.add("counterexample", established);
    return established ? 0 : 2;
}

int cmd_check_conjecture(const std::string& graph_path, int w, const std::string& witness_path, const Common& c,
                         Report& r)
{
    SymbolMap symbols;
    const auto l = read_graph_file(graph_path, &symbols);
    add_symbols(r, symbols);
    std::optional<Graph> witness;
    if (!witness_path.empty())
        witness = read_graph_file(witness_path);
    const std::uint64_t budget = c.budget == 0 ? exact_budget_from_env() : c.budget;
    add_conjecture(r, check_conjecture(l, w, witness, budget, c.jobs));
    r.add("jobs", c.jobs);
    return 0;
}

int cmd_realize(const std::string& graph_path, unsigned attempts, const Common& c, Report& r, Outputs& o)
{
    SymbolMap symbols;
    const auto l = read_graph_file(graph_path, &symbols);
    add_symbols(r, symbols);
    const auto real = realize_as_leave(l, c.seed, c.budget, attempts);
    r.add("order", l.order());
    r.add("edges", l.size());
    r.add("density_hypothesis", real.density_hypothesis);
    r.add("status", real.outcome.status);
    r.add("effort", real.outcome.effort);
    if (!real.outcome.reason.empty())
        r.add("reason", real.outcome.reason);
    if (real.outcome.witness) {
        r.add("leave_matches", leave(*real.outcome.witness) == l);
        o.emit("system", c.out, format_triples(*real.outcome.witness));
    }
    return exit_code(real.outcome.status);
}

int cmd_selftest(Report& r)
{
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        r.add("check." + name, ok ? "pass" : "FAIL");
        failures += !ok;
    };
    const auto ts = psts15();
    const auto l = leave(ts);
    check("psts15_valid", validate(ts).valid);
    check("psts15_leave_edges", l.size() == 24);
    TrianglePackingProblem k7;
    k7.host = make_complete(iota_points(0, 7));
    check("k7_decomposes", exact_k3_decompose(k7).status == Status::proved_yes);
    TrianglePackingProblem pet;
    pet.host = join(make_edgeless(iota_points(10, 3)), petersen_graph());
    check("petersen_join_no", exact_k3_decompose(pet).status == Status::proved_no);
    check("petersen_class2", chromatic_index(petersen_graph()).chromatic_index == 4);
    check("dw_15_7", decompose_complete_minus_hole(15, 7, 1).status == Status::proved_yes);
    check("dw_13_5", decompose_complete_minus_hole(13, 5, 1).status == Status::proved_no);
    check("l1_w4_coloring", is_proper(l1_canonical_coloring(4)));
    std::istringstream in(format_triples(ts));
    check("psts15_roundtrip", parse_triples(in) == ts);
    r.add("status", failures == 0 ? "pass" : "fail");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Partial Steiner triple systems: search, verification and reduction gadgets", "pstskit"};
    app.require_subcommand(1);
    Common c;

    std::string file, embeds, host, graph_path, coloring_path, orders, witness_path, bg, meta, emb;
    std::vector<std::string> holes;
    bool exact = false, climb = false, best_effort = false;
    std::size_t colors = 0;
    long long u = 0, v = 0;
    int w = 0;
    unsigned attempts = default_stage_attempts;

    auto* verify = app.add_subcommand("verify", "check a triple system, embedding, decomposition or colouring");
    verify->add_option("file", file, "triple-system file");
    verify->add_option("--embeds", embeds, "also check that file embeds this system");
    verify->add_option("--host", host, "also check that file decomposes this graph");
    verify->add_option("--graph", graph_path, "graph for --coloring");
    verify->add_option("--coloring", coloring_path, "edge colouring to check against --graph");

    auto* leave_cmd = app.add_subcommand("leave", "leave graph of a triple system");
    leave_cmd->add_option("file", file, "triple-system file")->required();
    add_out(leave_cmd, c, "write the leave here");

    auto* embed = app.add_subcommand("embed", "decide embeddings into the listed orders");
    embed->add_option("--psts", file, "triple-system file")->required();
    embed->add_option("--orders", orders, "comma-separated admissible target orders")->required();
    add_seed(embed, c);
    add_budget(embed, c);
    add_jobs(embed, c);
    add_out(embed, c, "witness prefix: <out>.<v>.psts");

    auto* decompose = app.add_subcommand("decompose", "K3-decomposition of a graph");
    decompose->add_option("file", file, "graph file")->required();
    decompose->add_option("--hole", holes, "point list no triple may lie inside (repeatable)");
    auto* ex = decompose->add_flag("--exact", exact, "complete search (default)");
    decompose->add_flag("--climb", climb, "randomized hill climb")->excludes(ex);
    add_seed(decompose, c);
    add_budget(decompose, c);
    add_jobs(decompose, c);
    add_out(decompose, c, "write the decomposition here");

    auto* chroma = app.add_subcommand("chromatic-index", "exact chromatic index or a k-edge-colouring");
    chroma->add_option("file", file, "graph file")->required();
    chroma->add_option("--colors", colors, "find a colouring with this many colours instead");
    add_budget(chroma, c);
    add_out(chroma, c, "write the colouring here");

    auto* reduce = app.add_subcommand("reduce", "build a (u,v,G)-background");
    reduce->add_option("--graph", graph_path, "cubic graph file")->required();
    reduce->add_option("-u", u, "background order")->required();
    reduce->add_option("-v", v, "target embedding order")->required();
    reduce->add_flag("--best-effort", best_effort, "only check stage arithmetic; no guarantee");
    reduce->add_option("--attempts", attempts, "seeded attempts per stochastic stage")->check(CLI::Range(1u, 100u));
    add_seed(reduce, c);
    add_budget(reduce, c);
    add_out(reduce, c, "output prefix: <out>.psts and <out>.meta")->required();

    auto* certify = app.add_subcommand("certify", "complete a background to an order-v STS from a 3-colouring");
    certify->add_option("--background", bg, "background .psts (metadata next to it)")->required();
    certify->add_option("--meta", meta, "background metadata file");
    certify->add_option("--coloring", coloring_path, "3-edge-colouring of the source graph (searched if absent)");
    certify->add_option("--attempts", attempts, "seeded attempts")->check(CLI::Range(1u, 100u));
    add_seed(certify, c);
    add_budget(certify, c);
    add_out(certify, c, "write the embedding here");

    auto* extract = app.add_subcommand("extract", "read a 3-colouring of the source out of an embedding");
    extract->add_option("--background", bg, "background .psts")->required();
    extract->add_option("--meta", meta, "background metadata file");
    extract->add_option("--embedding", emb, "order-v embedding")->required();
    add_out(extract, c, "write the colouring here");

    auto* family = app.add_subcommand("family", "counterexample leave L1 u L2 u L3");
    family->add_option("--w", w, "even w >= 6")->required();
    family->add_option("--u", u, "order (default: smallest valid)");
    add_out(family, c, "output prefix: <out>.graph, <out>.meta, <out>.ecol");

    auto* counter = app.add_subcommand("counterexample", "a system whose leave defeats the conjecture");
    counter->add_option("--w", w, "4, or even w >= 6")->required();
    counter->add_option("--u", u, "order for w >= 6 (default: smallest valid)");
    add_seed(counter, c);
    add_budget(counter, c);
    add_jobs(counter, c);
    add_out(counter, c, "output prefix: <out>.psts and <out>.leave.graph");

    auto* conj = app.add_subcommand("check-conjecture", "evaluate the conjecture's conditions for L and w");
    conj->add_option("--graph", graph_path, "leave graph L")->required();
    conj->add_option("--w", w, "number of added points")->required()->check(CLI::NonNegativeNumber);
    conj->add_option("--witness", witness_path, "subgraph G of L for condition (4)");
    add_budget(conj, c);
    add_jobs(conj, c);

    auto* realize = app.add_subcommand("realize-leave", "find a system whose leave is exactly the given graph");
    realize->add_option("--graph", graph_path, "target leave")->required();
    realize->add_option("--attempts", attempts, "seeded attempts")->check(CLI::Range(1u, 100u));
    add_seed(realize, c);
    add_budget(realize, c);
    add_out(realize, c, "write the system here");

    auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    Report r;
    Outputs o(r);
    int code = 0;
    try {
        auto* sub = app.get_subcommands().front();
        r.add("command", sub->get_name());
        r.add("args", join_args(args));
        if (sub == verify)
            code = cmd_verify(file, embeds, host, graph_path, coloring_path, r);
        else if (sub == leave_cmd)
            code = cmd_leave(file, c, r, o);
        else if (sub == embed)
            code = cmd_embed(file, orders, c, r, o);
        else if (sub == decompose)
            code = cmd_decompose(file, holes, climb, c, r, o);
        else if (sub == chroma)
            code = cmd_chromatic(file, colors, c, r, o);
        else if (sub == reduce)
            code = cmd_reduce(graph_path, u, v, best_effort, attempts, c, r, o);
        else if (sub == certify)
            code = cmd_certify(bg, meta, coloring_path, attempts, c, r, o);
        else if (sub == extract)
            code = cmd_extract(bg, meta, emb, c, r, o);
        else if (sub == family)
            code = cmd_family(w, u, c, r, o);
        else if (sub == counter)
            code = cmd_counterexample(w, u, c, r, o);
        else if (sub == conj)
            code = cmd_check_conjecture(graph_path, w, witness_path, c, r);
        else if (sub == realize)
            code = cmd_realize(graph_path, attempts, c, r, o);
        else if (sub == selftest)
            code = cmd_selftest(r);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    r.add("exit_code", code);
    o.flush(out);
    err << "wall_seconds=" << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
        << '\n';
    return code;
}

}  // namespace pstskit::cli
