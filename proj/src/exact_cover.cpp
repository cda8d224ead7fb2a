#include "pstskit/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

namespace pstskit {

namespace {

// Upper bound on dancing-links nodes before we refuse to build the matrix.
constexpr std::size_t max_cover_nodes = 60'000'000;

std::vector<std::uint64_t> hole_masks(const Graph& g, const std::vector<std::vector<Point>>& holes)
{
    std::vector<std::uint64_t> mask(g.order(), 0);
    for (std::size_t h = 0; h < holes.size() && h < 64; ++h)
        for (Point x : holes[h]) {
            const int i = g.index_of(x);
            if (i >= 0)
                mask[i] |= std::uint64_t{1} << h;
        }
    return mask;
}

struct TriangleRow {
    int x;
    int y;
    int z;
};

// Triangles of g, lexicographic, skipping those inside a hole.
std::vector<TriangleRow> host_triangles(const Graph& g, const std::vector<std::uint64_t>& mask)
{
    std::vector<TriangleRow> rows;
    const int n = static_cast<int>(g.order());
    for (int x = 0; x < n; ++x)
        for (int y : g.neighbor_indices(x)) {
            if (y <= x)
                continue;
            for (int z : g.neighbor_indices(y)) {
                if (z <= y || !g.adjacent_index(x, z))
                    continue;
                if (mask[x] & mask[y] & mask[z])
                    continue;
                rows.push_back({x, y, z});
            }
        }
    return rows;
}

// Knuth's dancing links over a 0/1 matrix whose rows each have three ones.
class DancingLinks {
public:
    DancingLinks(std::size_t columns, const std::vector<std::array<int, 3>>& rows)
    {
        const auto cols = static_cast<int>(columns);
        const auto total = 1 + columns + 3 * rows.size();
        left_.resize(total);
        right_.resize(total);
        up_.resize(total);
        down_.resize(total);
        column_.resize(total);
        row_.resize(total, -1);
        size_.assign(columns + 1, 0);
        for (int c = 0; c <= cols; ++c) {
            left_[c] = c == 0 ? cols : c - 1;
            right_[c] = c == cols ? 0 : c + 1;
            up_[c] = down_[c] = c;
            column_[c] = c;
        }
        int next = cols + 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const int first = next;
            for (int k = 0; k < 3; ++k) {
                const int col = rows[r][k] + 1;
                const int node = next++;
                column_[node] = col;
                row_[node] = static_cast<int>(r);
                up_[node] = up_[col];
                down_[node] = col;
                down_[up_[col]] = node;
                up_[col] = node;
                ++size_[col];
                left_[node] = k == 0 ? first + 2 : node - 1;
                right_[node] = k == 2 ? first : node + 1;
            }
        }
    }

    bool solved() const { return right_[0] == 0; }

    // Fewest rows first, ties to the lowest column.
    int choose() const
    {
        int best = -1;
        int best_size = std::numeric_limits<int>::max();
        for (int c = right_[0]; c != 0; c = right_[c])
            if (size_[c] < best_size) {
                best_size = size_[c];
                best = c;
                if (best_size == 0)
                    break;
            }
        return best;
    }

    void cover(int c)
    {
        right_[left_[c]] = right_[c];
        left_[right_[c]] = left_[c];
        for (int i = down_[c]; i != c; i = down_[i])
            for (int j = right_[i]; j != i; j = right_[j]) {
                down_[up_[j]] = down_[j];
                up_[down_[j]] = up_[j];
                --size_[column_[j]];
            }
    }

    void uncover(int c)
    {
        for (int i = up_[c]; i != c; i = up_[i])
            for (int j = left_[i]; j != i; j = left_[j]) {
                ++size_[column_[j]];
                down_[up_[j]] = j;
                up_[down_[j]] = j;
            }
        right_[left_[c]] = c;
        left_[right_[c]] = c;
    }

    void select(int node)
    {
        for (int j = right_[node]; j != node; j = right_[j])
            cover(column_[j]);
    }

    void deselect(int node)
    {
        for (int j = left_[node]; j != node; j = left_[j])
            uncover(column_[j]);
    }

    int size(int c) const { return size_[c]; }
    int down(int n) const { return down_[n]; }
    int row(int n) const { return row_[n]; }

    /// Depth-first search from the current state. `tick` is called once per
    /// decision node and returns false to abort.
    template <class Tick>
    Status search(std::vector<int>& chosen_rows, Tick&& tick)
    {
        std::vector<int> cols;
        std::vector<int> nodes;
        bool descend = true;
        while (true) {
            int r = 0;
            if (descend) {
                if (solved()) {
                    for (int n : nodes)
                        chosen_rows.push_back(row_[n]);
                    return Status::proved_yes;
                }
                const int c = choose();
                if (size_[c] == 0) {
                    descend = false;
                    continue;
                }
                cover(c);
                cols.push_back(c);
                r = down_[c];
            } else {
                if (nodes.empty())
                    return Status::proved_no;
                const int prev = nodes.back();
                nodes.pop_back();
                deselect(prev);
                r = down_[prev];
            }
            const int c = cols.back();
            if (r == c) {
                uncover(c);
                cols.pop_back();
                descend = false;
                continue;
            }
            if (!tick()) {
                return Status::unknown;
            }
            nodes.push_back(r);
            select(r);
            descend = true;
        }
    }

private:
    std::vector<int> left_, right_, up_, down_, column_, row_, size_;
};

Packing to_packing(const Graph& g, const std::vector<TriangleRow>& rows, const std::vector<int>& chosen)
{
    Packing out;
    out.reserve(chosen.size());
    for (int r : chosen)
        out.push_back(make_triple(g.label(rows[r].x), g.label(rows[r].y), g.label(rows[r].z)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DecompositionOutcome exact_k3_decompose(const TrianglePackingProblem& p)
{
    DecompositionOutcome out;
    const Graph& g = p.host;
    if (auto nc = necessary_conditions(g); !nc) {
        out.status = Status::proved_no;
        out.reason = nc.failures.front();
        return out;
    }
    if (g.size() == 0) {
        out.status = Status::proved_yes;
        out.witness = Packing{};
        return out;
    }
    const auto mask = hole_masks(g, p.holes);
    const auto triangles = host_triangles(g, mask);
    if (triangles.size() * 3 > max_cover_nodes) {
        out.status = Status::unknown;
        out.reason = "instance too large for the exact solver";
        return out;
    }
    std::vector<std::array<int, 3>> rows;
    rows.reserve(triangles.size());
    for (const auto& t : triangles)
        rows.push_back({g.edge_index_by_index(t.x, t.y), g.edge_index_by_index(t.x, t.z),
                        g.edge_index_by_index(t.y, t.z)});
    const std::uint64_t budget = p.budget == 0 ? default_exact_budget : p.budget;

    DancingLinks dlx(g.size(), rows);

    if (p.jobs <= 1) {
        std::uint64_t nodes = 0;
        std::vector<int> chosen;
        out.status = dlx.search(chosen, [&] { return ++nodes <= budget; });
        out.effort = std::min(nodes, budget);
        if (out.status == Status::proved_yes)
            out.witness = to_packing(g, triangles, chosen);
        else if (out.status == Status::unknown)
            out.reason = "node budget exhausted";
        return out;
    }

    // Parallel: one task per row of the first branching column.
    const int c0 = dlx.choose();
    std::vector<int> branch_nodes;
    for (int r = dlx.down(c0); r != c0; r = dlx.down(r))
        branch_nodes.push_back(r);
    const auto branches = branch_nodes.size();
    if (branches == 0) {
        out.status = Status::proved_no;
        out.reason = "an edge lies in no admissible triangle";
        return out;
    }
    std::vector<Status> status(branches, Status::unknown);
    std::vector<std::vector<int>> chosen(branches);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_yes{branches};
    auto worker = [&] {
        while (true) {
            const auto b = next.fetch_add(1);
            if (b >= branches)
                return;
            if (b > first_yes.load())
                continue;
            DancingLinks local = dlx;
            local.cover(c0);
            local.select(branch_nodes[b]);
            if (nodes.fetch_add(1) + 1 > budget) {
                status[b] = Status::unknown;
                continue;
            }
            std::vector<int> picked;
            auto st = local.search(picked, [&] { return nodes.fetch_add(1) + 1 <= budget && b <= first_yes.load(); });
            if (st == Status::proved_yes) {
                picked.push_back(local.row(branch_nodes[b]));
                chosen[b] = std::move(picked);
                auto cur = first_yes.load();
                while (b < cur && !first_yes.compare_exchange_weak(cur, b)) {
                }
            }
            status[b] = st;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < p.jobs; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    out.effort = std::min<std::uint64_t>(nodes.load(), budget);
    bool all_no = true;
    for (std::size_t b = 0; b < branches; ++b) {
        if (status[b] == Status::proved_yes) {
            out.status = Status::proved_yes;
            out.witness = to_packing(g, triangles, chosen[b]);
            return out;
        }
        if (status[b] != Status::proved_no)
            all_no = false;
    }
    out.status = all_no ? Status::proved_no : Status::unknown;
    if (!all_no)
        out.reason = "node budget exhausted";
    return out;
}

}  // namespace pstskit
