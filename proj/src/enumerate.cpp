#include "rigidity/enumerate.hpp"

#include <algorithm>
#include <unordered_map>

namespace rigidity {

namespace {

// Max-code search: place vertices position by position, keeping only
// branches whose column bits tie or beat the best prefix found so far.
struct CodeSearch {
    const Graph* g;
    int n;
    std::vector<int> best_cols;  // column value per position, -1 = unset
    std::vector<int> perm;
    std::vector<char> used;
    std::vector<int> order;      // candidate order heuristic: degree descending

    void dfs(int pos) {
        if (pos == n) return;
        for (int v : order) {
            if (used[v]) continue;
            int col = 0;
            for (int i = 0; i < pos; ++i)
                col = (col << 1) | (g->has_edge(perm[i], v) ? 1 : 0);
            if (pos > 0) {
                if (col < best_cols[pos]) continue;
                if (col > best_cols[pos]) {
                    best_cols[pos] = col;
                    std::fill(best_cols.begin() + pos + 1, best_cols.end(), -1);
                }
            }
            used[v] = 1;
            perm[pos] = v;
            dfs(pos + 1);
            used[v] = 0;
        }
    }
};

// One isomorphism-class representative per connected graph, per order
// 1..max_n. Level k is grown from level k-1 by attaching a new vertex to
// every nonempty subset; this reaches every class (remove any noncut vertex
// of a connected graph... every connected graph has a vertex whose removal
// keeps it connected, e.g. a leaf of a spanning tree).
std::vector<std::vector<Graph>> connected_levels(int max_n) {
    std::vector<std::vector<Graph>> levels;
    levels.push_back({Graph(1, {})});
    for (int k = 2; k <= max_n; ++k) {
        std::unordered_map<std::uint64_t, Graph> classes;
        for (const Graph& base : levels.back()) {
            const unsigned subsets = 1u << (k - 1);
            for (unsigned subset = 1; subset < subsets; ++subset) {
                std::vector<Edge> edges = base.edges();
                for (int v = 0; v < k - 1; ++v)
                    if (subset & (1u << v)) edges.push_back({v, k - 1});
                Graph candidate(k, std::move(edges));
                classes.emplace(canonical_code(candidate), std::move(candidate));
            }
        }
        std::vector<std::pair<std::uint64_t, Graph>> sorted(
            std::make_move_iterator(classes.begin()), std::make_move_iterator(classes.end()));
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Graph> level;
        level.reserve(sorted.size());
        for (auto& [code, graph] : sorted) level.push_back(std::move(graph));
        levels.push_back(std::move(level));
    }
    return levels;
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) fail(Err::SizeLimitExceeded, "canonical code limited to 11 vertices");
    if (n == 1) return 0;

    CodeSearch search;
    search.g = &g;
    search.n = n;
    search.best_cols.assign(n, -1);
    search.perm.assign(n, -1);
    search.used.assign(n, 0);
    search.order.resize(n);
    for (int v = 0; v < n; ++v) search.order[v] = v;
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    search.dfs(0);

    std::uint64_t code = 0;
    for (int pos = 1; pos < n; ++pos)
        code = (code << pos) | static_cast<std::uint64_t>(search.best_cols[pos]);
    return code;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 9) fail(Err::SizeLimitExceeded, "enumeration supports 1..9 vertices");
    return connected_levels(n).back();
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
    if (max_n < 1 || max_n > 9) fail(Err::SizeLimitExceeded, "enumeration supports 1..9 vertices");
    auto levels = connected_levels(max_n);
    std::vector<Graph> all;
    for (auto& level : levels)
        all.insert(all.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    return all;
}

} // namespace rigidity
