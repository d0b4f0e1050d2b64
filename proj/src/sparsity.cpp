#include "rigidity/sparsity.hpp"

#include <algorithm>

namespace rigidity {

namespace {

// (2,k) pebble game. Every vertex holds 2 pebbles; inserting an edge (u,v)
// requires k+1 pebbles gathered on {u,v} and consumes one at u, orienting
// the edge u -> v. Pebbles are recovered by reversing directed paths.
class PebbleGame {
public:
    PebbleGame(int n, int k) : k_(k), pebbles_(n, 2), out_(n) {}

    bool insert(int u, int v) {
        while (pebbles_[u] + pebbles_[v] < k_ + 1) {
            if (!pull_pebble(u, v)) return false;
        }
        // Spend from u; top it up from v if u ran dry.
        if (pebbles_[u] == 0) {
            std::swap(u, v);
        }
        --pebbles_[u];
        out_[u].push_back(v);
        return true;
    }

    // Vertices reachable from {u, v} along edge orientations; meaningful
    // right after a failed insert, when no free pebble exists outside u,v.
    std::vector<int> reachable_closure(int u, int v) const {
        std::vector<char> seen(pebbles_.size(), 0);
        std::vector<int> stack{u, v};
        seen[u] = seen[v] = 1;
        std::vector<int> out;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.push_back(x);
            for (int y : out_[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // Depth-first search from `root` for a vertex with a free pebble,
    // excluding the two insertion endpoints; reverses the path on success.
    // Only endpoints below the 2-pebble cap may receive.
    bool pull_pebble(int u, int v) {
        for (int root : {u, v}) {
            if (pebbles_[root] >= 2) continue;
            std::vector<int> parent(pebbles_.size(), -2);
            parent[u] = parent[v] = -1;
            parent[root] = -1;
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : out_[x]) {
                    if (parent[y] != -2) continue;
                    parent[y] = x;
                    if (pebbles_[y] > 0 && y != u && y != v) {
                        reverse_path(root, y, parent);
                        --pebbles_[y];
                        ++pebbles_[root];
                        return true;
                    }
                    stack.push_back(y);
                }
            }
        }
        return false;
    }

    void reverse_path(int root, int end, const std::vector<int>& parent) {
        int cur = end;
        while (cur != root) {
            int prev = parent[cur];
            auto& po = out_[prev];
            po.erase(std::find(po.begin(), po.end(), cur));
            out_[cur].push_back(prev);
            cur = prev;
        }
    }

    int k_;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
};

SubgraphRef whole_graph_ref(const Graph& g) {
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return SubgraphRef{std::move(all), g.edges()};
}

void require_type_constant(int k) {
    if (k != 2 && k != 3) fail(Err::InvalidInput, "type constant must be 2 or 3");
}

} // namespace

SparsityVerdict check_type(const Graph& g, int k) {
    require_type_constant(k);
    PebbleGame game(g.vertex_count(), k);
    std::vector<Edge> accepted;
    for (const auto& [u, v] : g.edges()) {
        if (game.insert(u, v)) {
            accepted.push_back({u, v});
            continue;
        }
        // Failed region: the reachability closure R carries >= 2|R| - k
        // accepted edges, so R plus the rejected edge has f < k.
        SparsityVerdict verdict;
        verdict.independent = false;
        verdict.maximal = false;
        std::vector<int> region = game.reachable_closure(u, v);
        SubgraphRef witness;
        witness.vertices = region;
        for (const auto& e : accepted)
            if (std::binary_search(region.begin(), region.end(), e.first) &&
                std::binary_search(region.begin(), region.end(), e.second))
                witness.edges.push_back(e);
        witness.edges.push_back(make_edge(u, v));
        std::sort(witness.edges.begin(), witness.edges.end());
        verdict.witness = std::move(witness);
        return verdict;
    }
    SparsityVerdict verdict;
    verdict.independent = true;
    verdict.maximal = freedom_number(g) == k;
    if (!verdict.maximal) verdict.witness = whole_graph_ref(g);
    return verdict;
}

SparsityVerdict check_type_oracle(const Graph& g, int k) {
    require_type_constant(k);
    const int n = g.vertex_count();
    if (n > 12) fail(Err::SizeLimitExceeded, "oracle capped at 12 vertices");

    // A subgraph of minimal freedom over a fixed vertex set is the induced
    // one, so scanning induced subgraphs decides independence.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        SubgraphRef h = induced_subgraph(g, vs);
        if (k == 3 && h.edges.empty()) continue;
        if (freedom_number(h) < k) {
            SparsityVerdict verdict;
            verdict.independent = false;
            verdict.maximal = false;
            verdict.witness = std::move(h);
            return verdict;
        }
    }
    SparsityVerdict verdict;
    verdict.independent = true;
    verdict.maximal = freedom_number(g) == k;
    if (!verdict.maximal) verdict.witness = whole_graph_ref(g);
    return verdict;
}

bool is_laman(const Graph& g) {
    if (!g.is_connected()) return false;
    return check_type(g, 3).maximal;
}

std::optional<Edge> is_laman_plus_one(const Graph& g) {
    if (!g.is_connected()) return std::nullopt;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 1) return std::nullopt;
    for (const auto& e : g.edges()) {
        std::vector<Edge> rest;
        for (const auto& other : g.edges())
            if (other != e) rest.push_back(other);
        if (is_laman(Graph(g.vertex_count(), std::move(rest)))) return e;
    }
    return std::nullopt;
}

std::optional<SubgraphRef> maximal_tight_subgraph(const Graph& g) {
    if (!check_type(g, 2).maximal) fail(Err::NotType2Maximal, "expected type-2 maximal input");
    const int n = g.vertex_count();
    if (n > 16) fail(Err::SizeLimitExceeded, "tight-subgraph search capped at 16 vertices");

    // Largest-first scan: the first tight induced proper subgraph found is
    // inclusion-maximal (a tight supergraph would be larger and induced).
    std::vector<std::vector<unsigned>> by_size(n);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < n) by_size[size].push_back(mask);
    }
    for (int size = n - 1; size >= 2; --size) {
        for (unsigned mask : by_size[size]) {
            std::vector<int> vs;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) vs.push_back(v);
            SubgraphRef h = induced_subgraph(g, vs);
            if (!h.edges.empty() && freedom_number(h) == 2) return h;
        }
    }
    return std::nullopt;
}

bool check_tight_3_6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) fail(Err::SizeLimitExceeded, "(3,6) check capped at 16 vertices");
    if (3L * n - g.edge_count() != 6) return false;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= 2) continue;
        long edges = 0;
        for (const auto& [a, b] : g.edges())
            if ((mask & (1u << a)) && (mask & (1u << b))) ++edges;
        if (3L * size - edges < 6) return false;
    }
    return true;
}

bool check_point_line(const Graph& g, int line_vertex) {
    const int n = g.vertex_count();
    if (line_vertex < 0 || line_vertex >= n) fail(Err::InvalidInput, "line vertex out of range");
    if (g.degree(line_vertex) != n - 1)
        fail(Err::NotConeGraph, "line vertex must be adjacent to every other vertex");

    std::vector<int> points;
    for (int v = 0; v < n; ++v)
        if (v != line_vertex) points.push_back(v);
    if (points.size() < 4) fail(Err::InvalidInput, "need at least 4 point vertices");

    // Point subgraph with the line vertex dropped, relabeled 0..n-2.
    std::vector<Edge> point_edges;
    for (const auto& [a, b] : g.edges()) {
        if (a == line_vertex || b == line_vertex) continue;
        const int a2 = a - (a > line_vertex);
        const int b2 = b - (b > line_vertex);
        point_edges.push_back(make_edge(a2, b2));
    }
    Graph point_graph(n - 1, std::move(point_edges));
    if (!point_graph.is_connected()) fail(Err::InvalidInput, "point subgraph must be connected");

    // Global count 3|V_p| + 4 - |E| = 6 together with the subgraph
    // inequalities reduces to 2|V_p| - |E_pp| = 2 with type-2 independence.
    if (3L * (n - 1) + 4 - g.edge_count() != 6) return false;
    return check_type(point_graph, 2).maximal;
}

} // namespace rigidity
