#include "rigidity/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace rigidity {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (n_ < 1) fail(Err::InvalidGraph, "graph needs at least one vertex");
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second) fail(Err::InvalidGraph, "loop edge");
        if (e.first < 0 || e.second >= n_) fail(Err::InvalidGraph, "edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(Err::InvalidGraph, "duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int a, int b) const {
    if (a == b) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

bool Graph::is_connected() const {
    std::vector<int> stack{0};
    std::vector<char> seen(n_, 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> ds(n_);
    for (int v = 0; v < n_; ++v) ds[v] = degree(v);
    std::sort(ds.begin(), ds.end());
    return ds;
}

long freedom_number(const Graph& g) {
    return 2L * g.vertex_count() - g.edge_count();
}

long freedom_number(const SubgraphRef& h) {
    return 2L * static_cast<long>(h.vertices.size()) - static_cast<long>(h.edges.size());
}

void validate_subgraph(const Graph& g, const SubgraphRef& h) {
    if (h.vertices.empty()) fail(Err::ImproperSubgraph, "empty vertex set");
    for (size_t i = 0; i + 1 < h.vertices.size(); ++i)
        if (h.vertices[i] >= h.vertices[i + 1])
            fail(Err::ImproperSubgraph, "vertex set not sorted/distinct");
    for (int v : h.vertices)
        if (v < 0 || v >= g.vertex_count()) fail(Err::ImproperSubgraph, "vertex out of range");
    for (const auto& [a, b] : h.edges) {
        if (!g.has_edge(a, b)) fail(Err::ImproperSubgraph, "edge not in graph");
        if (!std::binary_search(h.vertices.begin(), h.vertices.end(), a) ||
            !std::binary_search(h.vertices.begin(), h.vertices.end(), b))
            fail(Err::ImproperSubgraph, "edge endpoint outside vertex subset");
    }
}

SubgraphRef induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    SubgraphRef h;
    h.vertices = vertices;
    std::sort(h.vertices.begin(), h.vertices.end());
    for (const auto& e : g.edges())
        if (std::binary_search(h.vertices.begin(), h.vertices.end(), e.first) &&
            std::binary_search(h.vertices.begin(), h.vertices.end(), e.second))
            h.edges.push_back(e);
    return h;
}

namespace {

bool subgraph_connected(const SubgraphRef& h) {
    if (h.vertices.size() == 1) return true;
    std::vector<std::vector<int>> adj(h.vertices.size());
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v) -
                                h.vertices.begin());
    };
    for (const auto& [a, b] : h.edges) {
        adj[index_of(a)].push_back(index_of(b));
        adj[index_of(b)].push_back(index_of(a));
    }
    std::vector<char> seen(h.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == h.vertices.size();
}

} // namespace

ContractionResult contract(const Graph& g, const SubgraphRef& h) {
    validate_subgraph(g, h);
    const bool proper = static_cast<int>(h.vertices.size()) < g.vertex_count() ||
                        static_cast<int>(h.edges.size()) < g.edge_count();
    if (!proper) fail(Err::ImproperSubgraph, "H must be a proper subgraph");
    if (static_cast<int>(h.vertices.size()) == g.vertex_count())
        fail(Err::ImproperSubgraph, "contraction needs vertices outside H");
    if (!subgraph_connected(h)) fail(Err::ImproperSubgraph, "H must be connected");

    auto in_h = [&](int v) {
        return std::binary_search(h.vertices.begin(), h.vertices.end(), v);
    };
    auto in_h_edges = [&](const Edge& e) {
        return std::binary_search(h.edges.begin(), h.edges.end(), e);
    };

    // Outside vertices keep their relative order; v* becomes the last label.
    std::vector<int> vertex_map(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_h(v)) vertex_map[v] = next++;
    const int merged = next;
    for (int v : h.vertices) vertex_map[v] = merged;

    std::set<Edge> quotient_edges;
    for (const auto& e : g.edges()) {
        if (in_h_edges(e)) continue;
        int a = vertex_map[e.first];
        int b = vertex_map[e.second];
        if (a == b) fail(Err::NotSimple, "contraction creates a loop");
        Edge q = make_edge(a, b);
        if (!quotient_edges.insert(q).second)
            fail(Err::NotSimple, "contraction creates a parallel edge");
    }
    Graph quotient(merged + 1,
                   std::vector<Edge>(quotient_edges.begin(), quotient_edges.end()));
    return ContractionResult{std::move(quotient), std::move(vertex_map), merged};
}

Graph cone(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    const int apex = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) edges.push_back({v, apex});
    return Graph(g.vertex_count() + 1, std::move(edges));
}

namespace {

// Per-vertex invariant used to cut the permutation search: degree plus the
// sorted multiset of neighbor degrees.
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
    std::vector<std::vector<int>> sig(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        sig[v].push_back(g.degree(v));
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    return sig;
}

bool extend_mapping(const Graph& a, const Graph& b,
                    const std::vector<std::vector<int>>& sig_a,
                    const std::vector<std::vector<int>>& sig_b,
                    std::vector<int>& map, std::vector<char>& used, int v) {
    const int n = a.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || sig_a[v] != sig_b[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend_mapping(a, b, sig_a, sig_b, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b, int max_n) {
    if (a.vertex_count() > max_n || b.vertex_count() > max_n)
        fail(Err::SizeLimitExceeded, "isomorphism search capped at " + std::to_string(max_n) +
                                         " vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    if (a.degree_sequence() != b.degree_sequence()) return std::nullopt;

    auto sig_a = vertex_signatures(a);
    auto sig_b = vertex_signatures(b);
    {
        auto sa = sig_a;
        auto sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> map(a.vertex_count(), -1);
    std::vector<char> used(a.vertex_count(), 0);
    if (extend_mapping(a, b, sig_a, sig_b, map, used, 0)) return map;
    return std::nullopt;
}

bool are_isomorphic(const Graph& a, const Graph& b, int max_n) {
    return find_isomorphism(a, b, max_n).has_value();
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) fail(Err::InvalidInput, "empty graph6 string");
    const int n = s[0] - 63;
    if (n < 1 || n > 62) fail(Err::InvalidInput, "graph6: unsupported vertex count");
    const int bits = n * (n - 1) / 2;
    const int need = (bits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + need)
        fail(Err::InvalidInput, "graph6: wrong length");
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const char c = s[1 + bit / 6];
            if (c < 63 || c > 126) fail(Err::InvalidInput, "graph6: bad character");
            const int value = c - 63;
            if ((value >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) fail(Err::SizeLimitExceeded, "graph6 output limited to 62 vertices");
    const int bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
    return out;
}

Graph graph_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Err::InvalidInput, std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail(Err::InvalidInput, "graph JSON needs \"n\" and \"edges\"");
    try {
        std::vector<Edge> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) fail(Err::InvalidInput, "edge must be a pair");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return Graph(j["n"].get<int>(), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        fail(Err::InvalidInput, std::string("bad graph JSON: ") + e.what());
    }
}

std::string graph_to_json_text(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = edges;
    return j.dump();
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) fail(Err::InvalidGraph, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

} // namespace rigidity
