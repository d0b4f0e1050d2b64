#ifndef RIGIDITY_GRAPH_HPP
#define RIGIDITY_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/errors.hpp"

namespace rigidity {

using Edge = std::pair<int, int>; // stored with first < second

// Simple undirected labeled graph on vertices 0..n-1.
// Immutable after construction; all operations return new graphs.
class Graph {
public:
    Graph() : n_(1) {} // K1
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int a, int b) const;
    bool is_connected() const;
    std::vector<int> degree_sequence() const; // sorted ascending

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;            // canonical: i<j, lexicographically sorted
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// A subgraph designated by explicit vertex and edge subsets.
struct SubgraphRef {
    std::vector<int> vertices; // sorted, distinct
    std::vector<Edge> edges;   // canonical order, both endpoints in `vertices`
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// f(H) = 2|V(H)| - |E(H)|.
long freedom_number(const Graph& g);
long freedom_number(const SubgraphRef& h);

// Validates the SubgraphRef against g (vertex range, edge containment).
void validate_subgraph(const Graph& g, const SubgraphRef& h);

// Vertex-induced subgraph on the given vertex set.
SubgraphRef induced_subgraph(const Graph& g, const std::vector<int>& vertices);

struct ContractionResult {
    Graph graph;
    // vertex_map[v] = label of v in the contracted graph; vertices of H all
    // map to merged_vertex.
    std::vector<int> vertex_map;
    int merged_vertex;
};

// G/H: contract the connected proper subgraph H to a single vertex.
// Throws NotSimple when the quotient would acquire a loop or parallel edge,
// ImproperSubgraph when H is not a proper subgraph (or not connected).
ContractionResult contract(const Graph& g, const SubgraphRef& h);

// New vertex adjacent to every vertex of g; the apex gets label n.
Graph cone(const Graph& g);

// Brute-force isomorphism with degree/neighborhood pruning. Throws
// SizeLimitExceeded above max_n vertices.
bool are_isomorphic(const Graph& a, const Graph& b, int max_n = 10);

// When an isomorphism exists returns p with: (i,j) in E(a) iff (p[i],p[j]) in E(b).
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 int max_n = 10);

// graph6 (n <= 62), standard bit packing.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// JSON form {"n": int, "edges": [[i,j], ...]}.
Graph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

} // namespace rigidity

#endif
