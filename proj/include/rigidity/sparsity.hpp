#ifndef RIGIDITY_SPARSITY_HPP
#define RIGIDITY_SPARSITY_HPP

#include <optional>

#include "rigidity/graph.hpp"

namespace rigidity {

// Outcome of an independence test of type k (k = 2 or 3): independent means
// every relevant subgraph H has f(H) >= k, maximal additionally f(G) = k.
// When independence fails the witness is a subgraph with f < k; when only
// maximality fails it is the whole graph (certificate of the global count).
struct SparsityVerdict {
    bool independent = false;
    bool maximal = false;
    std::optional<SubgraphRef> witness;
};

// Pebble-game decision (2 pebbles per vertex, k pebbles retained).
// For k = 3 the subgraph condition applies to subgraphs with at least one
// edge; for k = 2 to all subgraphs. O(|V| |E|).
SparsityVerdict check_type(const Graph& g, int k);

// Same contract, decided by exhaustive enumeration of vertex subsets and
// their induced subgraphs. Exponential; capped at 12 vertices.
SparsityVerdict check_type_oracle(const Graph& g, int k);

// Maximally independent of type 3 (f(G) = 3 with all edge-containing
// subgraphs at f >= 3) and connected.
bool is_laman(const Graph& g);

// Some edge e with g minus e Laman, for a connected graph with no degree-1
// vertices; lexicographically first such edge. nullopt when the graph is not
// Laman plus one.
std::optional<Edge> is_laman_plus_one(const Graph& g);

// Inclusion-maximal proper subgraph H with f(H) = 2 and at least one edge.
// Requires g maximally independent of type 2 (throws NotType2Maximal);
// absent exactly when g is Laman plus one or K1.
std::optional<SubgraphRef> maximal_tight_subgraph(const Graph& g);

// 3|V| - |E| = 6 with 3|V'| - |E'| >= 6 for every subgraph on > 2 vertices.
bool check_tight_3_6(const Graph& g);

// Point-line count for a cone graph with the given vertex playing the line:
// 3|V_p| + 4 - |E| = 6 with the weighted inequality on subgraphs. Decided by
// the global count plus type-2 maximality of the point subgraph. Throws
// NotConeGraph when line_vertex is not adjacent to every other vertex,
// InvalidInput when the point subgraph is disconnected or has < 4 vertices.
bool check_point_line(const Graph& g, int line_vertex);

} // namespace rigidity

#endif
