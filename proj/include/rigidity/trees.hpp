#ifndef RIGIDITY_TREES_HPP
#define RIGIDITY_TREES_HPP

#include <string>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

// Edge of a multigraph obtained by doubling: copy 0 is the original, copy 1
// the duplicate. Tags make tree disjointness well defined.
struct TaggedEdge {
    int u, v;  // u < v
    int copy = 0;

    auto operator<=>(const TaggedEdge&) const = default;
};

// Partition of an edge multiset into two spanning trees.
struct TreeDecomposition {
    std::vector<TaggedEdge> tree1;
    std::vector<TaggedEdge> tree2;
};

std::vector<TaggedEdge> tagged_edges(const Graph& g);
std::vector<TaggedEdge> tagged_edges_plus(const Graph& g, Edge extra);

// True iff tree1 and tree2 are disjoint, exhaust the given multiset, and each
// is a spanning tree on the given vertex count.
bool verify_decomposition(int vertex_count, std::vector<TaggedEdge> multiset,
                          const TreeDecomposition& d);

// Spanning-tree partition of a maximally independent type-2 graph, built by
// transporting trees along its Henneberg/extension derivation.
// Throws NotType2Maximal.
TreeDecomposition decompose_type2(const Graph& g);

// Spanning-tree partition of a Laman graph plus one extra edge (the pair may
// duplicate an existing edge). Throws NotLaman.
TreeDecomposition decompose_laman_plus_edge(const Graph& g, Edge extra);

// First valid partition found by exhaustive 2-coloring, if any. Exponential
// in the edge count; used as the independent oracle.
std::optional<TreeDecomposition> decompose_exhaustive(int vertex_count,
                                                      const std::vector<TaggedEdge>& edges);

std::string decomposition_to_json_text(const TreeDecomposition& d);

} // namespace rigidity

#endif
