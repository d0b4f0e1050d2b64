#ifndef RIGIDITY_ENUMERATE_HPP
#define RIGIDITY_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

// Canonical 64-bit encoding of the adjacency upper triangle, maximized over
// vertex relabelings. Two graphs on <= 11 vertices are isomorphic iff their
// codes match.
std::uint64_t canonical_code(const Graph& g);

// All connected graphs with exactly n vertices, one per isomorphism class,
// in canonical-code order. n <= 9.
std::vector<Graph> connected_graphs(int n);

// Isomorphism classes for 1..max_n vertices, smaller orders first.
std::vector<Graph> connected_graphs_up_to(int max_n);

} // namespace rigidity

#endif
