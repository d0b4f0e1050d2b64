#ifndef RIGIDITY_MOVES_HPP
#define RIGIDITY_MOVES_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

enum class BaseGraph { K1, K2, K4 };

Graph base_graph(BaseGraph base);

// Attach a new vertex to two existing vertices a, b.
struct Henneberg1Step {
    int a, b;
};

// Break the edge `split` at a new vertex and connect it to `third`.
struct Henneberg2Step {
    Edge split;
    int third;
};

struct DerivationSequence;

// Replace `vertex` of the current graph by the subgraph described by the
// embedded derivation. Each edge (w, vertex) of the current graph is redirected
// to a subgraph vertex; `attachments` lists those (w, subgraph vertex) pairs.
// Contraction discards this map, so the move records it explicitly.
struct SubgraphExtensionStep {
    int vertex;
    std::shared_ptr<const DerivationSequence> subgraph;
    std::vector<std::pair<int, int>> attachments;
};

using Move = std::variant<Henneberg1Step, Henneberg2Step, SubgraphExtensionStep>;

// Certificate of construction from a base graph. Replaying the steps yields a
// graph isomorphic to the one it was derived from.
struct DerivationSequence {
    BaseGraph base = BaseGraph::K2;
    std::vector<Move> steps;
};

Graph henneberg1(const Graph& g, int a, int b);
Graph henneberg2(const Graph& g, Edge split, int third);

// g with vertex v deleted; labels above v shift down by one.
Graph remove_vertex(const Graph& g, int v);

struct InverseH2Candidate {
    Edge ghost;  // in the labels of g (without v removed)
    Graph graph; // g minus v plus ghost, relabeled
};

// All reverse Henneberg 2 results at the degree-3 vertex v that are maximally
// independent of type k. May be empty (for k = 2 when v sits in a K4 block).
std::vector<InverseH2Candidate> inverse_henneberg2_candidates(const Graph& g, int v, int k);

// Henneberg derivation from K2 of a Laman graph. Reverse moves are searched
// deterministically: lowest-indexed degree-2 vertex first, then the
// lowest-indexed degree-3 vertex with the lexicographically first valid ghost
// pair.
DerivationSequence derive_laman(const Graph& g);

// Henneberg derivation from K4 of a Laman plus one graph.
DerivationSequence derive_laman_plus_one(const Graph& g);

// Derivation of a maximally independent type-2 graph from K4 (K1 for the
// singleton) using Henneberg moves plus subgraph extensions: Laman plus one
// graphs get a pure Henneberg derivation, everything else splits at a maximal
// tight subgraph and recurses on the parts.
DerivationSequence derive_type2(const Graph& g);

// Applies one move, validating its parameters against g; throws IllFormedStep
// (message carries step_index) on bad parameters.
Graph apply_move(const Graph& g, const Move& move, size_t step_index = 0);

// Applies the moves in order, validating every step; throws IllFormedStep
// (message carries the step index) when a move references missing vertices or
// edges or an intermediate graph fails to be simple and connected.
Graph replay(const DerivationSequence& seq);

std::string derivation_to_json_text(const DerivationSequence& seq);
DerivationSequence derivation_from_json_text(const std::string& text);

} // namespace rigidity

#endif
