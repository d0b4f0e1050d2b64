#include <doctest.h>

#include "rigidity/enumerate.hpp"
#include "rigidity/moves.hpp"
#include "rigidity/sparsity.hpp"
#include "rigidity/trees.hpp"

using namespace rigidity;

namespace {

Graph joined_k4_at_vertex() {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    for (int i = 3; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) edges.push_back({i, j});
    return Graph(7, edges);
}

Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

} // namespace

TEST_CASE("verify_decomposition on hand-built partitions of K4") {
    Graph k4 = complete_graph(4);
    TreeDecomposition good;
    good.tree1 = {{0, 1, 0}, {0, 2, 0}, {1, 3, 0}};
    good.tree2 = {{0, 3, 0}, {1, 2, 0}, {2, 3, 0}};
    CHECK(verify_decomposition(4, tagged_edges(k4), good));

    TreeDecomposition cyclic;
    cyclic.tree1 = {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}};
    cyclic.tree2 = {{1, 2, 0}, {1, 3, 0}, {2, 3, 0}}; // 3-cycle, not spanning
    CHECK_FALSE(verify_decomposition(4, tagged_edges(k4), cyclic));

    TreeDecomposition overlapping = good;
    overlapping.tree2[0] = good.tree1[0];
    CHECK_FALSE(verify_decomposition(4, tagged_edges(k4), overlapping));
}

TEST_CASE("decompose_type2 on the named examples") {
    TreeDecomposition d = decompose_type2(complete_graph(4));
    CHECK(verify_decomposition(4, tagged_edges(complete_graph(4)), d));

    Graph g = joined_k4_at_vertex();
    d = decompose_type2(g);
    CHECK(d.tree1.size() == 6);
    CHECK(d.tree2.size() == 6);
    CHECK(verify_decomposition(7, tagged_edges(g), d));

    CHECK_THROWS_AS(decompose_type2(complete_graph(3)), Error);
}

TEST_CASE("decompose_type2 on every type-2 maximal graph up to 7 vertices") {
    for (const Graph& g : connected_graphs_up_to(7)) {
        if (g.edge_count() == 0 || !check_type(g, 2).maximal) continue;
        TreeDecomposition d = decompose_type2(g);
        CHECK(verify_decomposition(g.vertex_count(), tagged_edges(g), d));
    }
}

TEST_CASE("two-tree partitions exist exactly for the type-2 maximal graphs") {
    for (const Graph& g : connected_graphs_up_to(6)) {
        if (g.edge_count() != 2 * g.vertex_count() - 2 || g.vertex_count() < 2) continue;
        const bool partition = decompose_exhaustive(g.vertex_count(), tagged_edges(g)).has_value();
        CHECK(partition == check_type(g, 2).maximal);
    }
}

TEST_CASE("decompose_laman_plus_edge base cases") {
    // K2 with its edge doubled.
    TreeDecomposition d = decompose_laman_plus_edge(complete_graph(2), {0, 1});
    CHECK(verify_decomposition(2, tagged_edges_plus(complete_graph(2), {0, 1}), d));
    CHECK(d.tree1.size() == 1);
    CHECK(d.tree2.size() == 1);

    // K3 with a doubled edge.
    d = decompose_laman_plus_edge(complete_graph(3), {0, 1});
    CHECK(verify_decomposition(3, tagged_edges_plus(complete_graph(3), {0, 1}), d));

    // K4 minus an edge plus the missing edge: a K4 partition.
    Graph g = k4_minus_edge();
    d = decompose_laman_plus_edge(g, {2, 3});
    CHECK(verify_decomposition(4, tagged_edges_plus(g, {2, 3}), d));

    CHECK_THROWS_AS(decompose_laman_plus_edge(complete_graph(4), {0, 1}), Error);
}

TEST_CASE("decompose_laman_plus_edge over all Laman graphs up to 6 vertices, all pairs") {
    for (const Graph& g : connected_graphs_up_to(6)) {
        if (!is_laman(g)) continue;
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j = i + 1; j < g.vertex_count(); ++j) {
                TreeDecomposition d = decompose_laman_plus_edge(g, {i, j});
                CHECK(verify_decomposition(g.vertex_count(), tagged_edges_plus(g, {i, j}), d));
            }
    }
}

TEST_CASE("decomposition JSON") {
    TreeDecomposition d = decompose_type2(complete_graph(4));
    const std::string text = decomposition_to_json_text(d);
    CHECK(text.find("tree1") != std::string::npos);
    CHECK(text.find("tree2") != std::string::npos);
}
