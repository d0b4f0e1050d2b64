#include <doctest.h>

#include "rigidity/enumerate.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/sparsity.hpp"

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

TEST_CASE("check_type on the base examples") {
    auto v = check_type(complete_graph(3), 3);
    CHECK(v.independent);
    CHECK(v.maximal);

    v = check_type(complete_graph(4), 2);
    CHECK(v.independent);
    CHECK(v.maximal);

    v = check_type(joined_k4_at_vertex(), 2);
    CHECK(v.independent);
    CHECK(v.maximal);

    v = check_type(complete_graph(4), 3);
    CHECK_FALSE(v.independent);
    REQUIRE(v.witness.has_value());
    CHECK(freedom_number(*v.witness) < 3);
}

TEST_CASE("oracle agrees on the same examples") {
    for (int k : {2, 3}) {
        for (const Graph& g : {complete_graph(3), complete_graph(4), joined_k4_at_vertex()}) {
            auto fast = check_type(g, k);
            auto oracle = check_type_oracle(g, k);
            CHECK(fast.independent == oracle.independent);
            CHECK(fast.maximal == oracle.maximal);
        }
    }
}

TEST_CASE("pebble game equals oracle on all connected graphs up to 6 vertices") {
    for (const Graph& g : connected_graphs_up_to(6)) {
        for (int k : {2, 3}) {
            auto fast = check_type(g, k);
            auto oracle = check_type_oracle(g, k);
            CHECK(fast.independent == oracle.independent);
            CHECK(fast.maximal == oracle.maximal);
            if (!fast.independent) {
                REQUIRE(fast.witness.has_value());
                CHECK(freedom_number(*fast.witness) < k);
                validate_subgraph(g, *fast.witness);
            }
        }
    }
}

TEST_CASE("laman checks") {
    CHECK(is_laman(complete_graph(3)));
    CHECK(is_laman(k4_minus_edge()));
    CHECK_FALSE(is_laman(complete_graph(4)));
    CHECK_FALSE(is_laman(Graph(4, {{0, 1}, {2, 3}}))); // disconnected
}

TEST_CASE("laman plus one") {
    auto e = is_laman_plus_one(complete_graph(4));
    REQUIRE(e.has_value()); // any of the six works by symmetry
    CHECK_FALSE(is_laman_plus_one(joined_k4_at_vertex()).has_value());
    CHECK_FALSE(is_laman_plus_one(complete_graph(3)).has_value());
}

TEST_CASE("maximal tight subgraph") {
    Graph g = joined_k4_at_vertex();
    auto h = maximal_tight_subgraph(g);
    REQUIRE(h.has_value());
    CHECK(freedom_number(*h) == 2);
    CHECK(h->vertices.size() == 4); // one of the K4 blocks
    CHECK_FALSE(maximal_tight_subgraph(complete_graph(4)).has_value());
    CHECK_FALSE(maximal_tight_subgraph(Graph(1, {})).has_value());
    CHECK_THROWS_AS(maximal_tight_subgraph(complete_graph(3)), Error);
}

TEST_CASE("tight (3,6) count") {
    CHECK(check_tight_3_6(complete_graph(4)));
    CHECK(check_tight_3_6(cone(k4_minus_edge())));
    CHECK_FALSE(check_tight_3_6(complete_graph(5)));
}

TEST_CASE("point-line counts on cone graphs") {
    CHECK(check_point_line(cone(complete_graph(4)), 4));
    CHECK_FALSE(check_point_line(cone(complete_graph(5)), 5));
    CHECK_FALSE(check_point_line(cone(cycle_graph(4)), 4));
    CHECK_THROWS_AS(check_point_line(cycle_graph(5), 0), Error); // not a cone
    CHECK_THROWS_AS(check_point_line(cone(complete_graph(3)), 3), Error); // < 4 points
}

TEST_CASE("laman implies type-2 independent, and type-2 maximal implies the count") {
    for (const Graph& g : connected_graphs_up_to(6)) {
        if (is_laman(g)) CHECK(check_type(g, 2).independent);
        if (check_type(g, 2).maximal) CHECK(g.edge_count() == 2 * g.vertex_count() - 2);
    }
}

TEST_CASE("coning shadow: tight(3,6) of the cone equals Laman of the base") {
    for (const Graph& g : connected_graphs_up_to(5))
        CHECK(check_tight_3_6(cone(g)) == is_laman(g));
}
