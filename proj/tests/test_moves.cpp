#include <doctest.h>

#include "rigidity/enumerate.hpp"
#include "rigidity/moves.hpp"
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

// Two K4 blocks joined by two disjoint edges.
Graph joined_k4_two_edges() {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    for (int i = 4; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) edges.push_back({i, j});
    edges.push_back({0, 4});
    edges.push_back({1, 5});
    return Graph(8, edges);
}

Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

} // namespace

TEST_CASE("henneberg 1") {
    CHECK(are_isomorphic(henneberg1(complete_graph(2), 0, 1), complete_graph(3)));
    CHECK(are_isomorphic(henneberg1(complete_graph(3), 0, 1), k4_minus_edge()));
    CHECK_THROWS_AS(henneberg1(complete_graph(3), 0, 0), Error);
    CHECK_THROWS_AS(henneberg1(complete_graph(3), 0, 5), Error);
    // f is preserved
    for (const Graph& g : {complete_graph(2), complete_graph(4), cycle_graph(5)})
        CHECK(freedom_number(henneberg1(g, 0, 1)) == freedom_number(g));
}

TEST_CASE("henneberg 2") {
    Graph g = henneberg2(complete_graph(3), {0, 1}, 2);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 5);
    CHECK(is_laman(g));

    Graph h = henneberg2(complete_graph(4), {0, 1}, 2);
    CHECK(h.vertex_count() == 5);
    CHECK(h.edge_count() == 8);
    CHECK(check_type(h, 2).maximal);

    CHECK_THROWS_AS(henneberg2(complete_graph(3), {0, 4}, 2), Error);
    CHECK_THROWS_AS(henneberg2(complete_graph(3), {0, 1}, 1), Error);
    for (const Graph& g2 : {complete_graph(3), complete_graph(4)})
        CHECK(freedom_number(henneberg2(g2, {0, 1}, 2)) == freedom_number(g2));
}

TEST_CASE("henneberg 2 followed by its inverse is the identity") {
    Graph g = complete_graph(4);
    Graph after = henneberg2(g, {0, 1}, 2);
    Graph back = remove_vertex(after, 4);
    std::vector<Edge> edges = back.edges();
    edges.push_back({0, 1});
    CHECK(Graph(back.vertex_count(), edges) == g);
}

TEST_CASE("inverse henneberg 2 candidates") {
    // Any degree-3 vertex of a Laman graph admits at least one candidate.
    for (const Graph& g : connected_graphs_up_to(6)) {
        if (!is_laman(g)) continue;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 3) CHECK(!inverse_henneberg2_candidates(g, v, 3).empty());
    }
    // In two joined K4, every degree-3 vertex sits in a K4 block: no candidates.
    Graph g = joined_k4_at_vertex();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3) CHECK(inverse_henneberg2_candidates(g, v, 2).empty());
    CHECK_THROWS_AS(inverse_henneberg2_candidates(k4_minus_edge(), 2, 3), Error); // degree 2
}

TEST_CASE("derive_laman on the small cases") {
    DerivationSequence seq = derive_laman(complete_graph(3));
    CHECK(seq.base == BaseGraph::K2);
    CHECK(seq.steps.size() == 1);
    CHECK(are_isomorphic(replay(seq), complete_graph(3)));

    seq = derive_laman(k4_minus_edge());
    CHECK(seq.steps.size() == 2);
    CHECK(are_isomorphic(replay(seq), k4_minus_edge()));

    CHECK_THROWS_AS(derive_laman(complete_graph(4)), Error);
}

TEST_CASE("derive_laman replays on every Laman graph up to 7 vertices") {
    for (const Graph& g : connected_graphs_up_to(7)) {
        if (!is_laman(g)) continue;
        DerivationSequence seq = derive_laman(g);
        CHECK(are_isomorphic(replay(seq), g));
    }
}

TEST_CASE("derive_laman_plus_one") {
    DerivationSequence seq = derive_laman_plus_one(complete_graph(4));
    CHECK(seq.base == BaseGraph::K4);
    CHECK(seq.steps.empty());

    Graph g = henneberg1(complete_graph(4), 0, 1);
    seq = derive_laman_plus_one(g);
    CHECK(seq.steps.size() == 1);
    CHECK(are_isomorphic(replay(seq), g));

    CHECK_THROWS_AS(derive_laman_plus_one(joined_k4_at_vertex()), Error);
}

TEST_CASE("derive_laman_plus_one replays on every such graph up to 7 vertices") {
    for (const Graph& g : connected_graphs_up_to(7)) {
        if (!is_laman_plus_one(g)) continue;
        DerivationSequence seq = derive_laman_plus_one(g);
        CHECK(seq.base == BaseGraph::K4);
        for (const Move& m : seq.steps) CHECK_FALSE(std::holds_alternative<SubgraphExtensionStep>(m));
        CHECK(are_isomorphic(replay(seq), g));
    }
}

TEST_CASE("derive_type2 structures") {
    DerivationSequence seq = derive_type2(complete_graph(4));
    CHECK(seq.base == BaseGraph::K4);
    CHECK(seq.steps.empty());

    seq = derive_type2(Graph(1, {}));
    CHECK(seq.base == BaseGraph::K1);
    CHECK(seq.steps.empty());

    seq = derive_type2(joined_k4_at_vertex());
    REQUIRE(!seq.steps.empty());
    CHECK(std::holds_alternative<SubgraphExtensionStep>(seq.steps.back()));
    CHECK(are_isomorphic(replay(seq), joined_k4_at_vertex()));

    seq = derive_type2(joined_k4_two_edges());
    bool has_extension = false;
    for (const Move& m : seq.steps)
        if (std::holds_alternative<SubgraphExtensionStep>(m)) has_extension = true;
    CHECK(has_extension);
    CHECK(are_isomorphic(replay(seq), joined_k4_two_edges()));

    CHECK_THROWS_AS(derive_type2(complete_graph(3)), Error);
}

TEST_CASE("derive_type2 replays on every type-2 maximal graph up to 7 vertices") {
    for (const Graph& g : connected_graphs_up_to(7)) {
        if (!check_type(g, 2).maximal) continue;
        DerivationSequence seq = derive_type2(g);
        CHECK(are_isomorphic(replay(seq), g));
    }
}

TEST_CASE("henneberg moves preserve type-k maximality on small graphs") {
    for (const Graph& g : connected_graphs_up_to(5)) {
        if (g.vertex_count() < 2) continue;
        for (int k : {2, 3}) {
            if (!check_type(g, k).maximal) continue;
            CHECK(check_type(henneberg1(g, 0, g.vertex_count() - 1), k).maximal);
            if (g.edge_count() > 0) {
                const Edge e = g.edges().front();
                for (int w = 0; w < g.vertex_count(); ++w) {
                    if (w == e.first || w == e.second) continue;
                    CHECK(check_type(henneberg2(g, e, w), k).maximal);
                    break;
                }
            }
        }
    }
}

TEST_CASE("laman graphs without degree-2 vertices have at least 6 of degree 3") {
    for (const Graph& g : connected_graphs_up_to(8)) {
        if (g.vertex_count() < 6 || !is_laman(g)) continue;
        bool has_degree2 = false;
        int degree3 = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 2) has_degree2 = true;
            if (g.degree(v) == 3) ++degree3;
        }
        if (!has_degree2) CHECK(degree3 >= 6);
    }
}

TEST_CASE("replay validates steps") {
    DerivationSequence seq;
    seq.base = BaseGraph::K4;
    CHECK(replay(seq) == complete_graph(4));

    seq.steps.push_back(Henneberg2Step{{0, 1}, 2});
    seq.steps.push_back(Henneberg2Step{{0, 1}, 2}); // edge (0,1) no longer present
    CHECK_THROWS_AS(replay(seq), Error);
    try {
        replay(seq);
    } catch (const Error& e) {
        CHECK(e.code() == Err::IllFormedStep);
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}

TEST_CASE("derivation JSON round trip") {
    for (const Graph& g : {joined_k4_at_vertex(), joined_k4_two_edges()}) {
        DerivationSequence seq = derive_type2(g);
        const std::string text = derivation_to_json_text(seq);
        DerivationSequence back = derivation_from_json_text(text);
        CHECK(are_isomorphic(replay(back), g));
        CHECK(derivation_to_json_text(back) == text);
    }
    CHECK_THROWS_AS(derivation_from_json_text("{}"), Error);
}
