#include <doctest.h>

#include "rigidity/analysis.hpp"
#include "rigidity/sparsity.hpp"

using namespace rigidity;

namespace {

SurfaceFamily cylinder() { return SurfaceFamily(SurfaceKind::ConcentricCylinders, {Rat(1)}); }
SurfaceFamily sphere1() { return SurfaceFamily(SurfaceKind::ConcentricSpheres, {Rat(1)}); }
SurfaceFamily plane0() { return SurfaceFamily(SurfaceKind::ParallelPlanes, {Rat(0)}); }

Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph joined_k4_at_vertex() {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    for (int i = 3; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) edges.push_back({i, j});
    return Graph(7, edges);
}

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

SurfacePoint pt(long x, long y, long z, int sheet = 0) {
    return SurfacePoint{{Rat(x), Rat(y), Rat(z)}, sheet};
}

} // namespace

TEST_CASE("free rigidity matrix rows") {
    Graph k2 = complete_graph(2);
    std::vector<std::vector<Rat>> p = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
    RatMatrix m = free_rigidity_matrix(k2, p, 2);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 4);
    CHECK(m.at(0, 0) == -1);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(0, 2) == 1);
    CHECK(m.at(0, 3) == 0);
}

TEST_CASE("triangle rank in the plane: generic 3, colinear less") {
    Graph k3 = complete_graph(3);
    std::vector<std::vector<Rat>> generic = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(rank_exact(free_rigidity_matrix(k3, generic, 2)) == 3);
    std::vector<std::vector<Rat>> colinear = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
    CHECK(rank_exact(free_rigidity_matrix(k3, colinear, 2)) == 2);
}

TEST_CASE("relative rigidity matrix of K2 on the cylinder") {
    Framework f(complete_graph(2), cylinder(), {0, 0}, {pt(1, 0, 0), pt(0, 1, 1)});
    RelativeRigidityMatrix rel = relative_rigidity_matrix(f);
    CHECK(rel.matrix.rows() == 3);
    CHECK(rel.matrix.cols() == 6);
    // Edge row: p0 - p1 then p1 - p0.
    const long expected[6] = {1, -1, -1, -1, 1, 1};
    for (int c = 0; c < 6; ++c) CHECK(rel.matrix.at(0, c) == expected[c]);
    // Surface rows carry half gradients.
    CHECK(rel.matrix.at(1, 0) == 1);
    CHECK(rel.matrix.at(1, 1) == 0);
    CHECK(rel.matrix.at(1, 2) == 0);
    CHECK(rel.matrix.at(2, 3) == 0);
    CHECK(rel.matrix.at(2, 4) == 1);
    CHECK(rel.matrix.at(2, 5) == 0);
    CHECK(rel.row_labels().size() == 3);
    CHECK(rel.col_labels().size() == 6);
}

TEST_CASE("K4 on a cylinder has a 10x12 matrix and is isostatic") {
    RigidityReport r = generic_analyze(complete_graph(4), cylinder(), {0, 0, 0, 0}, 3, 12345);
    CHECK(r.rank == 10);
    CHECK(r.nullity == 2);
    CHECK(r.ambient_dof == 2);
    CHECK(r.infinitesimally_rigid);
    CHECK(r.isostatic);
    CHECK(r.samples_used == 3);
}

TEST_CASE("K4 minus an edge on the cylinder is flexible with nullity 3") {
    RigidityReport r = generic_analyze(k4_minus_edge(), cylinder(), {0, 0, 0, 0}, 3, 5);
    CHECK(r.nullity == 3);
    CHECK_FALSE(r.infinitesimally_rigid);
    CHECK_FALSE(r.isostatic);
}

TEST_CASE("K3 and K2 on the cylinder have nullity 3") {
    CHECK(generic_analyze(complete_graph(3), cylinder(), {0, 0, 0}, 3, 6).nullity == 3);
    CHECK(generic_analyze(complete_graph(2), cylinder(), {0, 0}, 3, 6).nullity == 3);
}

TEST_CASE("triangle on one plane is isostatic") {
    RigidityReport r = generic_analyze(complete_graph(3), plane0(), {0, 0, 0}, 3, 2);
    CHECK(r.nullity == 3);
    CHECK(r.ambient_dof == 3);
    CHECK(r.isostatic);
}

TEST_CASE("K4 on one sphere is rigid but not isostatic; K4 minus an edge is isostatic") {
    RigidityReport over = generic_analyze(complete_graph(4), sphere1(), {0, 0, 0, 0}, 3, 9);
    CHECK(over.rank == 9);
    CHECK(over.nullity == 3);
    CHECK(over.infinitesimally_rigid);
    CHECK_FALSE(over.isostatic); // 2|V| - |E| = 2 != 3

    RigidityReport iso = generic_analyze(k4_minus_edge(), sphere1(), {0, 0, 0, 0}, 3, 9);
    CHECK(iso.isostatic);
}

TEST_CASE("flex basis vectors satisfy the constraint equations exactly") {
    Rng rng(31);
    Framework f = sample_framework(k4_minus_edge(), cylinder(), {0, 0, 0, 0}, rng);
    RigidityReport r = analyze(f);
    CHECK(static_cast<int>(r.flex_basis.size()) == r.nullity);
    for (const auto& u : r.flex_basis) {
        for (const auto& [i, j] : f.graph.edges()) {
            Rat dot(0);
            for (int d = 0; d < 3; ++d)
                dot += (u[3 * i + d] - u[3 * j + d]) *
                       (f.points[i].coords[d] - f.points[j].coords[d]);
            CHECK(dot == 0);
        }
        for (int k = 0; k < f.graph.vertex_count(); ++k) {
            const RatVec3 grad = h_gradient(f.surface, f.assignment[k], f.points[k].coords);
            Rat dot(0);
            for (int d = 0; d < 3; ++d) dot += u[3 * k + d] * grad[d];
            CHECK(dot == 0);
        }
    }
}

TEST_CASE("nullity never drops below the ambient freedom, and floats agree with exact") {
    Rng rng(77);
    for (const Graph& g : {complete_graph(4), k4_minus_edge(), cycle_graph(5)}) {
        for (const SurfaceFamily& m : {cylinder(), sphere1(), plane0()}) {
            Framework f = sample_framework(g, m, SheetAssignment(g.vertex_count(), 0), rng);
            RelativeRigidityMatrix rel = relative_rigidity_matrix(f);
            const int exact = rank_exact(rel.matrix);
            CHECK(exact == rank_float(to_float(rel.matrix)));
            CHECK(3 * g.vertex_count() - exact >= ambient_dof(m));
        }
    }
}

TEST_CASE("deleting any edge row of an isostatic framework drops the rank by one") {
    Rng rng(13);
    Framework f = sample_framework(complete_graph(4), cylinder(), {0, 0, 0, 0}, rng);
    RelativeRigidityMatrix rel = relative_rigidity_matrix(f);
    const int full = rank_exact(rel.matrix);
    REQUIRE(full == 10);
    for (int skip = 0; skip < f.graph.edge_count(); ++skip) {
        RatMatrix reduced(rel.matrix.rows() - 1, rel.matrix.cols());
        int row = 0;
        for (int r = 0; r < rel.matrix.rows(); ++r) {
            if (r == skip) continue;
            for (int c = 0; c < rel.matrix.cols(); ++c) reduced.at(row, c) = rel.matrix.at(r, c);
            ++row;
        }
        CHECK(rank_exact(reduced) == full - 1);
    }
}

TEST_CASE("framework validation errors") {
    CHECK_THROWS_AS(Framework(complete_graph(2), cylinder(), {0, 0}, {pt(2, 0, 0), pt(0, 1, 1)}),
                    Error);
    CHECK_THROWS_AS(Framework(complete_graph(2), cylinder(), {0}, {pt(1, 0, 0)}), Error);
    CHECK_THROWS_AS(Framework(complete_graph(2), cylinder(), {0, 0}, {pt(1, 0, 0), pt(1, 0, 0)}),
                    Error);
}

TEST_CASE("extension lemma spot checks") {
    SurfaceFamily m = cylinder();
    Graph g1 = joined_k4_at_vertex();
    CHECK(verify_extension_lemma(complete_graph(4), g1, {3, 4, 5, 6}, m, 999));
    Graph g2 = joined_k4_two_edges();
    CHECK(verify_extension_lemma(complete_graph(4), g2, {4, 5, 6, 7}, m, 999));
    CHECK_THROWS_AS(verify_extension_lemma(complete_graph(3), g1, {0, 1, 2}, m, 1), Error);
}

TEST_CASE("framework JSON round trip") {
    Framework f(complete_graph(2), cylinder(), {0, 0}, {pt(1, 0, 0), pt(0, 1, 1)});
    const std::string text = framework_to_json_text(f);
    Framework back = framework_from_json_text(text);
    CHECK(back.graph == f.graph);
    CHECK(back.assignment == f.assignment);
    CHECK(back.points[1].coords == f.points[1].coords);
    CHECK(framework_to_json_text(back) == text);
    CHECK_THROWS_AS(framework_from_json_text("{}"), Error);
}

TEST_CASE("report JSON carries the schema-relevant fields") {
    RigidityReport r = generic_analyze(complete_graph(4), cylinder(), {0, 0, 0, 0}, 1, 3);
    const std::string text = report_to_json_text(r);
    CHECK(text.find("\"rank\":10") != std::string::npos);
    CHECK(text.find("\"isostatic\":true") != std::string::npos);
}
