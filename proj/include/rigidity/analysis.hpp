#ifndef RIGIDITY_ANALYSIS_HPP
#define RIGIDITY_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/surfaces.hpp"

namespace rigidity {

// Graph, surface, sheet assignment and one exact point per vertex.
// Construction checks that every point lies exactly on its assigned sheet and
// that points are pairwise distinct.
struct Framework {
    Graph graph;
    SurfaceFamily surface;
    SheetAssignment assignment;
    std::vector<SurfacePoint> points;

    Framework(Graph g, SurfaceFamily m, SheetAssignment pi, std::vector<SurfacePoint> p);
};

// The (|E|+|V|) x 3|V| matrix: one row per edge with entries p_i - p_j under
// v_i and p_j - p_i under v_j, then one row per vertex carrying half the
// constraint gradient in that vertex's column triple.
struct RelativeRigidityMatrix {
    RatMatrix matrix;
    std::vector<Edge> edge_rows; // canonical edge order
    int vertex_rows = 0;         // vertices 0..n-1, after the edge rows

    std::vector<std::string> row_labels() const;
    std::vector<std::string> col_labels() const;
};

RelativeRigidityMatrix relative_rigidity_matrix(const Framework& f);

// |E| x dim|V| matrix of edge rows only; points are flat coordinate vectors
// of length dim per vertex.
RatMatrix free_rigidity_matrix(const Graph& g, const std::vector<std::vector<Rat>>& points,
                               int dim);

struct RigidityReport {
    int rank = 0;
    int nullity = 0;
    int ambient_dof = 0;
    bool infinitesimally_rigid = false;
    bool isostatic = false;
    std::vector<std::vector<Rat>> flex_basis; // spans ker R(G,p,M)
    std::string method = "exact";
    int samples_used = 1;
};

// Exact rank/kernel analysis of one framework. infinitesimally_rigid iff the
// nullity equals the surface's rigid-motion count, isostatic iff additionally
// 2|V| - |E| matches it.
RigidityReport analyze(const Framework& f);

// Rejects placements with a pair of points closer than about 1e-3 of the
// surface scale; throws SamplingFailed after max_attempts.
Framework sample_framework(const Graph& g, const SurfaceFamily& m, const SheetAssignment& pi,
                           Rng& rng, int max_attempts = 100);

// Best-of-`trials` analysis over independent exact rational samples. Rank at
// any point lower-bounds the generic rank, so the maximal sampled rank
// certifies generic rigidity whenever it reaches the combinatorial ceiling.
RigidityReport generic_analyze(const Graph& g, const SurfaceFamily& m, const SheetAssignment& pi,
                               int trials, std::uint64_t seed);

// Checks that h (embedded via `embedding`, vertex-induced), g/h and g are all
// maximally independent of type 2 and that generic_analyze reports all three
// isostatic on the given surface.
bool verify_extension_lemma(const Graph& h, const Graph& g, const std::vector<int>& embedding,
                            const SurfaceFamily& m, std::uint64_t seed);

Framework framework_from_json_text(const std::string& text);
std::string framework_to_json_text(const Framework& f);
std::string report_to_json_text(const RigidityReport& r);

} // namespace rigidity

#endif
