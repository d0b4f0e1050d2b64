#include "rigidity/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "rigidity/sparsity.hpp"

namespace rigidity {

Framework::Framework(Graph g, SurfaceFamily m, SheetAssignment pi, std::vector<SurfacePoint> p)
    : graph(std::move(g)), surface(std::move(m)), assignment(std::move(pi)), points(std::move(p)) {
    const int n = graph.vertex_count();
    if (static_cast<int>(assignment.size()) != n || static_cast<int>(points.size()) != n)
        fail(Err::DimensionMismatch, "assignment and points must cover every vertex");
    for (int k = 0; k < n; ++k) {
        if (assignment[k] < 0 || assignment[k] >= surface.sheet_count())
            fail(Err::InvalidInput, "sheet index out of range");
        if (points[k].sheet != assignment[k])
            fail(Err::PointOffSurface, "point sheet disagrees with assignment");
        if (h_value(surface, assignment[k], points[k].coords) != 0)
            fail(Err::PointOffSurface, "point not exactly on its sheet");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i].coords == points[j].coords)
                fail(Err::InvalidInput, "framework points must be pairwise distinct");
}

RatMatrix free_rigidity_matrix(const Graph& g, const std::vector<std::vector<Rat>>& points,
                               int dim) {
    if (dim != 2 && dim != 3) fail(Err::DimensionMismatch, "dimension must be 2 or 3");
    if (static_cast<int>(points.size()) != g.vertex_count())
        fail(Err::DimensionMismatch, "one point per vertex required");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            fail(Err::DimensionMismatch, "point dimension mismatch");

    RatMatrix m(g.edge_count(), dim * g.vertex_count());
    int row = 0;
    for (const auto& [i, j] : g.edges()) {
        for (int d = 0; d < dim; ++d) {
            const Rat diff = points[i][d] - points[j][d];
            m.at(row, dim * i + d) = diff;
            m.at(row, dim * j + d) = -diff;
        }
        ++row;
    }
    return m;
}

RelativeRigidityMatrix relative_rigidity_matrix(const Framework& f) {
    const int n = f.graph.vertex_count();
    RelativeRigidityMatrix out;
    out.edge_rows = f.graph.edges();
    out.vertex_rows = n;
    out.matrix = RatMatrix(f.graph.edge_count() + n, 3 * n);

    int row = 0;
    for (const auto& [i, j] : out.edge_rows) {
        for (int d = 0; d < 3; ++d) {
            const Rat diff = f.points[i].coords[d] - f.points[j].coords[d];
            out.matrix.at(row, 3 * i + d) = diff;
            out.matrix.at(row, 3 * j + d) = -diff;
        }
        ++row;
    }
    for (int k = 0; k < n; ++k, ++row) {
        const RatVec3 grad = h_gradient(f.surface, f.assignment[k], f.points[k].coords);
        for (int d = 0; d < 3; ++d) out.matrix.at(row, 3 * k + d) = grad[d] / 2;
    }
    return out;
}

std::vector<std::string> RelativeRigidityMatrix::row_labels() const {
    std::vector<std::string> labels;
    for (const auto& [i, j] : edge_rows)
        labels.push_back("e" + std::to_string(i) + "-" + std::to_string(j));
    for (int k = 0; k < vertex_rows; ++k) labels.push_back("v" + std::to_string(k));
    return labels;
}

std::vector<std::string> RelativeRigidityMatrix::col_labels() const {
    std::vector<std::string> labels;
    const char axes[3] = {'x', 'y', 'z'};
    for (int k = 0; k < vertex_rows; ++k)
        for (char axis : axes) labels.push_back(std::string(1, axis) + std::to_string(k));
    return labels;
}

RigidityReport analyze(const Framework& f) {
    RelativeRigidityMatrix rel = relative_rigidity_matrix(f);
    RigidityReport report;
    report.rank = rank_exact(rel.matrix);
    report.nullity = 3 * f.graph.vertex_count() - report.rank;
    report.ambient_dof = ambient_dof(f.surface);
    report.infinitesimally_rigid = report.nullity == report.ambient_dof;
    report.isostatic = report.infinitesimally_rigid &&
                       2L * f.graph.vertex_count() - f.graph.edge_count() == report.ambient_dof;
    report.flex_basis = nullspace_exact(rel.matrix);
    report.method = "exact";
    report.samples_used = 1;
    return report;
}

Framework sample_framework(const Graph& g, const SurfaceFamily& m, const SheetAssignment& pi,
                           Rng& rng, int max_attempts) {
    const int n = g.vertex_count();
    if (static_cast<int>(pi.size()) != n)
        fail(Err::DimensionMismatch, "assignment must cover every vertex");
    double scale = 1.0;
    for (const auto& p : m.params()) scale = std::max(scale, std::abs(to_double(p)));
    const double min_dist2 = 1e-6 * scale * scale; // (1e-3 * scale)^2

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<SurfacePoint> points;
        for (int k = 0; k < n; ++k) points.push_back(sample_point(m, pi[k], rng));
        bool separated = true;
        for (int i = 0; i < n && separated; ++i)
            for (int j = i + 1; j < n && separated; ++j) {
                double d2 = 0;
                for (int d = 0; d < 3; ++d) {
                    const double diff =
                        to_double(points[i].coords[d]) - to_double(points[j].coords[d]);
                    d2 += diff * diff;
                }
                if (d2 < min_dist2) separated = false;
            }
        if (separated) return Framework(g, m, pi, std::move(points));
    }
    fail(Err::SamplingFailed, "could not sample a separated placement");
}

RigidityReport generic_analyze(const Graph& g, const SurfaceFamily& m, const SheetAssignment& pi,
                               int trials, std::uint64_t seed) {
    if (trials < 1) fail(Err::InvalidInput, "need at least one trial");
    Rng root(seed);
    RigidityReport best;
    bool have_best = false;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = root.spawn(static_cast<std::uint64_t>(trial) + 1);
        Framework f = sample_framework(g, m, pi, rng);
        RigidityReport report = analyze(f);
        if (!have_best || report.rank > best.rank) {
            best = std::move(report);
            have_best = true;
        }
    }
    best.samples_used = trials;
    return best;
}

bool verify_extension_lemma(const Graph& h, const Graph& g, const std::vector<int>& embedding,
                            const SurfaceFamily& m, std::uint64_t seed) {
    if (static_cast<int>(embedding.size()) != h.vertex_count())
        fail(Err::DimensionMismatch, "embedding must cover V(H)");
    std::vector<int> image = embedding;
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        fail(Err::InvalidInput, "embedding must be injective");

    // H must appear as a vertex-induced subgraph through the embedding.
    SubgraphRef ref = induced_subgraph(g, image);
    if (static_cast<int>(ref.edges.size()) != h.edge_count())
        fail(Err::ImproperSubgraph, "H is not vertex-induced in G");
    for (const auto& [a, b] : h.edges())
        if (!g.has_edge(embedding[a], embedding[b]))
            fail(Err::ImproperSubgraph, "embedding does not carry E(H) into E(G)");

    ContractionResult quotient = contract(g, ref); // throws NotSimple if G/H is not simple
    if (!check_type(h, 2).maximal || !check_type(g, 2).maximal ||
        !check_type(quotient.graph, 2).maximal)
        fail(Err::NotType2Maximal, "H, G and G/H must all be type-2 maximal");

    Rng rng(seed);
    auto isostatic_on = [&](const Graph& graph, std::uint64_t salt) {
        SheetAssignment pi(graph.vertex_count());
        Rng local = rng.spawn(salt);
        for (auto& s : pi) s = static_cast<int>(local.uniform(0, m.sheet_count() - 1));
        return generic_analyze(graph, m, pi, 3, local.next()).isostatic;
    };
    return isostatic_on(h, 1) && isostatic_on(quotient.graph, 2) && isostatic_on(g, 3);
}

namespace {

nlohmann::json point_to_json(const SurfacePoint& p) {
    return {rational_to_string(p.coords[0]), rational_to_string(p.coords[1]),
            rational_to_string(p.coords[2])};
}

} // namespace

Framework framework_from_json_text(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        Graph g = graph_from_json_text(j.at("graph").dump());
        SurfaceFamily m = surface_from_json_text(j.at("surface").dump());
        SheetAssignment pi;
        for (const auto& s : j.at("assignment")) pi.push_back(s.get<int>());
        std::vector<SurfacePoint> points;
        for (size_t k = 0; k < j.at("points").size(); ++k) {
            const auto& row = j.at("points")[k];
            if (!row.is_array() || row.size() != 3)
                fail(Err::InvalidInput, "point must be a coordinate triple");
            SurfacePoint p;
            for (int d = 0; d < 3; ++d) p.coords[d] = parse_rational(row[d].get<std::string>());
            p.sheet = k < pi.size() ? pi[k] : 0;
            points.push_back(std::move(p));
        }
        return Framework(std::move(g), std::move(m), std::move(pi), std::move(points));
    } catch (const nlohmann::json::exception& e) {
        fail(Err::InvalidInput, std::string("bad framework JSON: ") + e.what());
    }
}

std::string framework_to_json_text(const Framework& f) {
    nlohmann::json j;
    j["graph"] = nlohmann::json::parse(graph_to_json_text(f.graph));
    j["surface"] = nlohmann::json::parse(surface_to_json_text(f.surface));
    j["assignment"] = f.assignment;
    auto points = nlohmann::json::array();
    for (const auto& p : f.points) points.push_back(point_to_json(p));
    j["points"] = points;
    return j.dump();
}

std::string report_to_json_text(const RigidityReport& r) {
    nlohmann::json j;
    j["rank"] = r.rank;
    j["nullity"] = r.nullity;
    j["ambient_dof"] = r.ambient_dof;
    j["infinitesimally_rigid"] = r.infinitesimally_rigid;
    j["isostatic"] = r.isostatic;
    j["method"] = r.method;
    j["samples_used"] = r.samples_used;
    auto basis = nlohmann::json::array();
    for (const auto& vec : r.flex_basis) {
        auto row = nlohmann::json::array();
        for (const auto& x : vec) row.push_back(rational_to_string(x));
        basis.push_back(row);
    }
    j["flex_basis"] = basis;
    return j.dump();
}

} // namespace rigidity
