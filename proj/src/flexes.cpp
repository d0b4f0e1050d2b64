#include "rigidity/flexes.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rigidity {

namespace {

struct TraceContext {
    const Framework* f;
    int n;
    std::vector<double> edge_len2; // squared target lengths, fixed at the start
    double scale;                  // framework size, >= 1
    double edge_tol;               // on |length - target|
    double surface_tol;            // on |h|

    // Correction residuals are squared-length and surface values; drive them
    // to machine precision and require at least the path invariants.
    double newton_target() const { return 1e-15 * scale * scale; }
    double newton_required() const { return 0.25 * std::min(edge_tol, surface_tol); }
};

Eigen::VectorXd flatten(const Framework& f) {
    Eigen::VectorXd q(3 * f.graph.vertex_count());
    for (int k = 0; k < f.graph.vertex_count(); ++k)
        for (int d = 0; d < 3; ++d) q(3 * k + d) = to_double(f.points[k].coords[d]);
    return q;
}

// Residuals of the augmented system at q: squared edge lengths against their
// initial values, then the surface values.
Eigen::VectorXd residual(const TraceContext& ctx, const Eigen::VectorXd& q) {
    const Graph& g = ctx.f->graph;
    Eigen::VectorXd r(g.edge_count() + ctx.n);
    int row = 0;
    for (const auto& [i, j] : g.edges()) {
        double len2 = 0;
        for (int d = 0; d < 3; ++d) {
            const double diff = q(3 * i + d) - q(3 * j + d);
            len2 += diff * diff;
        }
        r(row) = len2 - ctx.edge_len2[row];
        ++row;
    }
    for (int k = 0; k < ctx.n; ++k)
        r(row++) = h_value_d(ctx.f->surface, ctx.f->assignment[k], q.data() + 3 * k);
    return r;
}

Eigen::MatrixXd jacobian(const TraceContext& ctx, const Eigen::VectorXd& q) {
    const Graph& g = ctx.f->graph;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(g.edge_count() + ctx.n, 3 * ctx.n);
    int row = 0;
    for (const auto& [i, j] : g.edges()) {
        for (int d = 0; d < 3; ++d) {
            const double diff = 2 * (q(3 * i + d) - q(3 * j + d));
            jac(row, 3 * i + d) = diff;
            jac(row, 3 * j + d) = -diff;
        }
        ++row;
    }
    for (int k = 0; k < ctx.n; ++k, ++row) {
        double grad[3];
        h_gradient_d(ctx.f->surface, ctx.f->assignment[k], q.data() + 3 * k, grad);
        for (int d = 0; d < 3; ++d) jac(row, 3 * k + d) = grad[d];
    }
    return jac;
}

bool newton_correct(const TraceContext& ctx, Eigen::VectorXd& q, int max_iter = 25) {
    Eigen::VectorXd best_q = q;
    double best = residual(ctx, q).lpNorm<Eigen::Infinity>();
    for (int iter = 0; iter < max_iter && best > ctx.newton_target(); ++iter) {
        Eigen::MatrixXd jac = jacobian(ctx, q);
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jac);
        Eigen::VectorXd delta = cod.solve(-residual(ctx, q));
        if (!delta.allFinite()) return false;
        q += delta;
        if (delta.norm() > 10 * ctx.scale) return false; // runaway
        const double res = residual(ctx, q).lpNorm<Eigen::Infinity>();
        if (res >= best) break; // stagnated at the floating-point floor
        best = res;
        best_q = q;
    }
    q = best_q;
    return best <= ctx.newton_required();
}

// Orthonormal basis of the span of `vectors` orthogonal to the span of
// `against` (itself orthonormalised first).
std::vector<Eigen::VectorXd> complement_basis(std::vector<Eigen::VectorXd> vectors,
                                              std::vector<Eigen::VectorXd> against,
                                              double drop_tol = 1e-8) {
    std::vector<Eigen::VectorXd> ortho;
    auto strip = [&](Eigen::VectorXd v) -> std::optional<Eigen::VectorXd> {
        for (const auto& b : ortho) v -= b.dot(v) * b;
        const double norm = v.norm();
        if (norm < drop_tol) return std::nullopt;
        return Eigen::VectorXd(v / norm);
    };
    for (auto& v : against)
        if (auto b = strip(std::move(v))) ortho.push_back(std::move(*b));
    std::vector<Eigen::VectorXd> out;
    for (auto& v : vectors)
        if (auto b = strip(std::move(v))) {
            ortho.push_back(*b);
            out.push_back(std::move(*b));
        }
    return out;
}

// Kernel basis of the float rigidity matrix at q, sized by the smallest
// singular values.
std::vector<Eigen::VectorXd> float_kernel(const Eigen::MatrixXd& m, int nullity) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    std::vector<Eigen::VectorXd> out;
    const int cols = static_cast<int>(m.cols());
    for (int i = cols - nullity; i < cols; ++i) out.push_back(svd.matrixV().col(i));
    return out;
}

Eigen::MatrixXd float_rigidity_matrix(const TraceContext& ctx, const Graph& g,
                                      const Eigen::VectorXd& q) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.edge_count() + ctx.n, 3 * ctx.n);
    int row = 0;
    for (const auto& [i, j] : g.edges()) {
        for (int d = 0; d < 3; ++d) {
            const double diff = q(3 * i + d) - q(3 * j + d);
            m(row, 3 * i + d) = diff;
            m(row, 3 * j + d) = -diff;
        }
        ++row;
    }
    for (int k = 0; k < ctx.n; ++k, ++row) {
        double grad[3];
        h_gradient_d(ctx.f->surface, ctx.f->assignment[k], q.data() + 3 * k, grad);
        for (int d = 0; d < 3; ++d) m(row, 3 * k + d) = grad[d] / 2;
    }
    return m;
}

} // namespace

FlexPath trace_flex(const Framework& f, int steps, double step_size,
                    std::int64_t direction_seed) {
    if (steps < 1 || step_size <= 0) fail(Err::InvalidInput, "need steps >= 1 and step > 0");
    const int n = f.graph.vertex_count();

    TraceContext ctx;
    ctx.f = &f;
    ctx.n = n;
    Eigen::VectorXd q = flatten(f);
    ctx.scale = std::max(1.0, q.lpNorm<Eigen::Infinity>());
    for (const auto& p : f.surface.params())
        ctx.scale = std::max(ctx.scale, std::abs(to_double(p)));
    ctx.edge_tol = 1e-9 * ctx.scale;
    ctx.surface_tol = 1e-12 * ctx.scale * ctx.scale;
    for (const auto& [i, j] : f.graph.edges()) {
        double len2 = 0;
        for (int d = 0; d < 3; ++d) {
            const double diff = q(3 * i + d) - q(3 * j + d);
            len2 += diff * diff;
        }
        ctx.edge_len2.push_back(len2);
    }

    // Exact nullities are authoritative; the float kernels are sized by them.
    RigidityReport report = analyze(f);
    if (report.nullity <= report.ambient_dof)
        fail(Err::NoNontrivialFlex, "framework has no flex beyond rigid motions");

    Framework complete(complete_graph(n), f.surface, f.assignment, f.points);
    RigidityReport complete_report = analyze(complete);
    const int rigid_dim = complete_report.nullity;
    if (report.nullity <= rigid_dim)
        fail(Err::NoNontrivialFlex, "kernel holds only rigid motions");

    auto kernel = float_kernel(float_rigidity_matrix(ctx, f.graph, q), report.nullity);
    auto rigid = float_kernel(float_rigidity_matrix(ctx, complete.graph, q), rigid_dim);
    auto flex_dirs = complement_basis(kernel, rigid);
    if (flex_dirs.empty()) fail(Err::NoNontrivialFlex, "kernel holds only rigid motions");
    Eigen::VectorXd direction = flex_dirs.front();
    if (direction_seed < 0) direction = -direction;

    FlexPath path;
    path.step_size = step_size;
    path.samples.push_back(q);

    double h = step_size;
    for (int step = 0; step < steps; ++step) {
        Eigen::VectorXd next;
        bool corrected = false;
        double h_try = h;
        for (int halving = 0; halving <= 6; ++halving) {
            next = q + h_try * direction;
            if (newton_correct(ctx, next)) {
                corrected = true;
                break;
            }
            h_try /= 2;
        }
        if (!corrected) fail(Err::CorrectionDiverged, "Newton correction failed");

        // Re-extract the tangent at the new point and keep its orientation.
        auto k2 = float_kernel(float_rigidity_matrix(ctx, f.graph, next), report.nullity);
        auto r2 = float_kernel(float_rigidity_matrix(ctx, complete.graph, next), rigid_dim);
        auto dirs = complement_basis(k2, r2);
        if (!dirs.empty()) {
            Eigen::VectorXd projected = Eigen::VectorXd::Zero(3 * n);
            for (const auto& b : dirs) projected += b.dot(direction) * b;
            if (projected.norm() > 0.1)
                direction = projected / projected.norm();
            else {
                direction = dirs.front();
                if (direction.dot(path.samples.back() - next) > 0) direction = -direction;
            }
        }
        q = next;
        path.samples.push_back(q);
    }

    // Record the worst drift anywhere on the path.
    for (const auto& sample : path.samples) {
        int row = 0;
        for (const auto& [i, j] : f.graph.edges()) {
            double len2 = 0;
            for (int d = 0; d < 3; ++d) {
                const double diff = sample(3 * i + d) - sample(3 * j + d);
                len2 += diff * diff;
            }
            path.max_edge_error = std::max(
                path.max_edge_error, std::abs(std::sqrt(len2) - std::sqrt(ctx.edge_len2[row])));
            ++row;
        }
        for (int k = 0; k < n; ++k)
            path.max_surface_error = std::max(
                path.max_surface_error,
                std::abs(h_value_d(f.surface, f.assignment[k], sample.data() + 3 * k)));
    }
    return path;
}

std::optional<std::pair<Edge, double>> noncongruence_witness(const FlexPath& path,
                                                             const Framework& f) {
    if (path.samples.empty()) return std::nullopt;
    const int n = f.graph.vertex_count();
    const Eigen::VectorXd& start = path.samples.front();
    Edge best_pair{-1, -1};
    double best_delta = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (f.graph.has_edge(i, j)) continue;
            double d0 = 0;
            for (int d = 0; d < 3; ++d) {
                const double diff = start(3 * i + d) - start(3 * j + d);
                d0 += diff * diff;
            }
            d0 = std::sqrt(d0);
            for (const auto& sample : path.samples) {
                double dist = 0;
                for (int d = 0; d < 3; ++d) {
                    const double diff = sample(3 * i + d) - sample(3 * j + d);
                    dist += diff * diff;
                }
                const double delta = std::abs(std::sqrt(dist) - d0);
                if (delta > best_delta) {
                    best_delta = delta;
                    best_pair = {i, j};
                }
            }
        }
    if (best_delta > 1e-6) return std::make_pair(best_pair, best_delta);
    return std::nullopt;
}

std::string flexpath_to_csv(const FlexPath& path, int vertex_count) {
    std::ostringstream out;
    out << "step,vertex,x,y,z\n";
    out.precision(17);
    for (size_t s = 0; s < path.samples.size(); ++s)
        for (int k = 0; k < vertex_count; ++k)
            out << s << "," << k << "," << path.samples[s](3 * k) << ","
                << path.samples[s](3 * k + 1) << "," << path.samples[s](3 * k + 2) << "\n";
    return out.str();
}

std::string flexpath_to_json_text(const FlexPath& path, int vertex_count) {
    nlohmann::json j;
    j["schema"] = "surface-rigidity/1";
    j["step_size"] = path.step_size;
    j["max_edge_error"] = path.max_edge_error;
    j["max_surface_error"] = path.max_surface_error;
    auto samples = nlohmann::json::array();
    for (const auto& sample : path.samples) {
        auto frame = nlohmann::json::array();
        for (int k = 0; k < vertex_count; ++k)
            frame.push_back({sample(3 * k), sample(3 * k + 1), sample(3 * k + 2)});
        samples.push_back(frame);
    }
    j["samples"] = samples;
    return j.dump();
}

} // namespace rigidity
