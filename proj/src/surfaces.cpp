#include "rigidity/surfaces.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace rigidity {

SurfaceFamily::SurfaceFamily(SurfaceKind kind, std::vector<Rat> params)
    : kind_(kind), params_(std::move(params)) {
    if (params_.empty()) fail(Err::InvalidInput, "surface needs at least one sheet");
    for (size_t i = 0; i < params_.size(); ++i) {
        if (kind_ != SurfaceKind::ParallelPlanes && params_[i] <= 0)
            fail(Err::InvalidInput, "radii must be positive");
        for (size_t j = i + 1; j < params_.size(); ++j)
            if (params_[i] == params_[j]) fail(Err::InvalidInput, "sheet parameters must be distinct");
    }
}

const Rat& SurfaceFamily::param(int sheet) const {
    if (sheet < 0 || sheet >= sheet_count()) fail(Err::InvalidInput, "sheet index out of range");
    return params_[sheet];
}

Rat h_value(const SurfaceFamily& m, int sheet, const RatVec3& q) {
    const Rat& p = m.param(sheet);
    switch (m.kind()) {
    case SurfaceKind::ParallelPlanes: return q[2] - p;
    case SurfaceKind::ConcentricSpheres: return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] - p * p;
    case SurfaceKind::ConcentricCylinders: return q[0] * q[0] + q[1] * q[1] - p * p;
    }
    fail(Err::InvalidInput, "unknown surface kind");
}

RatVec3 h_gradient(const SurfaceFamily& m, int sheet, const RatVec3& q) {
    m.param(sheet); // range check
    switch (m.kind()) {
    case SurfaceKind::ParallelPlanes: return {Rat(0), Rat(0), Rat(1)};
    case SurfaceKind::ConcentricSpheres: return {2 * q[0], 2 * q[1], 2 * q[2]};
    case SurfaceKind::ConcentricCylinders: return {2 * q[0], 2 * q[1], Rat(0)};
    }
    fail(Err::InvalidInput, "unknown surface kind");
}

int ambient_dof(const SurfaceFamily& m) {
    return m.kind() == SurfaceKind::ConcentricCylinders ? 2 : 3;
}

SurfacePoint sample_point(const SurfaceFamily& m, int sheet, Rng& rng) {
    const Rat& p = m.param(sheet);
    constexpr std::int64_t range = 1000;
    SurfacePoint out;
    out.sheet = sheet;
    switch (m.kind()) {
    case SurfaceKind::ParallelPlanes:
        out.coords = {rng.rational(range), rng.rational(range), p};
        break;
    case SurfaceKind::ConcentricCylinders: {
        const Rat t = rng.rational(range);
        const Rat denom = 1 + t * t;
        out.coords = {p * (1 - t * t) / denom, 2 * p * t / denom, rng.rational(range)};
        break;
    }
    case SurfaceKind::ConcentricSpheres: {
        const Rat t = rng.rational(range);
        const Rat s = rng.rational(range);
        const Rat dt = 1 + t * t;
        const Rat ds = 1 + s * s;
        // (cos a cos b, sin a cos b, sin b) with tan-half substitutions.
        out.coords = {p * (1 - t * t) * (1 - s * s) / (dt * ds),
                      2 * p * t * (1 - s * s) / (dt * ds), 2 * p * s / ds};
        break;
    }
    }
    return out;
}

double h_value_d(const SurfaceFamily& m, int sheet, const double* q) {
    const double p = to_double(m.param(sheet));
    switch (m.kind()) {
    case SurfaceKind::ParallelPlanes: return q[2] - p;
    case SurfaceKind::ConcentricSpheres: return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] - p * p;
    case SurfaceKind::ConcentricCylinders: return q[0] * q[0] + q[1] * q[1] - p * p;
    }
    fail(Err::InvalidInput, "unknown surface kind");
}

void h_gradient_d(const SurfaceFamily& m, int sheet, const double* q, double* grad) {
    m.param(sheet);
    switch (m.kind()) {
    case SurfaceKind::ParallelPlanes:
        grad[0] = 0;
        grad[1] = 0;
        grad[2] = 1;
        return;
    case SurfaceKind::ConcentricSpheres:
        grad[0] = 2 * q[0];
        grad[1] = 2 * q[1];
        grad[2] = 2 * q[2];
        return;
    case SurfaceKind::ConcentricCylinders:
        grad[0] = 2 * q[0];
        grad[1] = 2 * q[1];
        grad[2] = 0;
        return;
    }
    fail(Err::InvalidInput, "unknown surface kind");
}

double h_scale(const SurfaceFamily& m, int sheet) {
    const double p = std::abs(to_double(m.param(sheet)));
    if (m.kind() == SurfaceKind::ParallelPlanes) return std::max(1.0, p);
    return std::max(1.0, p * p);
}

std::array<double, 3> project(const SurfaceFamily& m, int sheet, std::array<double, 3> q,
                              double tol, int max_iter) {
    const double target = tol * h_scale(m, sheet);
    for (int iter = 0; iter < max_iter; ++iter) {
        const double h = h_value_d(m, sheet, q.data());
        if (std::abs(h) <= target) return q;
        double grad[3];
        h_gradient_d(m, sheet, q.data(), grad);
        const double g2 = grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2];
        if (g2 < 1e-30) fail(Err::NoConvergence, "singular gradient in projection");
        const double step = h / g2;
        q[0] -= step * grad[0];
        q[1] -= step * grad[1];
        q[2] -= step * grad[2];
    }
    fail(Err::NoConvergence, "projection did not converge");
}

std::string surface_kind_name(SurfaceKind kind) {
    switch (kind) {
    case SurfaceKind::ParallelPlanes: return "planes";
    case SurfaceKind::ConcentricSpheres: return "spheres";
    case SurfaceKind::ConcentricCylinders: return "cylinders";
    }
    fail(Err::InvalidInput, "unknown surface kind");
}

SurfaceFamily surface_from_json_text(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        const std::string kind = j.at("kind").get<std::string>();
        SurfaceKind k;
        if (kind == "planes") k = SurfaceKind::ParallelPlanes;
        else if (kind == "spheres") k = SurfaceKind::ConcentricSpheres;
        else if (kind == "cylinders") k = SurfaceKind::ConcentricCylinders;
        else fail(Err::InvalidInput, "unknown surface kind: " + kind);
        std::vector<Rat> params;
        for (const auto& p : j.at("params")) params.push_back(parse_rational(p.get<std::string>()));
        return SurfaceFamily(k, std::move(params));
    } catch (const nlohmann::json::exception& e) {
        fail(Err::InvalidInput, std::string("bad surface JSON: ") + e.what());
    }
}

std::string surface_to_json_text(const SurfaceFamily& m) {
    nlohmann::json j;
    j["kind"] = surface_kind_name(m.kind());
    auto params = nlohmann::json::array();
    for (const auto& p : m.params()) params.push_back(rational_to_string(p));
    j["params"] = params;
    return j.dump();
}

} // namespace rigidity
