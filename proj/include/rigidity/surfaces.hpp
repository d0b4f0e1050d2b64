#ifndef RIGIDITY_SURFACES_HPP
#define RIGIDITY_SURFACES_HPP

#include <string>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

enum class SurfaceKind { ParallelPlanes, ConcentricSpheres, ConcentricCylinders };

// Union of parallel planes z = c_i, concentric spheres about the origin, or
// concentric cylinders about the z-axis. Canonical placement: rigidity is
// invariant under ambient isometry, so nothing is lost and the constraint
// functions stay sparse.
class SurfaceFamily {
public:
    SurfaceFamily(SurfaceKind kind, std::vector<Rat> params);

    SurfaceKind kind() const { return kind_; }
    const std::vector<Rat>& params() const { return params_; }
    int sheet_count() const { return static_cast<int>(params_.size()); }
    const Rat& param(int sheet) const;

private:
    SurfaceKind kind_;
    std::vector<Rat> params_;
};

// Vertex -> sheet index.
using SheetAssignment = std::vector<int>;

struct SurfacePoint {
    RatVec3 coords;
    int sheet = 0;
};

// Constraint residual: z - c (planes), x^2+y^2+z^2 - r^2 (spheres),
// x^2+y^2 - r^2 (cylinders). Zero exactly on the sheet.
Rat h_value(const SurfaceFamily& m, int sheet, const RatVec3& q);

// Full gradient of h at q; the 1/2 scaling of the surface rows is applied at
// matrix assembly, not here.
RatVec3 h_gradient(const SurfaceFamily& m, int sheet, const RatVec3& q);

// Rigid-motion degrees of freedom of the family: 3 for planes and spheres,
// 2 for cylinders. Unions inherit the single-sheet value since the ambient
// isometries act on all sheets at once.
int ambient_dof(const SurfaceFamily& m);

// Exactly-on-sheet rational point. Spheres and cylinders use tan-half-angle
// parametrisations so the algebraic identity holds without rounding.
SurfacePoint sample_point(const SurfaceFamily& m, int sheet, Rng& rng);

// Float versions for the numeric path.
double h_value_d(const SurfaceFamily& m, int sheet, const double* q);
void h_gradient_d(const SurfaceFamily& m, int sheet, const double* q, double* grad);

// Characteristic size of the sheet's constraint values, for tolerances.
double h_scale(const SurfaceFamily& m, int sheet);

// Newton projection of a nearby float point onto the sheet. Throws
// NoConvergence when the gradient degenerates (e.g. the sphere center) or the
// iteration fails to reach |h| <= tol * h_scale.
std::array<double, 3> project(const SurfaceFamily& m, int sheet, std::array<double, 3> q,
                              double tol = 1e-12, int max_iter = 50);

// JSON form {"kind": "planes"|"spheres"|"cylinders", "params": ["1","3/2"]}.
SurfaceFamily surface_from_json_text(const std::string& text);
std::string surface_to_json_text(const SurfaceFamily& m);
std::string surface_kind_name(SurfaceKind kind);

} // namespace rigidity

#endif
