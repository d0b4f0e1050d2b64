#ifndef RIGIDITY_FLEXES_HPP
#define RIGIDITY_FLEXES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rigidity/analysis.hpp"

namespace rigidity {

// Discretised continuous flex: framework vectors along a path through the
// solution space, with the worst constraint drift observed anywhere on it.
struct FlexPath {
    std::vector<Eigen::VectorXd> samples; // each of length 3|V|
    double step_size = 0.0;
    double max_edge_error = 0.0;    // |edge length - initial length|
    double max_surface_error = 0.0; // |h|
};

// Euler predictor / Newton corrector trace of a nontrivial flex. The
// direction is the kernel vector of the relative rigidity matrix with the
// largest component orthogonal to the rigid-motion subspace; its sign follows
// the sign of direction_seed. Throws NoNontrivialFlex when the kernel holds
// nothing beyond rigid motions, CorrectionDiverged when Newton correction
// fails even after halving the step six times.
FlexPath trace_flex(const Framework& f, int steps, double step_size,
                    std::int64_t direction_seed);

// Non-edge vertex pair whose distance moves by more than 1e-6 along the path
// (the pair of largest drift), with that drift. nullopt when every non-edge
// distance is preserved, which certifies nothing moved beyond a rigid motion.
std::optional<std::pair<Edge, double>> noncongruence_witness(const FlexPath& path,
                                                             const Framework& f);

// CSV: step,vertex,x,y,z.
std::string flexpath_to_csv(const FlexPath& path, int vertex_count);
std::string flexpath_to_json_text(const FlexPath& path, int vertex_count);

} // namespace rigidity

#endif
