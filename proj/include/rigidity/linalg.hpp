#ifndef RIGIDITY_LINALG_HPP
#define RIGIDITY_LINALG_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rigidity/rational.hpp"

namespace rigidity {

// Dense matrix of exact rationals, row major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

// Exact rank by fraction-free (Bareiss) elimination: rows are scaled to
// integers, then eliminated with exact divisions only.
int rank_exact(const RatMatrix& m);

// Basis of the right kernel, via Gauss-Jordan over the rationals. Vectors of
// length cols(); one per free column, unit in that coordinate.
std::vector<std::vector<Rat>> nullspace_exact(const RatMatrix& m);

Eigen::MatrixXd to_float(const RatMatrix& m);

// Singular values above tol_rel times the largest one.
int rank_float(const Eigen::MatrixXd& m, double tol_rel = 1e-9);

// CSV with one row per matrix row, entries as exact rational strings.
// Optional header/label columns supplied by the caller.
std::string matrix_to_csv(const RatMatrix& m, const std::vector<std::string>& row_labels = {},
                          const std::vector<std::string>& col_labels = {});

} // namespace rigidity

#endif
