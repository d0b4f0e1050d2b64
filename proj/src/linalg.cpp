#include "rigidity/linalg.hpp"

#include <sstream>

namespace rigidity {

int rank_exact(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row; scaling does not change the rank.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (int c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                               m.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < cols; ++c) {
            const Rat& q = m.at(r, c);
            a[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }

    // Bareiss elimination; every division is exact (entries stay minors of
    // the integer matrix).
    int rank = 0;
    mpz_class prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][j] * a[rank][c] - a[r][c] * a[rank][j];
                mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> nullspace_exact(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);

    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[row], a[pivot]);
        const Rat inv = a[row][c];
        for (int j = c; j < cols; ++j) a[row][j] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0) continue;
            const Rat factor = a[r][c];
            for (int j = c; j < cols; ++j) a[r][j] -= factor * a[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }

    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> vec(cols, Rat(0));
        vec[c] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) vec[pivot_col[r]] = -a[r][c];
        basis.push_back(std::move(vec));
    }
    return basis;
}

Eigen::MatrixXd to_float(const RatMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = to_double(m.at(r, c));
    return out;
}

int rank_float(const Eigen::MatrixXd& m, double tol_rel) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma(i) > tol_rel * sigma(0)) ++rank;
    return rank;
}

std::string matrix_to_csv(const RatMatrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels) {
    std::ostringstream out;
    const bool labeled_rows = !row_labels.empty();
    if (!col_labels.empty()) {
        if (labeled_rows) out << "row";
        for (const auto& label : col_labels) out << (labeled_rows || &label != &col_labels[0] ? "," : "") << label;
        out << "\n";
    }
    for (int r = 0; r < m.rows(); ++r) {
        if (labeled_rows) out << row_labels[r];
        for (int c = 0; c < m.cols(); ++c) {
            if (labeled_rows || c > 0) out << ",";
            out << rational_to_string(m.at(r, c));
        }
        out << "\n";
    }
    return out.str();
}

} // namespace rigidity
