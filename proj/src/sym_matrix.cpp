#include "tjacobi/sym_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace tjacobi {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::first_cols(int p) const {
    if (p < 0 || p > cols_) throw std::invalid_argument("Matrix::first_cols: bad column count");
    Matrix out(rows_, p);
    for (int c = 0; c < p; ++c) {
        const double* src = col(c);
        double* dst = out.col(c);
        for (int r = 0; r < rows_; ++r) dst[r] = src[r];
    }
    return out;
}

long Matrix::nonzero_count() const {
    long nnz = 0;
    for (double v : data_)
        if (v != 0.0) ++nnz;
    return nnz;
}

SymMatrix::SymMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 0) throw std::invalid_argument("SymMatrix: negative dimension");
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
}

double SymMatrix::offdiag_norm() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const double v = (*this)(i, j);
            sum += v * v;
        }
    return std::sqrt(sum);
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> SymMatrix::diagonal() const {
    std::vector<double> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
}

SymMatrix SymMatrix::negated() const {
    SymMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) out.set(i, j, -(*this)(i, j));
    return out;
}

Matrix SymMatrix::to_dense() const {
    Matrix out(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

} // namespace tjacobi
