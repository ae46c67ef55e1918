#pragma once

#include <vector>

namespace tjacobi {

/// Dense column-major matrix. Columns are contiguous so the right-hand
/// plane-transform kernels mix two columns with unit stride.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return data_[static_cast<std::size_t>(c) * rows_ + r]; }
    double operator()(int r, int c) const { return data_[static_cast<std::size_t>(c) * rows_ + r]; }

    double* col(int c) { return data_.data() + static_cast<std::size_t>(c) * rows_; }
    const double* col(int c) const { return data_.data() + static_cast<std::size_t>(c) * rows_; }

    /// Copy of the leading `p` columns.
    Matrix first_cols(int p) const;

    /// Count of entries with |value| > 0. Untouched entries stay exactly
    /// zero under the transform kernels, so this is a structural count.
    long nonzero_count() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Dense symmetric matrix with full storage. All mutators write both
/// triangles, so entries(i,j) == entries(j,i) holds exactly at all times.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n);

    int size() const { return n_; }

    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Writes both (i,j) and (j,i).
    void set(int i, int j, double v) {
        data_[static_cast<std::size_t>(i) * n_ + j] = v;
        data_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    double frobenius_norm() const;

    /// sqrt(sum over i<j of S_ij^2); the classic Jacobi convergence measure.
    double offdiag_norm() const;

    double max_abs() const;

    std::vector<double> diagonal() const;

    SymMatrix negated() const;

    Matrix to_dense() const;

private:
    int n_ = 0;
    std::vector<double> data_;
};

} // namespace tjacobi
