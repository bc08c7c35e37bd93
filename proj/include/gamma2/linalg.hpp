#pragma once

#include <cstddef>
#include <vector>

namespace g2 {

/// Dense row-major matrix, just enough surface for the solvers here.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::vector<double> apply(const std::vector<double>& x) const;
    double frobenius_norm() const;
    double max_abs() const;
    bool symmetric(double tol) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// Eigendecomposition of a symmetric matrix, eigenvalues ascending.
/// vectors.col(k) (i.e. vectors(i,k)) is the unit eigenvector for values[k].
struct SymEigen {
    std::vector<double> values;
    Matrix vectors;

    std::vector<double> eigenvector(std::size_t k) const;
};

/// Cyclic Jacobi on a symmetric matrix. Throws InternalError if the input is
/// not symmetric to 1e-12*max|a| or if sweeps fail to converge; the result
/// satisfies ||A v - lambda v|| <= 1e-9 * ||A||_F for every pair.
SymEigen sym_eigen(const Matrix& a);

/// Smallest eigenvalue/eigenvector pair from an existing decomposition helper:
/// residual ||A v - lambda v||_2.
double eigen_residual(const Matrix& a, double lambda, const std::vector<double>& v);

// Small vector helpers shared by the solvers and the search oracles.
double dot(const std::vector<double>& x, const std::vector<double>& y);
double norm2(const std::vector<double>& x);
void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y);
void scale(std::vector<double>& x, double alpha);

} // namespace g2
