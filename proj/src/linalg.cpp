#include "gamma2/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gamma2/errors.hpp"

namespace g2 {

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        const double* row = a_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

bool Matrix::symmetric(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

std::vector<double> SymEigen::eigenvector(std::size_t k) const {
    std::vector<double> v(vectors.rows());
    for (std::size_t i = 0; i < vectors.rows(); ++i) v[i] = vectors(i, k);
    return v;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(std::vector<double>& x, double alpha) {
    for (double& v : x) v *= alpha;
}

double eigen_residual(const Matrix& a, double lambda, const std::vector<double>& v) {
    std::vector<double> r = a.apply(v);
    axpy(-lambda, v, r);
    return norm2(r);
}

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

} // namespace

SymEigen sym_eigen(const Matrix& input) {
    const std::size_t n = input.rows();
    if (n != input.cols()) throw InternalError("sym_eigen: matrix not square");
    if (!input.symmetric(1e-12 * std::max(1.0, input.max_abs())))
        throw InternalError("sym_eigen: matrix not symmetric");

    Matrix a = input;
    Matrix v = Matrix::identity(n);
    if (n == 0) return {{}, v};

    const double fro = std::max(a.frobenius_norm(), 1e-300);
    const double target = 1e-14 * fro;
    const int max_sweeps = 64;

    int sweep = 0;
    while (offdiag_norm(a) > target && sweep < max_sweeps) {
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                double app = a(p, p), aqq = a(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                // stable tan of the half rotation
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (offdiag_norm(a) > 1e-10 * fro)
        throw InternalError("sym_eigen: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

} // namespace g2
