#include <doctest.h>

#include <cmath>

#include "gamma2/linalg.hpp"
#include "gamma2/rng.hpp"

using namespace g2;

TEST_CASE("jacobi diagonalizes a fixed 2x2") {
    Matrix a(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 2.0;
    a(0, 1) = a(1, 0) = -1.0;
    SymEigen e = sym_eigen(a);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("jacobi eigenpairs satisfy the residual contract on random matrices") {
    Rng rng(7);
    for (int n : {1, 2, 5, 13, 40}) {
        Matrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = rng.sym() * 3.0;
                a(i, j) = v;
                a(j, i) = v;
            }
        SymEigen e = sym_eigen(a);
        double fro = a.frobenius_norm();
        for (int k = 0; k < n; ++k) {
            auto v = e.eigenvector(k);
            CHECK(eigen_residual(a, e.values[k], v) <= 1e-9 * std::max(fro, 1.0));
            CHECK(std::fabs(norm2(v) - 1.0) <= 1e-10);
            if (k > 0) CHECK(e.values[k] >= e.values[k - 1] - 1e-12);
        }
        // trace is preserved
        double trace = 0.0, sum = 0.0;
        for (int i = 0; i < n; ++i) trace += a(i, i);
        for (double v : e.values) sum += v;
        CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
    }
}

TEST_CASE("eigenvectors are orthonormal") {
    Rng rng(11);
    int n = 9;
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = rng.sym();
            a(i, j) = v;
            a(j, i) = v;
        }
    SymEigen e = sym_eigen(a);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            double d = dot(e.eigenvector(p), e.eigenvector(q));
            CHECK(std::fabs(d - (p == q ? 1.0 : 0.0)) <= 1e-10);
        }
}
