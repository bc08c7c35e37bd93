#pragma once

#include <string>
#include <vector>

#include "gamma2/graph.hpp"
#include "gamma2/linalg.hpp"

namespace g2 {

struct SpectralReport {
    std::vector<double> eigenvalues; // of -Delta, ascending
    double lambda = 0.0;             // least nonzero eigenvalue
    int zero_multiplicity = 0;       // numerically-zero count = #components
};

/// Full eigendecomposition of the Laplacian L = -Delta (PSD), reused by the
/// heat kernel so repeated times don't re-factorize.
struct Eigensystem {
    SymEigen eigen;   // of L, ascending
    int n = 0;
};

Eigensystem spectral_decomposition(const Graph& g);

SpectralReport spectrum(const Graph& g);
SpectralReport spectrum(const Eigensystem& sys, int max_degree);

std::string spectral_report_json(const SpectralReport& report);

struct HeatKernel {
    double t = 0.0;
    Matrix entries; // n x n, symmetric, doubly stochastic

    std::vector<double> apply(const std::vector<double>& f) const { return entries.apply(f); }
};

/// P_t = exp(t * Delta), computed via the spectral decomposition of -Delta.
HeatKernel heat_kernel(const Graph& g, double t);
HeatKernel heat_kernel(const Eigensystem& sys, double t);

/// Dirichlet form E(f,h) = sum over edges (f(u)-f(v))(h(u)-h(v)); equals
/// sum_x f(x) (-Delta h)(x).
double dirichlet(const Graph& g, const RealFunction& f, const RealFunction& h);

struct GapCurvatureRecord {
    double lambda = 0.0;
    double ric = 0.0;
    double slack = 0.0; // lambda - ric
};

/// Theorem: a graph with Ric >= K >= 0 has lambda >= K. Requires ric >= 0
/// (up to 1e-8); throws InputError when the hypothesis fails.
GapCurvatureRecord gap_vs_curvature(const Graph& g);

struct SparseGapResult {
    double lambda = 0.0;
    double residual = 0.0; // ||L v - lambda v|| certificate
    int iterations = 0;
};

/// Iterative spectral-gap estimate: Lanczos on L with the constant vector
/// deflated and full reorthogonalization, certified by the Ritz residual
/// (residual <= tol * max(lambda, 1e-12)). Requires a connected graph.
SparseGapResult sparse_gap(const Graph& g, double tol);

} // namespace g2
