#include "gamma2/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "gamma2/curvature.hpp"
#include "gamma2/errors.hpp"
#include "gamma2/json_writer.hpp"
#include "gamma2/rng.hpp"

namespace g2 {

Eigensystem spectral_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    Matrix lap(n, n);
    for (Vertex u = 0; u < n; ++u) {
        lap(u, u) = g.degree(u);
        for (Vertex v : g.neighbors(u)) lap(u, v) = -1.0;
    }
    Eigensystem sys;
    sys.eigen = sym_eigen(lap);
    sys.n = n;
    return sys;
}

SpectralReport spectrum(const Eigensystem& sys, int max_degree) {
    SpectralReport report;
    report.eigenvalues = sys.eigen.values;
    const double zero_tol = 1e-8 * std::max(1, max_degree);
    report.zero_multiplicity = 0;
    report.lambda = 0.0;
    for (double& v : report.eigenvalues) {
        if (std::fabs(v) <= zero_tol) {
            v = 0.0; // classified as the exact kernel of the laplacian
            ++report.zero_multiplicity;
        } else if (report.lambda == 0.0) {
            report.lambda = v;
        }
    }
    return report;
}

SpectralReport spectrum(const Graph& g) {
    return spectrum(spectral_decomposition(g), g.max_degree());
}

std::string spectral_report_json(const SpectralReport& report) {
    JsonWriter w;
    w.begin_object();
    w.key("eigenvalues").begin_array();
    for (double v : report.eigenvalues) w.value(v);
    w.end_array();
    w.field("lambda", report.lambda);
    w.field("components", report.zero_multiplicity);
    w.end_object();
    return w.str();
}

HeatKernel heat_kernel(const Eigensystem& sys, double t) {
    if (t < 0.0) throw InputError("heat_kernel: t must be >= 0");
    const int n = sys.n;
    HeatKernel kernel;
    kernel.t = t;
    kernel.entries = Matrix(n, n);
    // P_t = V diag(exp(-t lambda)) V^T, then symmetrized to kill roundoff skew
    std::vector<double> decay(n);
    for (int k = 0; k < n; ++k) decay[k] = std::exp(-t * sys.eigen.values[k]);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += sys.eigen.vectors(i, k) * decay[k] * sys.eigen.vectors(j, k);
            kernel.entries(i, j) = s;
            kernel.entries(j, i) = s;
        }
    return kernel;
}

HeatKernel heat_kernel(const Graph& g, double t) {
    return heat_kernel(spectral_decomposition(g), t);
}

double dirichlet(const Graph& g, const RealFunction& f, const RealFunction& h) {
    if (f.size() != h.size() || static_cast<int>(f.size()) != g.vertex_count())
        throw InputError("dirichlet: function length mismatch");
    double s = 0.0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) s += (f[u] - f[v]) * (h[u] - h[v]);
    return s;
}

GapCurvatureRecord gap_vs_curvature(const Graph& g) {
    CurvatureReport cur = curvature(g);
    if (cur.ric < -1e-8)
        throw InputError("gap_vs_curvature: theorem hypothesis needs Ric >= 0, got " +
                         std::to_string(cur.ric));
    GapCurvatureRecord record;
    record.ric = cur.ric;
    record.lambda = spectrum(g).lambda;
    record.slack = record.lambda - record.ric;
    return record;
}

SparseGapResult sparse_gap(const Graph& g, double tol) {
    if (tol <= 0.0) throw InputError("sparse_gap: tolerance must be positive");
    if (g.components() != 1)
        throw InputError("sparse_gap: graph must be connected");
    const int n = g.vertex_count();

    auto matvec = [&](const std::vector<double>& x) {
        std::vector<double> y(n);
        for (Vertex u = 0; u < n; ++u) {
            double s = g.degree(u) * x[u];
            for (Vertex v : g.neighbors(u)) s -= x[v];
            y[u] = s;
        }
        return y;
    };

    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> constant(n, inv_sqrt_n);

    // deterministic start, orthogonal to the constant vector
    Rng rng(0x67616d6d6132ULL);
    std::vector<double> v0(n);
    for (double& x : v0) x = rng.sym();
    axpy(-dot(v0, constant), constant, v0);
    double nv = norm2(v0);
    if (nv < 1e-12) {
        v0.assign(n, 0.0);
        v0[0] = 1.0;
        axpy(-dot(v0, constant), constant, v0);
        nv = norm2(v0);
    }
    scale(v0, 1.0 / nv);

    std::vector<std::vector<double>> basis{v0};
    std::vector<double> alpha, beta;

    const int max_steps = std::min(n - 1, 600);
    SparseGapResult out;

    for (int m = 1; m <= max_steps; ++m) {
        const auto& v = basis.back();
        std::vector<double> w = matvec(v);
        double a = dot(w, v);
        alpha.push_back(a);
        axpy(-a, v, w);
        if (basis.size() >= 2) axpy(-beta.back(), basis[basis.size() - 2], w);
        // full reorthogonalization against the constant and all Lanczos vectors
        axpy(-dot(w, constant), constant, w);
        for (const auto& b : basis) axpy(-dot(w, b), b, w);
        double nb = norm2(w);

        // check the current Ritz approximation every few steps
        bool invariant = nb < 1e-13;
        if (m % 5 == 0 || m == max_steps || invariant) {
            Matrix tri(alpha.size(), alpha.size());
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                tri(i, i) = alpha[i];
                if (i + 1 < alpha.size()) {
                    tri(i, i + 1) = beta[i];
                    tri(i + 1, i) = beta[i];
                }
            }
            SymEigen small = sym_eigen(tri);
            double theta = small.values.front();
            std::vector<double> ritz(n, 0.0);
            for (std::size_t i = 0; i < alpha.size(); ++i)
                axpy(small.vectors(i, 0), basis[i], ritz);
            double nr = norm2(ritz);
            if (nr > 0) scale(ritz, 1.0 / nr);
            std::vector<double> res = matvec(ritz);
            axpy(-theta, ritz, res);
            out.lambda = theta;
            out.residual = norm2(res);
            out.iterations = m;
            if (out.residual <= tol * std::max(theta, 1e-12)) return out;
            if (invariant) break;
        }
        if (invariant) break;
        beta.push_back(nb);
        scale(w, 1.0 / nb);
        basis.push_back(std::move(w));
    }
    if (out.residual > tol * std::max(out.lambda, 1e-12))
        throw InternalError("sparse_gap: did not certify within " +
                            std::to_string(max_steps) + " iterations (residual " +
                            std::to_string(out.residual) + ")");
    return out;
}

} // namespace g2
