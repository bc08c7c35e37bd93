#include "gamma2/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gamma2/errors.hpp"
#include "gamma2/json_writer.hpp"
#include "gamma2/parallel.hpp"
#include "gamma2/rng.hpp"

namespace g2 {

double QuadraticForm::evaluate(const std::vector<double>& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        s += coeff(i, i) * f[i] * f[i];
        for (std::size_t j = i + 1; j < dim; ++j) s += 2.0 * coeff(i, j) * f[i] * f[j];
    }
    return s;
}

QuadraticForm assemble_gamma2_form_expansion(const VertexBall2& ball) {
    const std::size_t n1 = ball.n1.size();
    const std::size_t n2 = ball.n2.size();
    const std::size_t dim = n1 + n2;
    const int dx = static_cast<int>(n1);

    QuadraticForm q;
    q.dim = dim;
    q.coeff = Matrix(dim, dim);
    q.coords.reserve(dim);
    q.coords.insert(q.coords.end(), ball.n1.begin(), ball.n1.end());
    q.coords.insert(q.coords.end(), ball.n2.begin(), ball.n2.end());

    Matrix& a = q.coeff;

    // (sum_{v~x} f(v))^2
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) a(i, j) += 1.0;

    // sum_{v~x} (4 - d(x) - d(v))/2 * f(v)^2
    for (std::size_t i = 0; i < n1; ++i)
        a(i, i) += 0.5 * (4.0 - dx - ball.deg1[i]);

    // triangle pairs: 2(f(v)-f(w))^2 + (f(v)^2 + f(w)^2)/2
    for (auto [i, j] : ball.edges_n1n1) {
        a(i, i) += 2.5;
        a(j, j) += 2.5;
        a(i, j) += -2.0;
        a(j, i) += -2.0;
    }

    // distance-2 terms: (1/2) (f(u) - 2 f(v))^2 per incidence
    for (auto [i, j] : ball.edges_n1n2) {
        std::size_t u = n1 + static_cast<std::size_t>(j);
        a(u, u) += 0.5;
        a(u, i) += -1.0;
        a(i, u) += -1.0;
        a(i, i) += 2.0;
    }
    return q;
}

QuadraticForm assemble_gamma2_form_definitional(const Graph& g, const VertexBall2& ball) {
    const std::size_t dim = ball.dim();
    QuadraticForm q;
    q.dim = dim;
    q.coeff = Matrix(dim, dim);
    q.coords.reserve(dim);
    q.coords.insert(q.coords.end(), ball.n1.begin(), ball.n1.end());
    q.coords.insert(q.coords.end(), ball.n2.begin(), ball.n2.end());

    RealFunction f(g.vertex_count(), 0.0);
    auto eval = [&]() { return 2.0 * gamma2(g, f, ball.center); };

    std::vector<double> diag(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        f[q.coords[i]] = 1.0;
        diag[i] = eval();
        q.coeff(i, i) = diag[i];
        f[q.coords[i]] = 0.0;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        f[q.coords[i]] = 1.0;
        for (std::size_t j = i + 1; j < dim; ++j) {
            f[q.coords[j]] = 1.0;
            double both = eval();
            f[q.coords[j]] = 0.0;
            double off = 0.5 * (both - diag[i] - diag[j]);
            q.coeff(i, j) = off;
            q.coeff(j, i) = off;
        }
        f[q.coords[i]] = 0.0;
    }
    return q;
}

QuadraticForm assemble_gamma2_form(const Graph& g, const VertexBall2& ball) {
    QuadraticForm q = assemble_gamma2_form_expansion(ball);
    QuadraticForm check = assemble_gamma2_form_definitional(g, ball);
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < q.dim; ++j)
            if (std::fabs(q.coeff(i, j) - check.coeff(i, j)) > 1e-10)
                throw InternalError(
                    "assemble_gamma2_form: expansion and definitional assemblies disagree at "
                    "vertex " + std::to_string(ball.center));
    return q;
}

QuadraticForm reduce_distance2(const QuadraticForm& form, const VertexBall2& ball) {
    const std::size_t n1 = ball.n1.size();
    const std::size_t n2 = ball.n2.size();
    if (form.dim != n1 + n2)
        throw InternalError("reduce_distance2: form does not match ball");

    for (std::size_t a = 0; a < n2; ++a) {
        double d = form.coeff(n1 + a, n1 + a);
        if (std::fabs(d - 0.5 * ball.r[a]) > 1e-9 || d <= 0.0)
            throw InternalError("reduce_distance2: N2 diagonal is not r(u)/2");
        for (std::size_t b = a + 1; b < n2; ++b)
            if (std::fabs(form.coeff(n1 + a, n1 + b)) > 1e-12)
                throw InternalError("reduce_distance2: N2 block not diagonal");
    }

    QuadraticForm out;
    out.dim = n1;
    out.coeff = Matrix(n1, n1);
    out.coords.assign(form.coords.begin(), form.coords.begin() + static_cast<long>(n1));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) out.coeff(i, j) = form.coeff(i, j);

    // Schur complement A - B D^{-1} B^T with diagonal D
    for (std::size_t a = 0; a < n2; ++a) {
        double inv_d = 1.0 / form.coeff(n1 + a, n1 + a);
        for (std::size_t i = 0; i < n1; ++i) {
            double bi = form.coeff(i, n1 + a);
            if (bi == 0.0) continue;
            for (std::size_t j = 0; j < n1; ++j) {
                double bj = form.coeff(j, n1 + a);
                if (bj == 0.0) continue;
                out.coeff(i, j) -= bi * inv_d * bj;
            }
        }
    }
    return out;
}

LocalCurvature local_curvature(const Graph& g, Vertex x) {
    VertexBall2 ball = ball2(g, x);
    QuadraticForm full = assemble_gamma2_form(g, ball);
    QuadraticForm reduced = reduce_distance2(full, ball);

    SymEigen eig = sym_eigen(reduced.coeff);
    double kappa = eig.values.front();
    std::vector<double> v = eig.eigenvector(0);

    double res = eigen_residual(reduced.coeff, kappa, v);
    double scale_ref = std::max(reduced.coeff.frobenius_norm(), 1e-30);
    if (res > 1e-9 * scale_ref)
        throw InternalError("local_curvature: eigensolver residual " + std::to_string(res) +
                            " exceeds tolerance at vertex " + std::to_string(x));

    // extend the witness to N2 via the distance-2 minimizer
    const std::size_t n1 = ball.n1.size();
    std::vector<double> w2(ball.n2.size(), 0.0);
    for (auto [i, j] : ball.edges_n1n2) w2[j] += v[i];
    for (std::size_t j = 0; j < w2.size(); ++j) w2[j] *= 2.0 / ball.r[j];

    // Gamma(f)(x) = 1/2 sum over N1 of f(v)^2  ->  scale so this is 1
    double s = 0.0;
    for (std::size_t i = 0; i < n1; ++i) s += v[i] * v[i];
    double factor = std::sqrt(2.0 / s);
    for (std::size_t i = 0; i < n1; ++i)
        if (std::fabs(v[i]) > 1e-12) {
            if (v[i] < 0) factor = -factor;
            break;
        }

    LocalCurvature out;
    out.kappa = kappa;
    out.support.push_back(x);
    out.support.insert(out.support.end(), ball.n1.begin(), ball.n1.end());
    out.support.insert(out.support.end(), ball.n2.begin(), ball.n2.end());
    out.witness.push_back(0.0);
    for (std::size_t i = 0; i < n1; ++i) out.witness.push_back(v[i] * factor);
    for (double u : w2) out.witness.push_back(u * factor);
    return out;
}

CurvatureReport curvature(const Graph& g, bool interior_only) {
    const int n = g.vertex_count();
    std::vector<Vertex> selected;
    if (interior_only && g.interior().has_value()) {
        selected = *g.interior();
        if (selected.empty())
            throw InputError("curvature: interior mode selected but the graph has no "
                             "interior vertices");
    } else {
        selected.resize(n);
        for (int v = 0; v < n; ++v) selected[v] = v;
    }

    std::vector<LocalCurvature> locals(selected.size());
    parallel_for(selected.size(),
                 [&](std::size_t i) { locals[i] = local_curvature(g, selected[i]); });

    CurvatureReport report;
    report.family_name = g.name();
    report.per_vertex.assign(n, std::nullopt);
    for (std::size_t i = 0; i < selected.size(); ++i)
        report.per_vertex[selected[i]] = locals[i].kappa;

    std::size_t best = 0;
    for (std::size_t i = 1; i < locals.size(); ++i)
        if (locals[i].kappa < locals[best].kappa) best = i;
    report.ric = locals[best].kappa;
    report.witness_vertex = selected[best];
    report.witness_support = locals[best].support;
    report.witness_values = locals[best].witness;
    report.upper_bound = 2.0 + 0.5 * triangle_stats(g).max_per_edge;
    return report;
}

std::string curvature_report_json(const CurvatureReport& report) {
    JsonWriter w;
    w.begin_object();
    w.field("ric", report.ric);
    w.field("upper_bound", report.upper_bound);
    w.key("per_vertex").begin_array();
    for (const auto& k : report.per_vertex) {
        if (k)
            w.value(*k);
        else
            w.null();
    }
    w.end_array();
    w.key("witness").begin_object();
    w.field("vertex", report.witness_vertex);
    w.key("values").begin_object();
    {
        // canonical order: ascending vertex id
        std::vector<std::size_t> order(report.witness_support.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return report.witness_support[a] < report.witness_support[b];
        });
        for (std::size_t i : order)
            w.field(std::to_string(report.witness_support[i]), report.witness_values[i]);
    }
    w.end_object();
    w.end_object();
    w.end_object();
    return w.str();
}

double check_inequality(const Graph& g, Vertex x, const RealFunction& f, double k) {
    return gamma2(g, f, x) - k * gamma(g, f, x);
}

// ---------------------------------------------------------------------------
// oracle: direct search over ball functions with exact rational line search
// ---------------------------------------------------------------------------

namespace {

struct BallEvaluator {
    const Graph& g;
    Vertex x;
    std::vector<Vertex> coords;
    mutable RealFunction f;

    BallEvaluator(const Graph& graph, Vertex center) : g(graph), x(center), f(graph.vertex_count(), 0.0) {
        VertexBall2 ball = ball2(graph, center);
        coords.insert(coords.end(), ball.n1.begin(), ball.n1.end());
        coords.insert(coords.end(), ball.n2.begin(), ball.n2.end());
    }

    void load(const std::vector<double>& z) const {
        for (std::size_t i = 0; i < coords.size(); ++i) f[coords[i]] = z[i];
    }

    double num(const std::vector<double>& z) const {
        load(z);
        return gamma2(g, f, x);
    }
    double den(const std::vector<double>& z) const {
        load(z);
        return gamma(g, f, x);
    }
};

// One-dimensional exact minimization of (a0 + 2 a1 t + a2 t^2)/(b0 + 2 b1 t + b2 t^2)
// for quadratic forms along a line; returns the best t among the stationary
// points of the rational function.
double line_search(double a0, double a1, double a2, double b0, double b1, double b2) {
    // derivative numerator: (a1 + a2 t)(b0 + 2 b1 t + b2 t^2) - (a0 + 2 a1 t + a2 t^2)(b1 + b2 t)
    // expands to a quadratic alpha t^2 + beta t + gamma
    double alpha = a2 * b1 - a1 * b2;
    double beta = a2 * b0 - a0 * b2;
    double gsm = a1 * b0 - a0 * b1;

    auto ratio = [&](double t) {
        double den = b0 + 2.0 * b1 * t + b2 * t * t;
        if (den <= 1e-300) return std::numeric_limits<double>::infinity();
        return (a0 + 2.0 * a1 * t + a2 * t * t) / den;
    };

    double best_t = 0.0;
    double best = ratio(0.0);
    auto consider = [&](double t) {
        if (!std::isfinite(t)) return;
        double v = ratio(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    };
    if (std::fabs(alpha) > 1e-300) {
        double disc = beta * beta - 4.0 * alpha * gsm;
        if (disc >= 0.0) {
            double sq = std::sqrt(disc);
            consider((-beta + sq) / (2.0 * alpha));
            consider((-beta - sq) / (2.0 * alpha));
        }
    } else if (std::fabs(beta) > 1e-300) {
        consider(-gsm / beta);
    }
    return best_t;
}

} // namespace

double oracle_curvature(const Graph& g, Vertex x, int trials, std::uint64_t seed) {
    BallEvaluator ev(g, x);
    const std::size_t dim = ev.coords.size();
    if (dim == 0) throw InputError("oracle_curvature: empty ball");

    Rng base(seed);
    double best = std::numeric_limits<double>::infinity();

    // cached unit-direction form values for the gradient estimates
    std::vector<double> num_e(dim), den_e(dim), e(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i] = 1.0;
        num_e[i] = ev.num(e);
        den_e[i] = ev.den(e);
        e[i] = 0.0;
    }

    auto step_along = [&](std::vector<double>& z, const std::vector<double>& dir,
                          double n0, double d0) {
        std::vector<double> zp = z;
        for (std::size_t i = 0; i < dim; ++i) zp[i] += dir[i];
        double nd = ev.num(dir), np = ev.num(zp);
        double dd = ev.den(dir), dp = ev.den(zp);
        double n1 = 0.5 * (np - n0 - nd);
        double d1 = 0.5 * (dp - d0 - dd);
        double t = line_search(n0, n1, nd, d0, d1, dd);
        if (t != 0.0)
            for (std::size_t i = 0; i < dim; ++i) z[i] += t * dir[i];
    };

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = base.fork(static_cast<std::uint64_t>(trial));
        std::vector<double> z(dim);
        for (double& v : z) v = rng.sym();
        if (ev.den(z) < 1e-12) continue;

        const int iters = 60 + 10 * static_cast<int>(dim);
        double prev = std::numeric_limits<double>::infinity();
        int stalled = 0;
        std::vector<double> z_prev = z;
        for (int it = 0; it < iters; ++it) {
            double n0 = ev.num(z), d0 = ev.den(z);
            if (d0 < 1e-14) break;
            double q = n0 / d0;
            if (q < best) best = q;

            // steepest descent direction of the quotient: components of
            // 2(Az - q Bz) recovered from bilinear differences
            std::vector<double> grad(dim);
            double gnorm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                e[i] = 1.0;
                std::vector<double> zp = z;
                zp[i] += 1.0;
                double az_i = 0.5 * (ev.num(zp) - n0 - num_e[i]);
                double bz_i = 0.5 * (ev.den(zp) - d0 - den_e[i]);
                e[i] = 0.0;
                grad[i] = 2.0 * (az_i - q * bz_i) / d0;
                gnorm += grad[i] * grad[i];
            }
            std::vector<double> before = z;
            if (gnorm > 1e-28) step_along(z, grad, n0, d0);

            // momentum line search accelerates the plain gradient descent
            std::vector<double> momentum(dim);
            double mnorm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                momentum[i] = before[i] - z_prev[i];
                mnorm += momentum[i] * momentum[i];
            }
            if (mnorm > 1e-28) step_along(z, momentum, ev.num(z), ev.den(z));
            z_prev = before;

            // occasional random kick to escape flat regions early on
            if (it % 7 == 3 && it < iters / 2) {
                std::vector<double> dir(dim);
                for (double& v : dir) v = rng.sym();
                step_along(z, dir, ev.num(z), ev.den(z));
            }

            // keep the scale sane (the quotient is scale invariant)
            double m = 0.0;
            for (double v : z) m = std::max(m, std::fabs(v));
            if (m > 1e8 || (m > 0 && m < 1e-8)) {
                for (double& v : z) v /= m;
                for (double& v : z_prev) v /= m;
            }

            double d1 = ev.den(z);
            if (d1 < 1e-14) break;
            double val = ev.num(z) / d1;
            if (val < best) best = val;
            if (prev - val < 1e-16 * std::max(1.0, std::fabs(val))) {
                if (++stalled >= 4) break;
            } else {
                stalled = 0;
            }
            prev = val;
        }
    }
    if (!std::isfinite(best))
        throw InternalError("oracle_curvature: no start produced Gamma > 0");
    return best;
}

} // namespace g2
