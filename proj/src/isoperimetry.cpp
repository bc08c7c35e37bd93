#include "gamma2/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "gamma2/errors.hpp"
#include "gamma2/families.hpp"
#include "gamma2/json_writer.hpp"
#include "gamma2/parallel.hpp"
#include "gamma2/rng.hpp"
#include "gamma2/spectral.hpp"

namespace g2 {

std::int64_t boundary_size(const Graph& g, const std::vector<Vertex>& a) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : a) {
        if (v < 0 || v >= g.vertex_count())
            throw InputError("boundary_size: vertex " + std::to_string(v) + " out of range");
        if (in[v]) throw InputError("boundary_size: duplicate vertex " + std::to_string(v));
        in[v] = 1;
    }
    std::int64_t cut = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (!in[u]) continue;
        for (Vertex v : g.neighbors(u))
            if (!in[v]) ++cut;
    }
    return cut;
}

namespace {

struct Candidate {
    std::int64_t boundary = -1;
    std::int64_t size = 0;
    std::vector<Vertex> set;

    bool valid() const { return boundary >= 0; }

    // exact ratio comparison, ties to the lexicographically least vertex set
    bool better_than(const Candidate& o) const {
        if (!o.valid()) return valid();
        if (!valid()) return false;
        std::int64_t lhs = boundary * o.size;
        std::int64_t rhs = o.boundary * size;
        if (lhs != rhs) return lhs < rhs;
        return std::lexicographical_compare(set.begin(), set.end(), o.set.begin(), o.set.end());
    }
};

std::vector<Vertex> mask_to_set(std::uint32_t mask, int n, bool complement) {
    // bit b of mask = vertex b+1 in A; vertex 0 always in A
    std::vector<Vertex> out;
    for (int v = 0; v < n; ++v) {
        bool in_a = (v == 0) || (mask & (1u << (v - 1)));
        if (in_a != complement) out.push_back(v);
    }
    return out;
}

} // namespace

IsoperimetryReport cheeger_exact(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap || n > 31)
        throw CapError("cheeger_exact: n=" + std::to_string(n) + " exceeds cap " +
                       std::to_string(std::min(cap, 31)) +
                       "; use the sweep method for an upper bound");
    if (n < 2) throw InputError("cheeger_exact: need at least 2 vertices");

    const int free_bits = n - 1;
    const std::uint64_t total = 1ull << free_bits;

    // fixed block split keeps the merge order (and so tie-breaking) identical
    // for every thread count
    const int block_bits = std::min(free_bits, 6);
    const std::uint64_t blocks = 1ull << block_bits;
    const std::uint64_t per_block = total >> block_bits;

    std::vector<Candidate> best_of(blocks);

    parallel_for(static_cast<std::size_t>(blocks), [&](std::size_t blk) {
        const std::uint64_t begin = blk * per_block;
        const std::uint64_t end = begin + per_block;

        // state for A = {0} + gray(begin)
        std::uint32_t mask = static_cast<std::uint32_t>(begin ^ (begin >> 1));
        std::vector<char> in(n, 0);
        in[0] = 1;
        for (int b = 0; b < free_bits; ++b)
            if (mask & (1u << b)) in[b + 1] = 1;
        std::int64_t size = 1 + __builtin_popcount(mask);
        std::int64_t cut = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (!in[u]) continue;
            for (Vertex v : g.neighbors(u))
                if (!in[v]) ++cut;
        }

        Candidate best;
        auto offer = [&](std::int64_t setsize, bool complement) {
            Candidate cand;
            cand.boundary = cut;
            cand.size = setsize;
            if (best.valid()) {
                // compare ratios before materializing the set
                std::int64_t lhs = cand.boundary * best.size;
                std::int64_t rhs = best.boundary * cand.size;
                if (lhs > rhs) return;
                cand.set = mask_to_set(mask, n, complement);
                if (cand.better_than(best)) best = std::move(cand);
            } else {
                cand.set = mask_to_set(mask, n, complement);
                best = std::move(cand);
            }
        };
        auto consider = [&]() {
            if (size == n) return;              // A = V has empty complement
            if (2 * size <= n) offer(size, false);
            if (2 * (n - size) <= n) offer(n - size, true);
        };

        consider();
        for (std::uint64_t i = begin + 1; i < end; ++i) {
            std::uint32_t gray = static_cast<std::uint32_t>(i ^ (i >> 1));
            int bit = __builtin_ctz(gray ^ mask);
            Vertex v = bit + 1;
            int inside = 0;
            for (Vertex u : g.neighbors(v)) inside += in[u];
            if (in[v]) {
                cut -= g.degree(v) - 2 * inside;
                in[v] = 0;
                --size;
            } else {
                cut += g.degree(v) - 2 * inside;
                in[v] = 1;
                ++size;
            }
            mask = gray;
            consider();
        }
        best_of[blk] = std::move(best);
    });

    Candidate best;
    for (auto& c : best_of)
        if (c.better_than(best)) best = std::move(c);
    if (!best.valid()) throw InternalError("cheeger_exact: no candidate subset");

    IsoperimetryReport report;
    report.h = static_cast<double>(best.boundary) / static_cast<double>(best.size);
    report.boundary = best.boundary;
    report.argmin_set = std::move(best.set);
    report.method = "exact";
    return report;
}

IsoperimetryReport cheeger_sweep(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw InputError("cheeger_sweep: need at least 2 vertices");

    // Fiedler vector: dense decomposition for small graphs, Lanczos Ritz
    // vector otherwise.
    std::vector<double> fiedler(n);
    if (n <= 400) {
        Eigensystem sys = spectral_decomposition(g);
        SpectralReport rep = spectrum(sys, g.max_degree());
        int idx = rep.zero_multiplicity; // first non-zero eigenvalue column
        if (idx >= n) idx = n - 1;
        for (int i = 0; i < n; ++i) fiedler[i] = sys.eigen.vectors(i, idx);
    } else {
        // inverse-free: approximate the lambda eigenvector by damped power
        // iteration on (c I - L) restricted to the complement of constants
        auto matvec = [&](const std::vector<double>& x) {
            std::vector<double> y(n);
            for (Vertex u = 0; u < n; ++u) {
                double s = g.degree(u) * x[u];
                for (Vertex v : g.neighbors(u)) s -= x[v];
                y[u] = s;
            }
            return y;
        };
        double c = 2.0 * g.max_degree();
        Rng rng(0x66696564ULL);
        for (double& x : fiedler) x = rng.sym();
        std::vector<double> ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
        for (int it = 0; it < 600; ++it) {
            axpy(-dot(fiedler, ones), ones, fiedler);
            std::vector<double> lx = matvec(fiedler);
            for (int i = 0; i < n; ++i) fiedler[i] = c * fiedler[i] - lx[i];
            double nv = norm2(fiedler);
            if (nv == 0.0) break;
            scale(fiedler, 1.0 / nv);
        }
    }

    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (fiedler[a] != fiedler[b]) return fiedler[a] < fiedler[b];
        return a < b;
    });

    std::vector<char> in(n, 0);
    std::int64_t cut = 0;
    Candidate best;
    for (int k = 0; k + 1 < n; ++k) {
        Vertex v = order[k];
        int inside = 0;
        for (Vertex u : g.neighbors(v)) inside += in[u];
        cut += g.degree(v) - 2 * inside;
        in[v] = 1;
        std::int64_t size = k + 1;

        auto offer = [&](bool complement) {
            Candidate cand;
            cand.boundary = cut;
            cand.size = complement ? n - size : size;
            cand.set.reserve(static_cast<std::size_t>(cand.size));
            for (int u = 0; u < n; ++u)
                if (static_cast<bool>(in[u]) != complement) cand.set.push_back(u);
            if (cand.better_than(best)) best = std::move(cand);
        };
        if (2 * size <= n) offer(false);
        if (2 * (n - size) <= n) offer(true);
    }

    IsoperimetryReport report;
    report.h = static_cast<double>(best.boundary) / static_cast<double>(best.size);
    report.boundary = best.boundary;
    report.argmin_set = std::move(best.set);
    report.method = "sweep";
    return report;
}

IsoperimetryReport sn_test_set(int n) {
    if (n < 3) throw InputError("sn_test_set: n must be >= 3");
    LabeledCayley cayley = sn_special_labeled(n);
    const Graph& g = cayley.graph;

    auto cyc_dist = [n](int a, int b) {
        int d = std::abs(a - b);
        return std::min(d, n - d);
    };
    const int threshold = n / 4;

    std::vector<char> in(g.vertex_count(), 0);
    std::vector<Vertex> set;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& phi = cayley.labels[v];
        if (cyc_dist(phi[0], phi[1]) <= threshold) {
            in[v] = 1;
            set.push_back(v);
        }
    }
    if (set.empty()) throw InternalError("sn_test_set: empty test set");

    // the cycle generators must fix A, and every boundary edge must be a
    // (01)-transposition edge
    std::set<std::vector<int>> members;
    for (Vertex v : set) members.insert(cayley.labels[v]);
    auto left_mul = [n](const std::vector<int>& sigma, const std::vector<int>& phi) {
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[i] = sigma[phi[i]];
        return out;
    };
    std::vector<int> cyc(n), swap01(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    for (int i = 0; i < n; ++i) swap01[i] = i;
    std::swap(swap01[0], swap01[1]);
    std::vector<int> cyc_inv(n);
    for (int i = 0; i < n; ++i) cyc_inv[cyc[i]] = i;

    std::int64_t cut = 0;
    for (Vertex v : set) {
        const auto& phi = cayley.labels[v];
        if (!members.count(left_mul(cyc, phi)) || !members.count(left_mul(cyc_inv, phi)))
            throw InternalError("sn_test_set: cycle generator does not fix A");
        for (Vertex u : g.neighbors(v)) {
            if (in[u]) continue;
            ++cut;
            if (cayley.labels[u] != left_mul(swap01, phi))
                throw InternalError("sn_test_set: boundary edge is not a (01) edge");
        }
    }

    IsoperimetryReport report;
    report.h = static_cast<double>(cut) / static_cast<double>(set.size());
    report.boundary = cut;
    report.argmin_set = std::move(set);
    report.method = "testset";
    return report;
}

// ---------------------------------------------------------------------------
// log-Sobolev estimator
// ---------------------------------------------------------------------------

namespace {

constexpr double kPositivityFloor = 1e-12;
// Candidates are normalized to mean(f^2) = 1, so entropy is absolute scale;
// below this floor the ratio is cancellation noise, not signal.
constexpr double kEntropyFloor = 1e-9;

double entropy_u(const RealFunction& sq) {
    const double n = static_cast<double>(sq.size());
    double mean_glogg = 0.0, mean_g = 0.0;
    for (double v : sq) {
        mean_glogg += v * std::log(v);
        mean_g += v;
    }
    mean_glogg /= n;
    mean_g /= n;
    return mean_glogg - mean_g * std::log(mean_g);
}

double lsi_ratio(const Graph& g, const RealFunction& f, double* ent_out = nullptr) {
    const double n = static_cast<double>(g.vertex_count());
    double dir = 0.0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) dir += (f[u] - f[v]) * (f[u] - f[v]);
    dir /= n;

    RealFunction sq(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) sq[i] = f[i] * f[i];
    double ent = entropy_u(sq);
    if (ent_out) *ent_out = ent;
    if (ent < kEntropyFloor) return std::numeric_limits<double>::infinity();
    return dir / ent;
}

void clamp_positive(RealFunction& f) {
    for (double& v : f) v = std::max(v, kPositivityFloor);
}

void normalize_l2(RealFunction& f) {
    double s = 0.0;
    for (double v : f) s += v * v;
    s = std::sqrt(s / static_cast<double>(f.size()));
    if (s > 0)
        for (double& v : f) v /= s;
}

// gradient descent with backtracking on the scale-invariant ratio
double descend(const Graph& g, RealFunction f, RealFunction* winner) {
    const int n = g.vertex_count();
    clamp_positive(f);
    normalize_l2(f);
    double value = lsi_ratio(g, f);
    if (!std::isfinite(value)) return value;

    double step = 0.5;
    for (int it = 0; it < 220; ++it) {
        RealFunction lap = laplacian_apply(g, f);
        double mean_sq = 0.0;
        for (double v : f) mean_sq += v * v;
        mean_sq /= n;

        RealFunction sq(f.size());
        for (int i = 0; i < n; ++i) sq[i] = f[i] * f[i];
        double ent = entropy_u(sq);
        if (ent < kEntropyFloor) break;
        double dir = 0.0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : g.neighbors(u))
                if (u < v) dir += (f[u] - f[v]) * (f[u] - f[v]);
        dir /= n;

        // d/df of E_u is (2/n)(-Delta f); of Ent_u(f^2) is (2 f / n) log(f^2 / mean(f^2))
        RealFunction grad(n);
        double gnorm = 0.0;
        for (int i = 0; i < n; ++i) {
            double de = -2.0 * lap[i] / n;
            double dent = 2.0 * f[i] / n * std::log(std::max(f[i] * f[i], kPositivityFloor) / mean_sq);
            grad[i] = (de * ent - dir * dent) / (ent * ent);
            gnorm += grad[i] * grad[i];
        }
        if (gnorm < 1e-24) break;

        bool improved = false;
        for (int bt = 0; bt < 25; ++bt) {
            RealFunction trial = f;
            for (int i = 0; i < n; ++i) trial[i] -= step * grad[i];
            clamp_positive(trial);
            normalize_l2(trial);
            double tv = lsi_ratio(g, trial);
            if (tv < value - 1e-15) {
                f = std::move(trial);
                value = tv;
                improved = true;
                step *= 1.3;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    if (winner) *winner = f;
    return value;
}

} // namespace

LogSobolevEstimate logsobolev_estimate(const Graph& g, int trials, std::uint64_t seed) {
    if (trials < 0) throw InputError("logsobolev_estimate: trials must be >= 0");
    const int n = g.vertex_count();
    if (n < 2) throw InputError("logsobolev_estimate: need at least 2 vertices");

    LogSobolevEstimate out;
    out.trials = trials;
    out.convention_note =
        "entropy-form constant; the hypercontractive convention may differ by a factor of 2";

    double best = std::numeric_limits<double>::infinity();
    RealFunction best_f;

    auto try_start = [&](RealFunction f) {
        RealFunction w;
        double v = descend(g, std::move(f), &w);
        if (v < best) {
            best = v;
            best_f = std::move(w);
        }
    };

    // deterministic starts: per-vertex indicator smoothings
    for (int v = 0; v < n; ++v)
        for (double eps : {0.0, 0.05}) {
            RealFunction f(n, eps);
            f[v] = 1.0;
            try_start(std::move(f));
        }
    // Fiedler exponentials
    {
        Eigensystem sys = spectral_decomposition(g);
        SpectralReport rep = spectrum(sys, g.max_degree());
        int idx = std::min(rep.zero_multiplicity, n - 1);
        for (double s : {-2.0, -1.0, 1.0, 2.0}) {
            RealFunction f(n);
            for (int i = 0; i < n; ++i) f[i] = std::exp(s * sys.eigen.vectors(i, idx));
            try_start(std::move(f));
        }
    }
    // seeded random restarts; forked streams make the candidate set grow
    // monotonically with the trial count
    Rng base(seed);
    for (int t = 0; t < trials; ++t) {
        Rng rng = base.fork(static_cast<std::uint64_t>(t));
        RealFunction f(n);
        for (double& v : f) v = std::exp(rng.sym());
        try_start(std::move(f));
    }

    if (!std::isfinite(best))
        throw InternalError("logsobolev_estimate: every start degenerated to a constant");
    out.rho_hat = lsi_ratio(g, best_f);
    out.best_witness = std::move(best_f);
    return out;
}

std::string isoperimetry_report_json(const IsoperimetryReport& report) {
    JsonWriter w;
    w.begin_object();
    w.field("h", report.h);
    w.key("set").begin_array();
    for (Vertex v : report.argmin_set) w.value(v);
    w.end_array();
    w.field("boundary", static_cast<long long>(report.boundary));
    w.field("method", report.method);
    w.end_object();
    return w.str();
}

} // namespace g2
