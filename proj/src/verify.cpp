#include "gamma2/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gamma2/curvature.hpp"
#include "gamma2/errors.hpp"
#include "gamma2/families.hpp"
#include "gamma2/isoperimetry.hpp"
#include "gamma2/json_writer.hpp"
#include "gamma2/parallel.hpp"
#include "gamma2/rng.hpp"

namespace g2 {

namespace {

constexpr double kHeatTol = 1e-8;      // pointwise heat-kernel slacks
constexpr double kSubsetTol = 1e-9;    // integer-vs-float subset slacks, relative
constexpr double kBuserTol = 1e-9;
constexpr double kGapTol = 1e-8;
constexpr double kRicUpperTol = 1e-8;

double relative_tol(double rhs, double tol) { return tol * std::max(1.0, std::fabs(rhs)); }

RealFunction gamma_field(const Graph& g, const RealFunction& f) {
    RealFunction out(f.size());
    for (Vertex x = 0; x < g.vertex_count(); ++x) out[x] = gamma(g, f, x);
    return out;
}

} // namespace

int VerificationReport::failed_required() const {
    int bad = 0;
    for (const auto& r : records)
        if (r.required && !r.pass) ++bad;
    return bad;
}

double heat_variance_coefficient(double k, double t) {
    if (std::fabs(k) < 1e-12) return 2.0 * t;
    return std::expm1(2.0 * k * t) / k;
}

CheckRecord check_buser_global(const Graph& g, double lambda, double h_exact) {
    CheckRecord r;
    r.name = "buser.lambda_le_16h2";
    r.instance = g.name();
    r.lhs = 16.0 * h_exact * h_exact;
    r.rhs = lambda;
    r.slack = r.lhs - r.rhs;
    r.gate(kBuserTol);
    return r;
}

CheckRecord check_cheeger_floor(const Graph& g, double lambda, double h_exact) {
    CheckRecord r;
    r.name = "buser.h_ge_sqrt_lambda_over_4";
    r.instance = g.name();
    r.lhs = h_exact;
    r.rhs = 0.25 * std::sqrt(std::max(lambda, 0.0));
    r.slack = r.lhs - r.rhs;
    r.gate(kBuserTol);
    return r;
}

std::vector<CheckRecord> check_subset_iso(const Graph& g, double k, double lambda) {
    const int n = g.vertex_count();
    if (n > 14) throw CapError("check_subset_iso: 2^n enumeration capped at n=14");

    double rate = std::sqrt(std::max(lambda, 0.0));
    if (k < -1e-12) rate = std::min(rate, lambda / std::sqrt(2.0 * std::fabs(k)));
    else if (k > 1e-12) rate = std::min(rate, lambda / std::sqrt(2.0 * k));
    // K numerically zero: the lambda/sqrt(2|K|) branch is dropped

    std::vector<CheckRecord> out;
    out.reserve(1u << n);
    std::vector<Vertex> set;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        set.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) set.push_back(v);
        double cut = static_cast<double>(boundary_size(g, set));
        double a = static_cast<double>(set.size());
        CheckRecord r;
        r.name = "subset_iso";
        r.instance = g.name() + "/|A|=" + std::to_string(set.size()) + "/mask=" +
                     std::to_string(mask);
        r.lhs = cut;
        r.rhs = 0.5 * rate * a * (1.0 - a / n);
        r.slack = r.lhs - r.rhs;
        r.gate(relative_tol(r.rhs, kSubsetTol));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckRecord> check_lsi_iso(const Graph& g, double k, double rho_hat) {
    const int n = g.vertex_count();
    if (n > 14) throw CapError("check_lsi_iso: 2^n enumeration capped at n=14");

    const double rho = 0.5 * rho_hat; // documented estimator safety factor
    double rate = std::sqrt(std::max(rho, 0.0));
    if (std::fabs(k) > 1e-12) rate = std::min(rate, rho / std::sqrt(2.0 * std::fabs(k)));

    std::vector<CheckRecord> out;
    std::vector<Vertex> set;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (2 * size > n) continue;
        set.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) set.push_back(v);
        double cut = static_cast<double>(boundary_size(g, set));
        double a = static_cast<double>(size);
        double logr = std::log(static_cast<double>(n) / a);

        CheckRecord proof;
        proof.name = "lsi_iso.proof_form";
        proof.instance = g.name() + "/mask=" + std::to_string(mask);
        proof.lhs = cut;
        proof.rhs = (1.0 / 16.0) * rate * a * std::sqrt(logr);
        proof.slack = proof.lhs - proof.rhs;
        proof.gate(relative_tol(proof.rhs, kSubsetTol));
        out.push_back(std::move(proof));

        CheckRecord stmt;
        stmt.name = "lsi_iso.statement_form";
        stmt.instance = g.name() + "/mask=" + std::to_string(mask);
        stmt.lhs = cut;
        stmt.rhs = (1.0 / 16.0) * rate * a * logr;
        stmt.slack = stmt.lhs - stmt.rhs;
        stmt.gate(relative_tol(stmt.rhs, kSubsetTol));
        stmt.required = false; // reported, not asserted
        out.push_back(std::move(stmt));
    }
    return out;
}

CheckRecord check_gradient_lemma(const Graph& g, const Eigensystem& sys, double k,
                                 const RealFunction& f, double t) {
    if (k < 0 && t > 1.0 / (2.0 * std::fabs(k)) + 1e-12)
        throw InputError("check_gradient_lemma: t exceeds 1/(2|K|) for negative K");
    HeatKernel kernel = heat_kernel(sys, t);
    RealFunction ptf = kernel.apply(f);
    double lhs = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) lhs += std::fabs(f[i] - ptf[i]);
    double rhs = 0.0;
    RealFunction gf = gamma_field(g, f);
    for (double v : gf) rhs += std::sqrt(std::max(v, 0.0));
    rhs *= 2.0 * std::sqrt(t);

    CheckRecord r;
    r.name = "heat.gradient_lemma";
    r.instance = g.name() + "/t=" + format_double(t);
    r.lhs = rhs; // slack = bound - measured
    r.rhs = lhs;
    r.slack = rhs - lhs;
    r.gate(kHeatTol);
    return r;
}

CheckRecord check_step1(const Graph& g, const Eigensystem& sys, double k,
                        const RealFunction& f, double t) {
    HeatKernel kernel = heat_kernel(sys, t);
    RealFunction ptf = kernel.apply(f);
    RealFunction lhs = gamma_field(g, ptf);
    RealFunction rhs = kernel.apply(gamma_field(g, f));
    double factor = std::exp(-2.0 * k * t);

    CheckRecord r;
    r.name = "heat.step1_gradient_decay";
    r.instance = g.name() + "/t=" + format_double(t);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lhs.size(); ++i)
        worst = std::min(worst, factor * rhs[i] - lhs[i]);
    r.slack = worst;
    r.lhs = worst;
    r.rhs = 0.0;
    r.gate(kHeatTol);
    return r;
}

CheckRecord check_variance_bound(const Graph& g, const Eigensystem& sys, double k,
                                 const RealFunction& f, double t) {
    HeatKernel kernel = heat_kernel(sys, t);
    RealFunction ptf = kernel.apply(f);
    RealFunction fsq(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fsq[i] = f[i] * f[i];
    RealFunction ptfsq = kernel.apply(fsq);
    RealFunction gptf = gamma_field(g, ptf);
    double c = heat_variance_coefficient(k, t);

    CheckRecord r;
    r.name = "heat.variance_bound";
    r.instance = g.name() + "/t=" + format_double(t);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i)
        worst = std::min(worst, (ptfsq[i] - ptf[i] * ptf[i]) - c * gptf[i]);
    r.slack = worst;
    r.lhs = worst;
    r.rhs = 0.0;
    r.gate(kHeatTol);
    return r;
}

CheckRecord check_eq337(const Graph& g, const Eigensystem& sys, double k,
                        const RealFunction& f, double t) {
    if (k < 0 && t > 1.0 / (2.0 * std::fabs(k)) + 1e-12)
        throw InputError("check_eq337: t exceeds 1/(2|K|) for negative K");
    HeatKernel kernel = heat_kernel(sys, t);
    RealFunction ptf = kernel.apply(f);
    RealFunction gptf = gamma_field(g, ptf);
    double max_grad = 0.0;
    for (double v : gptf) max_grad = std::max(max_grad, std::sqrt(std::max(v, 0.0)));
    double max_f = 0.0;
    for (double v : f) max_f = std::max(max_f, std::fabs(v));

    CheckRecord r;
    r.name = "heat.eq337_sup_gradient";
    r.instance = g.name() + "/t=" + format_double(t);
    r.lhs = max_f / std::sqrt(t);
    r.rhs = max_grad;
    r.slack = r.lhs - r.rhs;
    r.gate(kHeatTol);
    return r;
}

CheckRecord check_gap_theorem(const Graph& g, double lambda, double ric) {
    CheckRecord r;
    r.name = "gap_vs_curvature";
    r.instance = g.name();
    r.lhs = lambda;
    r.rhs = ric;
    r.slack = lambda - ric;
    r.gate(kGapTol);
    return r;
}

CheckRecord check_ric_upper(const Graph& g, double ric, double upper_bound) {
    CheckRecord r;
    r.name = "ric_upper_2_plus_T_half";
    r.instance = g.name();
    r.lhs = upper_bound;
    r.rhs = ric;
    r.slack = upper_bound - ric;
    r.gate(kRicUpperTol);
    return r;
}

// ---------------------------------------------------------------------------
// corpus + driver
// ---------------------------------------------------------------------------

namespace {

Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},          // outer cycle
        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},          // inner 5-star
        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},          // spokes
    };
    return Graph(10, edges, "petersen");
}

} // namespace

std::vector<Graph> standard_corpus() {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 4; ++n) corpus.push_back(hypercube(n));
    for (int n = 2; n <= 8; ++n) corpus.push_back(complete(n));
    for (int n = 3; n <= 12; ++n) corpus.push_back(cycle(n));
    corpus.push_back(path(5));
    corpus.push_back(slice(4, 2));
    corpus.push_back(slice(5, 2));
    corpus.push_back(slice(6, 3));
    corpus.push_back(middle_slice_adjacent(2));
    corpus.push_back(middle_slice_adjacent(3));
    corpus.push_back(dyck(3));
    corpus.push_back(dyck(4));
    corpus.push_back(tree(3, 3));
    corpus.push_back(sn_special(3));
    corpus.push_back(sn_special(4));
    corpus.push_back(sn_transpositions(3));
    corpus.push_back(sn_transpositions(4));
    corpus.push_back(abelian_cayley({{9}, {{2}, {3}}}));
    corpus.push_back(abelian_cayley({{16}, {{1}, {4}}}));
    corpus.push_back(abelian_cayley({{12}, {{2}, {3}}}));
    corpus.push_back(petersen());
    return corpus;
}

std::vector<Graph> quick_corpus() {
    std::vector<Graph> corpus;
    corpus.push_back(hypercube(3));
    corpus.push_back(complete(5));
    corpus.push_back(cycle(6));
    corpus.push_back(slice(4, 2));
    corpus.push_back(dyck(3));
    corpus.push_back(abelian_cayley({{9}, {{2}, {3}}}));
    return corpus;
}

namespace {

// Worst record of a subset-quantified family (smallest margin above the
// failure line), so JSON lines stay readable; the full per-subset vectors
// remain available through the check functions.
CheckRecord worst_of(const std::vector<CheckRecord>& records, const std::string& name,
                     const Graph& g) {
    CheckRecord worst;
    bool found = false;
    int count = 0;
    for (const auto& r : records) {
        if (r.name != name) continue;
        ++count;
        if (!found || r.slack + r.tolerance < worst.slack + worst.tolerance) {
            worst = r;
            found = true;
        }
    }
    worst.instance = g.name() + "/worst_of_" + std::to_string(count) + "_subsets";
    return worst;
}

} // namespace

VerificationReport run_all(const std::string& corpus_spec, std::uint64_t seed,
                           double tol_scale) {
    if (tol_scale != 1.0 && tol_scale <= 0.0)
        throw InputError("run_all: tolerance scale must be positive");
    std::vector<Graph> corpus;
    if (corpus_spec == "standard")
        corpus = standard_corpus();
    else if (corpus_spec == "quick")
        corpus = quick_corpus();
    else
        throw InputError("run_all: unknown corpus \"" + corpus_spec +
                         "\" (expected \"standard\" or \"quick\")");

    const std::vector<double> t_grid = {0.01, 0.1, 0.5, 1.0, 2.0};
    const int heat_functions = corpus_spec == "standard" ? 20 : 5;

    std::vector<std::vector<CheckRecord>> chunks(corpus.size());
    parallel_for(corpus.size(), [&](std::size_t gi) {
        const Graph& g = corpus[gi];
        std::vector<CheckRecord>& out = chunks[gi];
        Rng rng = Rng(seed).fork(gi);

        CurvatureReport cur = curvature(g);
        const double ric = cur.ric;
        const bool connected = g.components() == 1;

        out.push_back(check_ric_upper(g, ric, cur.upper_bound));

        Eigensystem sys = spectral_decomposition(g);
        SpectralReport spec = spectrum(sys, g.max_degree());

        if (ric >= -1e-8) {
            out.push_back(check_gap_theorem(g, spec.lambda, ric));
        } else {
            CheckRecord skip;
            skip.name = "gap_vs_curvature.skipped_negative_ric";
            skip.instance = g.name();
            skip.lhs = ric;
            skip.rhs = 0.0;
            skip.slack = 0.0;
            skip.pass = true;
            skip.required = false;
            out.push_back(std::move(skip));
        }

        if (connected && ric >= -1e-8 && g.vertex_count() <= 22) {
            IsoperimetryReport iso = cheeger_exact(g);
            out.push_back(check_buser_global(g, spec.lambda, iso.h));
            out.push_back(check_cheeger_floor(g, spec.lambda, iso.h));
        }

        if (connected && g.vertex_count() <= 14) {
            auto subset = check_subset_iso(g, ric, spec.lambda);
            out.push_back(worst_of(subset, "subset_iso", g));
        }

        if (connected && g.vertex_count() <= 12) {
            LogSobolevEstimate lsi = logsobolev_estimate(g, 6, rng.next_u64());
            auto records = check_lsi_iso(g, ric, lsi.rho_hat);
            out.push_back(worst_of(records, "lsi_iso.proof_form", g));
            out.push_back(worst_of(records, "lsi_iso.statement_form", g));

            CheckRecord rho_vs_lambda;
            rho_vs_lambda.name = "lsi.rho_le_lambda";
            rho_vs_lambda.instance = g.name();
            rho_vs_lambda.lhs = spec.lambda * (1.0 + 1e-6);
            rho_vs_lambda.rhs = lsi.rho_hat;
            rho_vs_lambda.slack = rho_vs_lambda.lhs - rho_vs_lambda.rhs;
            rho_vs_lambda.gate(0.0);
            rho_vs_lambda.required = false; // known relation, reported only
            out.push_back(std::move(rho_vs_lambda));
        }

        if (g.vertex_count() <= 24) {
            const double k = ric;
            double t_max = k < 0 ? 1.0 / (2.0 * std::fabs(k)) : std::numeric_limits<double>::infinity();
            for (int fi = 0; fi < heat_functions; ++fi) {
                RealFunction f(g.vertex_count());
                for (double& v : f) v = rng.sym();
                for (double t : t_grid) {
                    out.push_back(check_step1(g, sys, k, f, t));
                    out.push_back(check_variance_bound(g, sys, k, f, t));
                    if (t <= t_max) {
                        out.push_back(check_gradient_lemma(g, sys, k, f, t));
                        out.push_back(check_eq337(g, sys, k, f, t));
                    }
                }
            }
        }

        // family-specific curvature floors
        if (g.name().rfind("abelian_cayley", 0) == 0 || g.name().rfind("cycle", 0) == 0 ||
            g.name().rfind("hypercube", 0) == 0) {
            CheckRecord floor;
            floor.name = "cayley_nonnegative";
            floor.instance = g.name();
            floor.lhs = ric;
            floor.rhs = 0.0;
            floor.slack = ric;
            floor.gate(1e-8);
            out.push_back(std::move(floor));
        }
        if (g.name().rfind("middle_slice", 0) == 0 || g.name().rfind("dyck", 0) == 0) {
            CheckRecord floor;
            floor.name = "adjacent_transposition_floor";
            floor.instance = g.name();
            floor.lhs = ric;
            floor.rhs = -1.0;
            floor.slack = ric + 1.0;
            floor.gate(1e-8);
            out.push_back(std::move(floor));
        }
        // regular graphs: Ric >= 2 - d
        {
            bool regular = true;
            for (Vertex v = 1; v < g.vertex_count(); ++v)
                if (g.degree(v) != g.degree(0)) {
                    regular = false;
                    break;
                }
            if (regular) {
                CheckRecord floor;
                floor.name = "regular_floor_2_minus_d";
                floor.instance = g.name();
                floor.lhs = ric;
                floor.rhs = 2.0 - g.degree(0);
                floor.slack = floor.lhs - floor.rhs;
                floor.gate(1e-8);
                out.push_back(std::move(floor));
            }
        }
    });

    VerificationReport report;
    report.corpus = corpus_spec;
    report.seed = seed;
    for (auto& chunk : chunks)
        for (auto& r : chunk) report.records.push_back(std::move(r));

    if (tol_scale != 1.0) {
        for (auto& r : report.records) r.gate(r.tolerance * tol_scale);
    }
    return report;
}

std::string verification_report_jsonl(const VerificationReport& report) {
    std::string out;
    int passed = 0, failed = 0, info_failed = 0;
    for (const auto& r : report.records) {
        JsonWriter w;
        w.begin_object();
        w.field("name", r.name);
        w.field("instance", r.instance);
        w.field("lhs", r.lhs);
        w.field("rhs", r.rhs);
        w.field("slack", r.slack);
        w.field("tolerance", r.tolerance);
        w.field("pass", r.pass);
        w.field("required", r.required);
        w.end_object();
        out += w.str();
        out += '\n';
        if (r.pass)
            ++passed;
        else if (r.required)
            ++failed;
        else
            ++info_failed;
    }
    JsonWriter s;
    s.begin_object();
    s.key("summary").begin_object();
    s.field("checks", report.checks());
    s.field("passed", passed);
    s.field("failed", failed);
    s.field("informational_failed", info_failed);
    s.field("corpus", report.corpus);
    s.field("seed", static_cast<long long>(report.seed));
    s.end_object();
    s.end_object();
    out += s.str();
    out += '\n';
    return out;
}

} // namespace g2
