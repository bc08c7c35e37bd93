#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gamma2/graph.hpp"
#include "gamma2/spectral.hpp"

namespace g2 {

struct CheckRecord {
    std::string name;
    std::string instance;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;      // lhs - rhs, or the check's documented slack
    double tolerance = 0.0;  // allowed negative slack (absolute, pre-scaled)
    bool pass = true;        // slack >= -tolerance
    bool required = true;    // informational records never fail a run

    void gate(double tol) {
        tolerance = tol;
        pass = slack >= -tol;
    }
};

struct VerificationReport {
    std::vector<CheckRecord> records;
    std::string corpus;
    std::uint64_t seed = 0;

    int checks() const { return static_cast<int>(records.size()); }
    int failed_required() const;
    bool all_passed() const { return failed_required() == 0; }
};

/// c_K(t) = integral_0^t 2 e^{2Ks} ds: (e^{2Kt}-1)/K for K != 0, else 2t.
double heat_variance_coefficient(double k, double t);

// Individual checks. Each returns a record with measured slack; "required"
// is set by the caller's policy. K is the curvature lower bound in force
// (the computed Ric unless a theorem pins a value).

/// lambda <= 16 h^2 with exact h; hypothesis Ric >= 0.
CheckRecord check_buser_global(const Graph& g, double lambda, double h_exact);

/// h >= sqrt(lambda)/4; hypothesis Ric >= 0.
CheckRecord check_cheeger_floor(const Graph& g, double lambda, double h_exact);

/// |dA| >= (1/2) min(sqrt(lambda), lambda/sqrt(2|K|)) |A| (1 - |A|/n) for
/// every subset of V (2^n enumeration, n <= 14). For K = 0 the second branch
/// is dropped. Returns one record per subset.
std::vector<CheckRecord> check_subset_iso(const Graph& g, double k, double lambda);

/// Proof-form log-Sobolev isoperimetry: |dA| >= (1/16) min(sqrt(rho),
/// rho/sqrt(2|K|)) |A| (log(n/|A|))^{1/2} over |A| <= n/2 with rho = 0.5 *
/// rho_hat (the estimator upper-bounds rho, the halving keeps the check
/// sound against estimator bias). statement_form records (|A| log(n/|A|))
/// are informational.
std::vector<CheckRecord> check_lsi_iso(const Graph& g, double k, double rho_hat);

/// || f - P_t f ||_1 <= 2 sqrt(t) || sqrt(Gamma(f)) ||_1, valid for every t
/// when K >= 0 and for t <= 1/(2|K|) when K < 0.
CheckRecord check_gradient_lemma(const Graph& g, const Eigensystem& sys, double k,
                                 const RealFunction& f, double t);

/// Step 1: Gamma(P_t f) <= e^{-2Kt} P_t(Gamma(f)) pointwise.
CheckRecord check_step1(const Graph& g, const Eigensystem& sys, double k,
                        const RealFunction& f, double t);

/// (eq. of step 2): P_t(f^2) - (P_t f)^2 >= c_K(t) Gamma(P_t f) pointwise.
CheckRecord check_variance_bound(const Graph& g, const Eigensystem& sys, double k,
                                 const RealFunction& f, double t);

/// max sqrt(Gamma(P_t f)) <= max|f| / sqrt(t), for t <= 1/(2|K|) when K < 0.
CheckRecord check_eq337(const Graph& g, const Eigensystem& sys, double k,
                        const RealFunction& f, double t);

/// lambda >= Ric when Ric >= 0.
CheckRecord check_gap_theorem(const Graph& g, double lambda, double ric);

/// Ric <= 2 + T/2.
CheckRecord check_ric_upper(const Graph& g, double ric, double upper_bound);

/// Full corpus run. corpus_spec: "standard" or "quick".
VerificationReport run_all(const std::string& corpus_spec, std::uint64_t seed,
                           double tol_scale = 1.0);

/// One JSON line per record plus a final summary line.
std::string verification_report_jsonl(const VerificationReport& report);

/// Named corpus used by run_all; exposed for the test suites.
std::vector<Graph> standard_corpus();
std::vector<Graph> quick_corpus();

} // namespace g2
