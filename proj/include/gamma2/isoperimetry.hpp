#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gamma2/graph.hpp"

namespace g2 {

struct IsoperimetryReport {
    double h = 0.0;                  // boundary / |A|
    std::vector<Vertex> argmin_set;  // sorted, 0 < |A| <= n/2
    std::int64_t boundary = 0;
    std::string method;              // "exact" | "sweep" | "testset"
};

/// Number of edges from A to its complement.
std::int64_t boundary_size(const Graph& g, const std::vector<Vertex>& a);

/// True Cheeger constant by subset enumeration (vertex 0 pinned into A,
/// Gray-code boundary updates, parallel over prefix blocks). Ties resolve to
/// the lexicographically least vertex set. Throws CapError above the cap.
IsoperimetryReport cheeger_exact(const Graph& g, int cap = 22);

/// Fiedler sweep upper bound: sort by the lambda-eigenvector, take the best
/// prefix cut. Always >= the exact constant.
IsoperimetryReport cheeger_sweep(const Graph& g);

/// The low-boundary test set A = {phi : cyclic-dist(phi(0), phi(1)) <= n/4}
/// inside sn_special(n); returns |boundary|/|A| as an upper bound for h.
/// Construction facts are asserted: the n-cycle generators fix A, and every
/// boundary edge is a (01)-transposition edge.
IsoperimetryReport sn_test_set(int n);

struct LogSobolevEstimate {
    double rho_hat = 0.0;       // Rayleigh value of best_witness
    int trials = 0;
    RealFunction best_witness;
    std::string convention_note;
};

/// Upper estimate of the entropy-form log-Sobolev constant
///   rho = inf over nonconstant f > 0 of E_u(f,f) / Ent_u(f^2)
/// with E_u the Dirichlet sum averaged by 1/n and Ent_u(g) =
/// mean(g log g) - mean(g) log mean(g), both under the uniform probability
/// measure. This normalization reproduces (n-1)/log n on K_n for a one-point
/// indicator. The hypercontractive convention may differ by a factor of 2;
/// every estimate carries that note.
LogSobolevEstimate logsobolev_estimate(const Graph& g, int trials, std::uint64_t seed);

std::string isoperimetry_report_json(const IsoperimetryReport& report);

} // namespace g2
