#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamma2/graph.hpp"
#include "gamma2/linalg.hpp"

namespace g2 {

/// Symmetric quadratic form in the local coordinates of a 2-ball. The value
/// of x is pinned to 0, so coordinates are the values on N1 followed by N2.
///
/// Factor-of-2 bookkeeping, fixed once for the whole module: forms represent
/// 2*Gamma_2(f)(x) and 2*Gamma(f)(x). The 2*Gamma form is the identity on the
/// N1 coordinates, so the curvature kappa(x) = min Gamma_2/Gamma equals the
/// smallest eigenvalue of the reduced 2*Gamma_2 form.
struct QuadraticForm {
    std::size_t dim = 0;
    Matrix coeff;                 // dim x dim, symmetric
    std::vector<Vertex> coords;   // local index -> vertex id

    double evaluate(const std::vector<double>& f) const;
};

/// Assemble the 2*Gamma_2 form at the ball's center from the expanded Bochner
/// expression, and independently from the definitional evaluator via
/// polarization; throws InternalError if the two disagree beyond 1e-10.
QuadraticForm assemble_gamma2_form(const Graph& g, const VertexBall2& ball);

/// Expansion-only assembly (the fast route); exposed so tests can compare the
/// two routes explicitly.
QuadraticForm assemble_gamma2_form_expansion(const VertexBall2& ball);

/// Definitional assembly by polarizing f -> 2*Gamma_2(f)(x) over basis
/// functions supported on the ball.
QuadraticForm assemble_gamma2_form_definitional(const Graph& g, const VertexBall2& ball);

/// Schur complement onto the N1 coordinates. The N2 block of a Gamma_2 form
/// is diagonal with entries r(u)/2 > 0; anything else raises InternalError.
/// For every N1 vector, the reduced value equals the minimum of the full form
/// over extensions to N2 (the minimizer being f(u) = (2/r(u)) sum f(v)).
QuadraticForm reduce_distance2(const QuadraticForm& form, const VertexBall2& ball);

struct LocalCurvature {
    double kappa = 0.0;
    /// Minimizing f on the closed 2-ball (center first, value 0), normalized
    /// so Gamma(f)(x) = 1 and the first nonzero coordinate is positive.
    std::vector<Vertex> support; // center, then N1, then N2
    std::vector<double> witness; // same order
};

/// kappa(x) = min over f of Gamma_2(f)(x) / Gamma(f)(x), with the witness.
LocalCurvature local_curvature(const Graph& g, Vertex x);

struct CurvatureReport {
    std::vector<std::optional<double>> per_vertex; // null when skipped (interior mode)
    double ric = 0.0;           // min over computed vertices
    double upper_bound = 0.0;   // 2 + T/2
    Vertex witness_vertex = 0;
    std::vector<Vertex> witness_support;
    std::vector<double> witness_values;
    std::string family_name;
};

/// Per-vertex curvature over all (or interior-only) vertices; Ric(G) is the
/// minimum. Throws InputError when interior_only selects no vertex.
CurvatureReport curvature(const Graph& g, bool interior_only = false);

std::string curvature_report_json(const CurvatureReport& report);

/// Signed slack Gamma_2(f)(x) - K * Gamma(f)(x) for a concrete test function.
double check_inequality(const Graph& g, Vertex x, const RealFunction& f, double k);

/// Independent verification oracle: randomized multi-start minimization of
/// the ratio Gamma_2(f)(x)/Gamma(f)(x) over ball functions, evaluated through
/// the definitional operations only (no form assembly, no eigensolver).
/// Every candidate ratio is >= kappa(x), so the estimate can only err upward.
double oracle_curvature(const Graph& g, Vertex x, int trials, std::uint64_t seed);

} // namespace g2
