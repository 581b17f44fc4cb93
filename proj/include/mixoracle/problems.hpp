#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "mixoracle/rng.hpp"
#include "mixoracle/types.hpp"

namespace mixoracle {

enum class ProblemFamily { QuadMinMin, QuadSaddle, LogSumExpSaddle };

ProblemFamily problem_family_from_string(const std::string& s);
std::string to_string(ProblemFamily f);

/// Synthetic instance descriptor. Quadratic families are built by eigenvalue
/// placement so the requested constants are the true extreme eigenvalues;
/// the log-sum-exp family stores computed upper bounds instead.
struct ProblemSpec {
    ProblemFamily family = ProblemFamily::QuadSaddle;
    int n_x = 2;
    int n_y = 2;
    double mu_x = 1.0;
    double mu_y = 1.0;
    double L_xx = 1.0;
    double L_yy = 1.0;
    double L_xy = 0.0;
    std::uint64_t seed = 0;
    double box_halfwidth = 1.0;  // X = [-w, w]^{n_x}
    double lse_temperature = 1.0;
};

/// Generated instance plus everything the harness needs to score a solver
/// without trusting it: closed-form outer objective, optimum, and bounds.
struct GeneratedProblem {
    MixedOracleProblem problem;

    Vector x_star;
    Vector y_star;
    double f_star = 0.0;

    /// Outer objective: min-min g(x) = min_y f(x,y); saddle g(x) = max_y f(x,y).
    std::function<double(const Vector&)> g;
    /// Saddle families only: h(y) = min_{x in X} f(x,y). Throws if the
    /// unconstrained x-minimizer escapes the box (the instances are placed so
    /// it never does near the solution).
    std::function<double(const Vector&)> h;

    /// g(x_hat) - g(x_star); the outer-gap measurable for the small-dimension solvers.
    double outer_gap(const Vector& x_hat) const { return g(x_hat) - f_star; }
    /// h(y_star) - h(y_hat); the large-scale min-max measurable.
    double inner_gap(const Vector& y_hat) const { return f_star - h(y_hat); }

    double R_y0_sq = 0.0;  // sup_{x in X} ||y*(x)||^2, cold-start bound for inner solves

    // Instance data, exposed for oracle-style verification in tests.
    Matrix A, B, C;
    Vector lin_a, lin_b;
    Matrix lse_rows;
};

GeneratedProblem generate_problem(const ProblemSpec& spec, SeededRng& rng);

}  // namespace mixoracle
