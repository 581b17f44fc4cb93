#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mixoracle/types.hpp"

namespace mixoracle {

struct CatalystConfig {
    double H1 = 1.0;              // proximal regularization weight
    double mu_y = 1.0;            // strong concavity of the objective
    double alpha0 = 0.0;          // 0 -> sqrt(q)
    double eps_subproblem = 0.0;  // target accuracy per proximal subproblem
    std::int64_t max_outer = 1;

    double q() const { return mu_y / (mu_y + H1); }
};

struct CatalystOuterLog {
    double alpha = 0.0;
    double beta = 0.0;
    double eps_subproblem = 0.0;
};

struct CatalystReport {
    std::vector<CatalystOuterLog> outer;
};

struct CatalystResult {
    Vector y;
    CatalystReport report;
};

/// Positive root of alpha^2 = (1 - alpha) alpha_prev^2 + q alpha,
/// evaluated with the numerically stable quadratic formula.
double catalyst_alpha_next(double alpha_prev, double q);

/// Subproblem solver contract: given the proximal center z and target
/// accuracy eps, return y with phi*(z) - phi(y; z) <= eps for
/// phi(y; z) = h(y) - H1/2 ||y - z||^2.
using CatalystSubsolver = std::function<Vector(const Vector& z, double eps)>;

/// Catalyst acceleration loop for max_y h(y): proximal subproblem, then
/// extrapolation z_k = y_k + beta_k (y_k - y_{k-1}).
CatalystResult catalyst_run(const Vector& y0, const CatalystSubsolver& subsolver,
                            const CatalystConfig& config);

/// Outer iteration count ceil(sqrt((mu_y + H1)/mu_y) * ln(C0/eps)) + 1 for an
/// initial gap bound C0.
std::int64_t catalyst_outer_iterations(double H1, double mu_y, double C0, double eps);

}  // namespace mixoracle
