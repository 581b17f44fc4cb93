#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mixoracle/estimator.hpp"
#include "mixoracle/rng.hpp"
#include "mixoracle/types.hpp"

namespace mixoracle {

/// Objective for the derivative-free solvers; implementations must route
/// every evaluation through the owning ledger.
using ZerothOracle = std::function<double(const Vector&)>;

struct ArddConfig {
    double L = 1.0;        // smoothness constant of the objective
    std::int64_t N = 0;    // iteration count
    double tau = 0.0;      // smoothing radius; 0 -> default from the start point
    int n = 0;             // dimension
};

struct ArddRun {
    Vector y_final;
    std::vector<double> objective_trace;  // filled only when requested
    std::uint64_t zeroth_calls = 0;
};

/// Accelerated Randomized Directional Derivative method, Euclidean (p = 2)
/// setup. Two function evaluations per iteration.
ArddRun ardd_run(const ZerothOracle& objective, const Vector& x0, const ArddConfig& config,
                 SeededRng& rng, OracleLedger& ledger, bool trace = false);

struct ArddscConfig {
    double mu = 1.0;       // strong convexity modulus
    double L = 1.0;        // smoothness constant
    double R0_sq = 1.0;    // bound on ||x0 - y*||^2
    std::int64_t restarts = 1;
    double Omega2 = 1.0;   // prox-diameter constant for p = 2
    double tau = 0.0;
    int n = 0;

    /// a = 384 n^2 rho_n with rho_n = min{1, 16 ln n - 8} for q = 2
    /// (equal to 1 for every n >= 2; clamped to 1 at n = 1 where the
    /// formula degenerates).
    double a_const() const;
    /// Inner iteration count N0 = ceil(sqrt(8 a L Omega2 / mu)).
    std::int64_t inner_iterations() const;
};

/// Restarted ARDD for strongly convex objectives: `restarts` rounds of N0
/// ARDD steps, each started from the previous round's output.
Vector arddsc_run(const ZerothOracle& objective, const Vector& x0, const ArddscConfig& config,
                  SeededRng& rng, OracleLedger& ledger);

struct ArddscPlan {
    std::int64_t restarts = 0;
    std::int64_t total_calls = 0;
};

/// Restart count for expected accuracy eps via the per-restart halving
/// guarantee (mu R0^2 / 2) 2^{-k}, plus the implied zeroth-order call total.
ArddscPlan arddsc_iterations_for(double eps, const ArddscConfig& config);

}  // namespace mixoracle
