#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "mixoracle/ardd.hpp"
#include "mixoracle/rng.hpp"
#include "mixoracle/types.hpp"

namespace mixoracle {

/// One (delta, sigma, L, mu)-oracle reply: with probability >= 1 - sigma,
///   mu/2 ||x'-x||^2 <= f(x) - (value + <grad, x - x'>) <= L/2 ||x-x'||^2 + delta
/// holds for all x in the domain.
struct InexactOracleSample {
    double value = 0.0;
    Vector grad;
    double delta = 0.0;
    double sigma = 0.0;
};

/// First-order inexact oracle with certified constants. `value_only` lets
/// line-search checks skip the gradient (and its first-order call).
struct InexactOracle {
    std::function<InexactOracleSample(const Vector&)> sample;
    std::function<double(const Vector&)> value_only;
    double L = 1.0;
    double mu = 0.0;
    double delta = 0.0;
    double sigma = 0.0;
    // Set by make_inexact_oracle: the inner maximizer behind the last query.
    std::function<Vector()> last_inner;
};

struct FgmConfig {
    double L0 = 1.0;       // initial line-search guess
    double mu = 0.0;
    double delta = 0.0;    // constant per-iteration delta_k
    std::int64_t N = 1;
    FeasibleSet set = FeasibleSet::box(Vector::Constant(1, -1.0), Vector::Constant(1, 1.0));
    double R_sq = 0.0;     // bound with (1/2)||x0 - x*||^2 <= R_sq; 0 -> 2 R_set^2
    int max_doublings = 60;
};

struct FgmIterationLog {
    double L = 0.0;
    double A = 0.0;
    int trials = 0;
};

struct FgmReport {
    std::vector<FgmIterationLog> iterations;
    std::uint64_t sample_calls = 0;      // full (value + gradient) oracle queries
    std::uint64_t value_calls = 0;       // value-only line-search checks
    double L_max = 0.0;
    double A_final = 0.0;
    double predicted_gap = 0.0;          // geometric + noise-floor bound at the realized L_max
    double sigma_total = 0.0;            // N * sigma union bound
};

struct FgmResult {
    Vector x;
    FgmReport report;
};

/// Exact minimizer of
///   alpha <g, x - y> + (1 + A mu)/2 ||x - u||^2 + alpha mu / 2 ||x - y||^2
/// over a Box/Ball set (unconstrained solution then Euclidean projection;
/// exact because the quadratic is identity-scaled).
Vector fgm_prox_step(const Vector& grad, const Vector& y_ref, const Vector& u_prev, double A_k,
                     double alpha_next, double mu, const FeasibleSet& set);

/// Fast adaptive gradient method with (delta, sigma, L, mu)-oracle.
FgmResult fgm_solve(const InexactOracle& oracle, const Vector& x0, const FgmConfig& config,
                    OracleLedger& ledger);

/// Geometric convergence term 2 L exp(-(N-1)/2 sqrt(mu/L)) R^2.
double fgm_geometric_bound(double L, double mu, double R_sq, std::int64_t N);

/// Inner solver knobs for the oracle adapter below.
struct InexactOracleConfig {
    double eps_y = 1e-6;     // inner accuracy per query
    double sigma_y = 0.1;    // inner confidence per query
    double H1 = 0.0;         // proximal weight; 0 queries the plain max-function g
    Vector z_center;         // proximal center (ignored when H1 = 0)
    Vector y_start;          // first inner start point
    double R_y0_sq = 1.0;    // bound on sup_x ||y_start - y*(x)||^2
    double tau = 0.0;
    std::int64_t max_restarts = 400;
};

/// Builds the (2 eps_y, sigma_y, 2 L_g, mu_x)-oracle for
///   x -> max_y { f(x, y) - H1/2 ||y - z||^2 }
/// by running ARDDsc on the negated inner objective, warm-started across
/// queries. L_g = L_xx + 2 L_xy^2 / (mu_y + H1).
InexactOracle make_inexact_oracle(const MixedOracleProblem& problem,
                                  const InexactOracleConfig& config, SeededRng& rng,
                                  OracleLedger& ledger);

}  // namespace mixoracle
