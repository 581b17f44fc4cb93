#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mixoracle/ardd.hpp"
#include "mixoracle/catalyst.hpp"
#include "mixoracle/fgm.hpp"
#include "mixoracle/types.hpp"
#include "mixoracle/vaidya.hpp"

namespace mixoracle {

/// Per-stage accuracy / confidence split for a composed run.
struct AccuracyBudget {
    double eps = 0.0;
    double sigma = 0.0;
    double eps_x = 0.0;
    double eps_y = 0.0;
    double sigma_x = 0.0;
    double sigma_y = 0.0;
    double delta_tilde = 0.0;  // min-min inner accuracy driving the subgradient slack
    double delta = 0.0;        // outer oracle inexactness
};

struct StageBreakdown {
    std::string stage;
    std::uint64_t first_calls = 0;
    std::uint64_t zeroth_calls = 0;
};

struct OuterQueryRecord {
    Vector z;
    Vector c;
    double delta = 0.0;
    double value = 0.0;
};

struct ApproachReport {
    Vector x_hat;
    Vector y_hat;
    double gap_estimate = 0.0;
    OracleLedger ledger;  // call deltas attributable to this solve
    std::vector<StageBreakdown> stages;
    AccuracyBudget budget;
    VaidyaReport vaidya;              // approaches 1-2
    std::int64_t catalyst_outer = 0;  // approach 3
    std::int64_t fgm_iterations = 0;  // approach 3, per subproblem
    std::vector<OuterQueryRecord> queries;  // recorded on request
};

/// Warm-start bookkeeping for the inner ARDDsc solves, shared across
/// successive outer queries.
struct InnerWarmState {
    Vector y;
    Vector x_last;
    double resid_sq = std::numeric_limits<double>::infinity();
    bool valid = false;
};

/// Inner-solver knobs for the delta-subgradient constructions.
struct InnerDriver {
    double tau = 0.0;
    std::int64_t max_restarts = 400;
    double sigma = 0.05;    // per-query confidence (Markov conversion)
    double R_y0_sq = 1.0;   // cold bound on ||y_start - y*(x)||^2 over X
    Vector y_start;         // default zero
};

struct ApproachParams {
    VaidyaParams vaidya = VaidyaParams::practical();
    double practical_iteration_factor = 3.0;  // Vaidya steps ~ factor * n ln(...)
    InnerDriver inner;
    double sigma_inner = 0.0;  // per-query confidence; 0 -> min(0.05, 1/(4N))
    bool record_queries = false;
    int n_x_guard = 64;
    bool override_dim_guard = false;

    // Large-scale min-max knobs.
    double safety = 4.0;             // hidden-constant multiplier for the stage budgets
    double eps_tilde_factor = 0.25;  // Catalyst subproblem target = eps * this
    double H1 = 0.0;                 // 0 -> L_yy
    std::int64_t fgm_min_iterations = 8;
    double fgm_L0_fraction = 0.25;   // initial L0 = fraction * 2 L_g
};

/// delta_tilde with 6 sqrt(L_yy D delta_tilde / mu_y) = eps/2, clamped to D.
/// D = 0 returns +infinity: the inner solve is unnecessary (decoupled).
double invert_delta(double eps_outer, const SmoothnessConstants& constants);

/// Min-min construction: solve the inner minimization to delta_tilde and
/// return c = -grad_x f(x', y~) with delta = 6 sqrt(L_yy D delta_tilde / mu_y),
/// the certified slack such that -c is a delta-subgradient of g.
DeltaSubgradient delta_subgrad_minmin(const MixedOracleProblem& problem, const Vector& x_prime,
                                      double delta_tilde, const InnerDriver& driver,
                                      InnerWarmState& warm, SeededRng& rng,
                                      OracleLedger& ledger);

/// Min-max construction: solve the inner maximization to delta and return
/// c = -grad_x f(x', y~) with the same delta (no amplification needed).
DeltaSubgradient delta_subgrad_minmax(const MixedOracleProblem& problem, const Vector& x_prime,
                                      double delta, const InnerDriver& driver,
                                      InnerWarmState& warm, SeededRng& rng,
                                      OracleLedger& ledger);

/// Iteration count actually run by the practical-parameter Vaidya loop,
/// shaped like the certified count n ln(B n^1.5 R / (rho eps)).
std::int64_t practical_vaidya_iterations(int n, double R, double rho, double B, double eps_geo,
                                         double factor);

/// Small-dimension min-min: Vaidya outer loop over delta-subgradients built
/// from ARDDsc inner minimization.
ApproachReport solve_minmin_small(const MixedOracleProblem& problem, double eps,
                                  const ApproachParams& params, SeededRng& rng,
                                  OracleLedger& ledger);

/// Small-dimension min-max: Vaidya outer loop over delta-subgradients built
/// from ARDDsc inner maximization.
ApproachReport solve_minmax_small(const MixedOracleProblem& problem, double eps,
                                  const ApproachParams& params, SeededRng& rng,
                                  OracleLedger& ledger);

/// Stage accuracy/confidence budgets for the large-scale min-max solver,
/// with the proximal substitution (mu_y -> mu_y + H1, L_yy -> L_yy + H1).
struct LargeScalePlan {
    AccuracyBudget budget;
    double H1 = 0.0;
    double eps_tilde = 0.0;
    double L_g = 0.0;
    std::int64_t catalyst_outer = 0;
    std::int64_t fgm_iterations = 0;
};

LargeScalePlan plan_minmax_large(const MixedOracleProblem& problem, double eps, double sigma,
                                 const ApproachParams& params, double R_y0_sq);

/// Large-scale min-max: Catalyst over y, each proximal subproblem solved as
/// a saddle problem by FGM over x with the ARDDsc-backed inexact oracle.
ApproachReport solve_minmax_large(const MixedOracleProblem& problem, double eps, double sigma,
                                  const ApproachParams& params, SeededRng& rng,
                                  OracleLedger& ledger);

}  // namespace mixoracle
