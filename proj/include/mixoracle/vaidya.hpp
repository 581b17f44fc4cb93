#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mixoracle/polytope.hpp"
#include "mixoracle/types.hpp"

namespace mixoracle {

/// Cutting-plane oracle reply at a query point z. When z was feasible, -c is
/// a delta-subgradient of the outer objective at z and `value` approximates
/// g(z); when z was infeasible, c separates z from X (c'x >= c'z on X) and
/// value/delta are unused.
struct DeltaSubgradient {
    Vector c;
    double delta = 0.0;
    bool feasible = true;
    double value = std::numeric_limits<double>::quiet_NaN();
};

using VaidyaOracle = std::function<DeltaSubgradient(const Vector&)>;

struct VaidyaParams {
    // The certified analysis needs eta <= 1e-4, gamma <= 1e-3 * eta; those
    // values place cuts so shallowly that runs of any practical length make
    // no progress. practical() trades the certificate for cuts that bite.
    double eta = 1e-4;
    double gamma = 1e-7;

    // Iteration budget: either an explicit count, or 0 to derive the count
    // from eps_geometric via the certified-count formula at this gamma.
    std::int64_t iterations = 0;
    double eps_geometric = 0.0;

    std::int64_t max_iterations = 100000;
    int m_max = 0;  // 0 -> 10 n + 20
    RecentreOptions recentre;
    bool record_trajectory = false;

    bool theory_certified() const { return eta <= 1e-4 && gamma <= 1e-3 * eta; }

    static VaidyaParams practical() {
        VaidyaParams p;
        p.eta = 128.0;
        p.gamma = 0.08;
        return p;
    }
};

struct VaidyaState {
    Polytope poly;
    Vector z;
    double eta = 1e-4;
    double gamma = 1e-7;
    std::optional<Vector> best_point;
    double best_value = std::numeric_limits<double>::infinity();
    std::int64_t iteration = 0;

    // Run statistics.
    std::int64_t n_add = 0;
    std::int64_t n_remove = 0;
    std::int64_t n_feasible_queries = 0;
    std::int64_t n_infeasible_queries = 0;
    double max_delta_seen = 0.0;
    int m_max = 0;
    RecentreOptions recentre_opts;
};

enum class VaidyaStepKind { Removed, Added };

struct VaidyaTracePoint {
    Vector z;
    double F;
    VaidyaStepKind kind;
    bool queried_feasible;
};

struct VaidyaReport {
    std::int64_t iterations_planned = 0;
    std::int64_t iterations_run = 0;
    std::int64_t n_add = 0;
    std::int64_t n_remove = 0;
    std::int64_t n_feasible_queries = 0;
    std::int64_t n_infeasible_queries = 0;
    std::uint64_t first_calls = 0;
    std::uint64_t zeroth_calls = 0;
    double theory_iterations = 0.0;   // certified iteration count at the run's gamma
    double predicted_gap_bound = 0.0; // certified bound at the run's N and max delta
    bool theory_certified = false;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<VaidyaTracePoint> trajectory;
};

struct VaidyaResult {
    Vector x_hat;
    VaidyaReport report;
};

/// Thrown when the resolved iteration count exceeds max_iterations; carries
/// the best-so-far result from the capped run.
struct VaidyaBudgetExceeded : BudgetExceeded {
    VaidyaBudgetExceeded(std::string msg, VaidyaResult r)
        : BudgetExceeded(std::move(msg)), result(std::move(r)) {}
    VaidyaResult result;
};

/// Iteration count sufficient for the certified geometric term <= eps_geo.
double vaidya_certified_iterations(int n, double R, double rho, double B, double gamma, double eps_geo);

/// Certified suboptimality bound after N iterations with oracle inexactness delta.
double vaidya_certified_gap_bound(int n, double R, double rho, double B, double gamma, double N,
                          double delta);

/// Fresh state on the initial simplex around B_R.
VaidyaState vaidya_init(int n, double R, const VaidyaParams& params);

/// One Vaidya iteration: remove the min-leverage row if it dips below gamma,
/// otherwise query the oracle at z and add the cut (c', beta) with beta from
/// the entering-leverage equation c'H^{-1}c / (c'z - beta)^2 = sqrt(eta*gamma)/2.
/// The state is recentred afterwards.
VaidyaStepKind vaidya_step(VaidyaState& state, const VaidyaOracle& oracle);

/// Full cutting-plane solve over a feasible set descriptor. The oracle must
/// route its own f / grad_x evaluations through `ledger`.
VaidyaResult vaidya_solve(const VaidyaOracle& oracle, const FeasibleSet& set,
                          const VaidyaParams& params, OracleLedger& ledger);

}  // namespace mixoracle
