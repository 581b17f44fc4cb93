#include "mixoracle/approaches.hpp"

#include <cmath>

namespace mixoracle {

double invert_delta(double eps_outer, const SmoothnessConstants& c) {
    if (eps_outer <= 0.0) throw InvalidParameter("invert_delta: eps must be positive");
    if (c.D <= 0.0) return std::numeric_limits<double>::infinity();
    const double half = 0.5 * eps_outer;
    const double dt = c.mu_y * half * half / (36.0 * c.L_yy * c.D);
    return std::min(dt, c.D);
}

namespace {

/// Warm-started ARDDsc solve of a strongly convex inner objective built at
/// the outer point x_prime. Returns the inner approximate minimizer.
Vector warm_inner_solve(const ZerothOracle& objective, const Vector& x_prime, double mu,
                        double L, double eps_expected, const InnerDriver& driver,
                        InnerWarmState& warm, int n_y, SeededRng& rng, OracleLedger& ledger) {
    double R0_sq = driver.R_y0_sq;
    Vector start = driver.y_start.size() == n_y ? driver.y_start : Vector::Zero(n_y);
    if (warm.valid) {
        // The caller has already folded the x-drift into resid_sq.
        R0_sq = std::min(R0_sq, warm.resid_sq);
        start = warm.y;
    }
    if (L * R0_sq / 2.0 <= eps_expected) return start;  // already accurate enough

    ArddscConfig cfg;
    cfg.mu = mu;
    cfg.L = L;
    cfg.R0_sq = R0_sq;
    cfg.n = n_y;
    cfg.tau = driver.tau;
    cfg.restarts = std::min(driver.max_restarts, arddsc_iterations_for(eps_expected, cfg).restarts);
    Vector out = arddsc_run(objective, start, cfg, rng, ledger);
    warm.x_last = x_prime;
    return out;
}

void update_warm(InnerWarmState& warm, const Vector& y, const Vector& x, double accuracy,
                 double mu) {
    warm.y = y;
    warm.x_last = x;
    warm.resid_sq = 2.0 * accuracy / mu;
    warm.valid = true;
}

/// Propagates the y*(x) Lipschitz drift into the warm residual before a new
/// query at x.
void drift_warm(InnerWarmState& warm, const Vector& x, double L_xy, double mu) {
    if (!warm.valid) return;
    const double lip = L_xy / mu;
    const double drift = lip * lip * (x - warm.x_last).squaredNorm();
    warm.resid_sq = 2.0 * warm.resid_sq + 2.0 * drift;
}

}  // namespace

DeltaSubgradient delta_subgrad_minmin(const MixedOracleProblem& problem, const Vector& x_prime,
                                      double delta_tilde, const InnerDriver& driver,
                                      InnerWarmState& warm, SeededRng& rng,
                                      OracleLedger& ledger) {
    if (problem.mode != InnerSense::MinMin)
        throw InvalidParameter("delta_subgrad_minmin: problem must be MinMin");
    const auto& c = problem.constants;

    DeltaSubgradient out;
    out.feasible = true;

    if (!std::isfinite(delta_tilde) || delta_tilde >= c.D) {
        // Decoupled or loose target: y~ = 0 already satisfies
        // f(x', 0) - g(x') <= D <= delta_tilde.
        const Vector y0 = Vector::Zero(problem.n_y);
        out.value = eval_f(problem, x_prime, y0, ledger);
        out.c = -eval_grad_x(problem, x_prime, y0, ledger);
        out.delta = std::isfinite(delta_tilde)
                        ? 6.0 * std::sqrt(c.L_yy * c.D * delta_tilde / c.mu_y)
                        : 0.0;
        return out;
    }

    ZerothOracle inner = [&](const Vector& y) { return eval_f(problem, x_prime, y, ledger); };
    drift_warm(warm, x_prime, c.L_xy, c.mu_y);
    const double eps_expected = driver.sigma * delta_tilde;
    const Vector y_tilde = warm_inner_solve(inner, x_prime, c.mu_y, c.L_yy, eps_expected, driver,
                                            warm, problem.n_y, rng, ledger);
    update_warm(warm, y_tilde, x_prime, delta_tilde, c.mu_y);

    out.value = eval_f(problem, x_prime, y_tilde, ledger);
    out.c = -eval_grad_x(problem, x_prime, y_tilde, ledger);
    out.delta = 6.0 * std::sqrt(c.L_yy * c.D * delta_tilde / c.mu_y);
    return out;
}

DeltaSubgradient delta_subgrad_minmax(const MixedOracleProblem& problem, const Vector& x_prime,
                                      double delta, const InnerDriver& driver,
                                      InnerWarmState& warm, SeededRng& rng,
                                      OracleLedger& ledger) {
    if (problem.mode != InnerSense::MinMax)
        throw InvalidParameter("delta_subgrad_minmax: problem must be MinMax");
    const auto& c = problem.constants;

    ZerothOracle inner = [&](const Vector& y) { return -eval_f(problem, x_prime, y, ledger); };
    drift_warm(warm, x_prime, c.L_xy, c.mu_y);
    const double eps_expected = driver.sigma * delta;
    const Vector y_tilde = warm_inner_solve(inner, x_prime, c.mu_y, c.L_yy, eps_expected, driver,
                                            warm, problem.n_y, rng, ledger);
    update_warm(warm, y_tilde, x_prime, delta, c.mu_y);

    DeltaSubgradient out;
    out.feasible = true;
    out.value = eval_f(problem, x_prime, y_tilde, ledger);
    out.c = -eval_grad_x(problem, x_prime, y_tilde, ledger);
    out.delta = delta;
    return out;
}

std::int64_t practical_vaidya_iterations(int n, double R, double rho, double B, double eps_geo,
                                         double factor) {
    const double arg = std::max(B * std::pow(static_cast<double>(n), 1.5) * R / (rho * eps_geo),
                                3.0);
    return static_cast<std::int64_t>(std::ceil(factor * n * std::log(arg))) + 20;
}

namespace {

ApproachReport solve_small_common(const MixedOracleProblem& problem, double eps,
                                  const ApproachParams& params, SeededRng& rng,
                                  OracleLedger& ledger, bool minmax) {
    if (problem.n_x > params.n_x_guard && !params.override_dim_guard)
        throw InvalidParameter("small-dimension approach: n_x exceeds guard (override to force)");
    const FeasibleSet& set = problem.feasible_set;
    const auto& c = problem.constants;

    ApproachReport rep;
    rep.budget.eps = eps;
    rep.budget.delta = 0.5 * eps;
    const double delta_tilde = minmax ? 0.0 : invert_delta(eps, c);
    rep.budget.delta_tilde = delta_tilde;
    rep.budget.eps_y = minmax ? 0.5 * eps : delta_tilde;

    VaidyaParams vp = params.vaidya;
    if (vp.iterations <= 0)
        vp.iterations = practical_vaidya_iterations(problem.n_x, set.R, set.rho, set.B_bound,
                                                    0.5 * eps, params.practical_iteration_factor);

    InnerDriver driver = params.inner;
    driver.sigma = params.sigma_inner > 0.0
                       ? params.sigma_inner
                       : std::min(0.05, 1.0 / (4.0 * static_cast<double>(vp.iterations)));
    rep.budget.sigma_y = driver.sigma;

    InnerWarmState warm;
    const std::uint64_t f0 = ledger.first_calls, z0 = ledger.zeroth_calls;

    VaidyaOracle oracle = [&](const Vector& z) {
        if (!set.contains(z, 1e-12)) {
            DeltaSubgradient sep;
            sep.c = set.separating_direction(z);
            sep.feasible = false;
            return sep;
        }
        DeltaSubgradient d =
            minmax ? delta_subgrad_minmax(problem, z, 0.5 * eps, driver, warm, rng, ledger)
                   : delta_subgrad_minmin(problem, z, delta_tilde, driver, warm, rng, ledger);
        if (params.record_queries) rep.queries.push_back({z, d.c, d.delta, d.value});
        return d;
    };

    VaidyaResult res = vaidya_solve(oracle, set, vp, ledger);
    rep.stages.push_back({"vaidya-outer", ledger.first_calls - f0, ledger.zeroth_calls - z0});

    // Re-solve the inner problem at x_hat at the tightened accuracy eps; in
    // the decoupled case (D = 0) y = 0 is already exact.
    const std::uint64_t f1 = ledger.first_calls, z1 = ledger.zeroth_calls;
    Vector y_hat;
    if (!minmax && !std::isfinite(delta_tilde)) {
        y_hat = Vector::Zero(problem.n_y);
    } else {
        ZerothOracle inner = [&](const Vector& y) {
            const double v = eval_f(problem, res.x_hat, y, ledger);
            return minmax ? -v : v;
        };
        drift_warm(warm, res.x_hat, c.L_xy, c.mu_y);
        InnerDriver tight = driver;
        y_hat = warm_inner_solve(inner, res.x_hat, c.mu_y, c.L_yy, driver.sigma * eps, tight,
                                 warm, problem.n_y, rng, ledger);
    }
    rep.stages.push_back({"final-inner-resolve", ledger.first_calls - f1,
                          ledger.zeroth_calls - z1});

    rep.x_hat = res.x_hat;
    rep.y_hat = y_hat;
    rep.gap_estimate = res.report.predicted_gap_bound;
    rep.vaidya = std::move(res.report);
    rep.ledger.first_calls = ledger.first_calls - f0;
    rep.ledger.zeroth_calls = ledger.zeroth_calls - z0;
    return rep;
}

}  // namespace

ApproachReport solve_minmin_small(const MixedOracleProblem& problem, double eps,
                                  const ApproachParams& params, SeededRng& rng,
                                  OracleLedger& ledger) {
    if (problem.mode != InnerSense::MinMin)
        throw InvalidParameter("solve_minmin_small: problem must be MinMin");
    return solve_small_common(problem, eps, params, rng, ledger, /*minmax=*/false);
}

ApproachReport solve_minmax_small(const MixedOracleProblem& problem, double eps,
                                  const ApproachParams& params, SeededRng& rng,
                                  OracleLedger& ledger) {
    if (problem.mode != InnerSense::MinMax)
        throw InvalidParameter("solve_minmax_small: problem must be MinMax");
    return solve_small_common(problem, eps, params, rng, ledger, /*minmax=*/true);
}

LargeScalePlan plan_minmax_large(const MixedOracleProblem& problem, double eps, double sigma,
                                 const ApproachParams& params, double R_y0_sq) {
    const auto& c = problem.constants;
    if (c.mu_x <= 0.0 || c.mu_y <= 0.0)
        throw InvalidParameter("plan_minmax_large: requires mu_x > 0 and mu_y > 0");
    if (eps <= 0.0 || sigma <= 0.0 || sigma >= 1.0)
        throw InvalidParameter("plan_minmax_large: need eps > 0 and sigma in (0,1)");

    LargeScalePlan plan;
    plan.H1 = params.H1 > 0.0 ? params.H1 : c.L_yy;
    const double H1 = plan.H1;
    const double mu_in = c.mu_y + H1;
    const double L_in = c.L_yy + H1;
    plan.L_g = c.L_xx + 2.0 * c.L_xy * c.L_xy / mu_in;
    const double L_oracle = 2.0 * plan.L_g;
    const double s = params.safety;

    plan.eps_tilde = eps * params.eps_tilde_factor;

    // Error-propagation coefficients of the max-function, with the proximal
    // substitution (mu_y + H1, L_yy + H1).
    const double Cy = L_in / mu_in + 2.0 * c.L_xy * c.L_xy / (c.mu_x * mu_in);
    const double Cx = c.L_xy * c.L_xy * L_in / (c.mu_x * mu_in * mu_in) +
                      2.0 * std::pow(c.L_xy, 4) / (c.mu_x * c.mu_x * mu_in * mu_in);

    AccuracyBudget& b = plan.budget;
    b.eps = eps;
    b.sigma = sigma;
    b.eps_x = Cx > 0.0 ? std::min(plan.eps_tilde, plan.eps_tilde / (2.0 * s * Cx))
                       : plan.eps_tilde;
    // FGM noise constraint: (1 + sqrt(L/mu)) * 2 eps_y <= eps_x / 2.
    const double fgm_noise_cap = b.eps_x / (4.0 * (1.0 + std::sqrt(L_oracle / c.mu_x)));
    b.eps_y = std::min(plan.eps_tilde / (2.0 * s * Cy), fgm_noise_cap);
    b.delta = 2.0 * b.eps_y;

    // Outer iteration counts.
    const double L_h = c.L_yy + 2.0 * c.L_xy * c.L_xy / c.mu_x;
    const double C0 = 0.5 * L_h * R_y0_sq + eps;
    plan.catalyst_outer = catalyst_outer_iterations(H1, c.mu_y, C0, 0.25 * eps);

    const FeasibleSet& set = problem.feasible_set;
    const double R_sq = 2.0 * set.R * set.R;
    const double geo = std::max(4.0 * L_oracle * R_sq / (0.5 * b.eps_x), 4.0);
    plan.fgm_iterations = std::max<std::int64_t>(
        params.fgm_min_iterations,
        static_cast<std::int64_t>(
            std::ceil(1.0 + 2.0 * std::sqrt(L_oracle / c.mu_x) * std::log(geo))));

    // Union-bound confidence split: sigma >= N_cat (sigma_x + sigma_y) with
    // sigma_x = N_fgm sigma_y.
    b.sigma_y = sigma / (s * static_cast<double>(plan.catalyst_outer) *
                         (static_cast<double>(plan.fgm_iterations) + 1.0));
    b.sigma_x = static_cast<double>(plan.fgm_iterations) * b.sigma_y;
    return plan;
}

ApproachReport solve_minmax_large(const MixedOracleProblem& problem, double eps, double sigma,
                                  const ApproachParams& params, SeededRng& rng,
                                  OracleLedger& ledger) {
    if (problem.mode != InnerSense::MinMax)
        throw InvalidParameter("solve_minmax_large: problem must be MinMax");
    const FeasibleSet& set = problem.feasible_set;
    const auto& c = problem.constants;
    const double R_y0_sq = params.inner.R_y0_sq;
    const LargeScalePlan plan = plan_minmax_large(problem, eps, sigma, params, R_y0_sq);

    const std::uint64_t f0 = ledger.first_calls, z0 = ledger.zeroth_calls;

    Vector x_warm = set.interior_point();
    Vector y_start = params.inner.y_start.size() == problem.n_y ? params.inner.y_start
                                                                : Vector::Zero(problem.n_y);
    Vector x_hat = x_warm;

    CatalystSubsolver subsolver = [&](const Vector& z, double /*eps_sub*/) {
        InexactOracleConfig oc;
        oc.eps_y = plan.budget.eps_y;
        oc.sigma_y = plan.budget.sigma_y;
        oc.H1 = plan.H1;
        oc.z_center = z;
        oc.y_start = y_start;
        oc.R_y0_sq = 4.0 * (R_y0_sq + y_start.squaredNorm() + z.squaredNorm()) + 1.0;
        oc.tau = params.inner.tau;
        oc.max_restarts = params.inner.max_restarts;
        InexactOracle oracle = make_inexact_oracle(problem, oc, rng, ledger);

        FgmConfig fc;
        fc.L0 = std::max(c.mu_x, params.fgm_L0_fraction * oracle.L);
        fc.mu = c.mu_x;
        fc.delta = oracle.delta;
        fc.N = plan.fgm_iterations;
        fc.set = set;
        fc.R_sq = 2.0 * set.R * set.R;
        FgmResult fgm = fgm_solve(oracle, x_warm, fc, ledger);

        x_warm = fgm.x;
        x_hat = fgm.x;
        // The final line-search check already solved the inner problem at the
        // accepted x, so the oracle state holds y~(x_hat).
        y_start = oracle.last_inner();
        return y_start;
    };

    CatalystConfig cc;
    cc.H1 = plan.H1;
    cc.mu_y = c.mu_y;
    cc.eps_subproblem = plan.eps_tilde;
    cc.max_outer = plan.catalyst_outer;
    CatalystResult cat = catalyst_run(y_start, subsolver, cc);

    ApproachReport rep;
    rep.x_hat = x_hat;
    rep.y_hat = cat.y;
    rep.budget = plan.budget;
    rep.catalyst_outer = plan.catalyst_outer;
    rep.fgm_iterations = plan.fgm_iterations;
    rep.gap_estimate = eps;
    rep.ledger.first_calls = ledger.first_calls - f0;
    rep.ledger.zeroth_calls = ledger.zeroth_calls - z0;
    rep.stages.push_back({"catalyst", rep.ledger.first_calls, rep.ledger.zeroth_calls});
    return rep;
}

}  // namespace mixoracle
