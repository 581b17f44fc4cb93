#include "mixoracle/fgm.hpp"

#include <cmath>

namespace mixoracle {

Vector fgm_prox_step(const Vector& grad, const Vector& y_ref, const Vector& u_prev, double A_k,
                     double alpha_next, double mu, const FeasibleSet& set) {
    const double w = 1.0 + A_k * mu;
    const double denom = w + alpha_next * mu;
    const Vector unconstrained =
        (w * u_prev + alpha_next * mu * y_ref - alpha_next * grad) / denom;
    return set.project(unconstrained);
}

double fgm_geometric_bound(double L, double mu, double R_sq, std::int64_t N) {
    const double rate = mu > 0.0 ? std::sqrt(mu / L) : 0.0;
    return 2.0 * L * std::exp(-0.5 * (static_cast<double>(N) - 1.0) * rate) * R_sq;
}

FgmResult fgm_solve(const InexactOracle& oracle, const Vector& x0, const FgmConfig& config,
                    OracleLedger& /*ledger*/) {
    if (config.L0 <= 0.0) throw InvalidParameter("fgm_solve: L0 must be positive");
    if (config.N < 1) throw InvalidParameter("fgm_solve: N must be >= 1");

    Vector x = x0, y = x0, u = x0;
    double A = 0.0;
    double L_cur = config.L0;
    const double mu = config.mu;
    // The i_k = 0 branch halves L every iteration; under oracle noise that
    // drifts L to zero and the recovery burns the doubling cap. Any valid
    // oracle has L >= mu, and a quarter of the certified constant keeps the
    // adaptive range while making trial counts stable across runs.
    const double L_floor = std::max({mu, 0.25 * oracle.L, 1e-10 * config.L0});

    FgmReport rep;
    rep.iterations.reserve(static_cast<std::size_t>(config.N));

    for (std::int64_t k = 0; k < config.N; ++k) {
        int trials = 0;
        double L_next = std::max(0.5 * L_cur, L_floor);
        for (;; ++trials, L_next *= 2.0) {
            if (trials > config.max_doublings)
                throw LineSearchDiverged("fgm_solve: line search exceeded doubling cap");
            const double w = 1.0 + A * mu;
            const double alpha = (w + std::sqrt(w * w + 4.0 * L_next * A * w)) / (2.0 * L_next);
            const double A_next = A + alpha;
            const Vector y_next = (alpha * u + A * x) / A_next;
            const InexactOracleSample sy = oracle.sample(y_next);
            ++rep.sample_calls;
            const Vector u_next = fgm_prox_step(sy.grad, y_next, u, A, alpha, mu, config.set);
            const Vector x_next = (alpha * u_next + A * x) / A_next;
            const double vx = oracle.value_only ? oracle.value_only(x_next)
                                                : oracle.sample(x_next).value;
            ++rep.value_calls;
            const double dxy = (x_next - y_next).squaredNorm();
            // Tiny relative slack keeps roundoff from forcing spurious doublings
            // once the iterates coincide to machine precision.
            const double guard = 1e-13 * (1.0 + std::abs(vx) + std::abs(sy.value));
            if (vx <= sy.value + sy.grad.dot(x_next - y_next) + 0.5 * L_next * dxy +
                          config.delta + guard) {
                x = x_next;
                y = y_next;
                u = u_next;
                A = A_next;
                L_cur = L_next;
                break;
            }
        }
        rep.iterations.push_back({L_cur, A, trials + 1});
        rep.L_max = std::max(rep.L_max, L_cur);
    }

    rep.A_final = A;
    const double R_sq = config.R_sq > 0.0 ? config.R_sq : 2.0 * config.set.R * config.set.R;
    rep.predicted_gap = fgm_geometric_bound(rep.L_max, mu, R_sq, config.N);
    if (mu > 0.0)
        rep.predicted_gap += (1.0 + std::sqrt(rep.L_max / mu)) * config.delta;
    rep.sigma_total = static_cast<double>(config.N) * oracle.sigma;

    FgmResult out;
    out.x = std::move(x);
    out.report = std::move(rep);
    return out;
}

namespace {

struct InnerState {
    Vector y_tilde;
    Vector x_last;
    bool has_last = false;
    double resid_sq_bound = 0.0;  // bound on ||y_tilde - y*(x_last)||^2
};

}  // namespace

InexactOracle make_inexact_oracle(const MixedOracleProblem& problem,
                                  const InexactOracleConfig& config, SeededRng& rng,
                                  OracleLedger& ledger) {
    if (problem.mode != InnerSense::MinMax)
        throw InvalidParameter("make_inexact_oracle: problem must be MinMax");
    if (problem.constants.mu_x <= 0.0)
        throw InvalidParameter("make_inexact_oracle: requires mu_x > 0");
    if (config.eps_y <= 0.0 || config.sigma_y <= 0.0 || config.sigma_y >= 1.0)
        throw InvalidParameter("make_inexact_oracle: need eps_y > 0 and sigma_y in (0,1)");
    if (config.H1 < 0.0) throw InvalidParameter("make_inexact_oracle: H1 must be >= 0");
    if (config.H1 > 0.0 && config.z_center.size() != problem.n_y)
        throw InvalidDimension("make_inexact_oracle: z_center dimension mismatch");

    const auto& c = problem.constants;
    const double mu_in = c.mu_y + config.H1;
    const double L_in = c.L_yy + config.H1;
    const double L_g = c.L_xx + 2.0 * c.L_xy * c.L_xy / mu_in;

    auto state = std::make_shared<InnerState>();
    state->y_tilde = config.y_start.size() == problem.n_y ? config.y_start
                                                          : Vector::Zero(problem.n_y);

    // Markov conversion: expected accuracy sigma_y * eps_y yields an
    // (eps_y, sigma_y)-solution.
    const double eps_expected = config.sigma_y * config.eps_y;

    const MixedOracleProblem* prob = &problem;
    InexactOracleConfig cfg = config;
    SeededRng* rng_p = &rng;
    OracleLedger* led_p = &ledger;

    auto solve_inner = [state, prob, cfg, rng_p, led_p, mu_in, L_in,
                        eps_expected](const Vector& x) {
        ZerothOracle inner = [&, x](const Vector& y) {
            double v = eval_f(*prob, x, y, *led_p);
            if (cfg.H1 > 0.0) v -= 0.5 * cfg.H1 * (y - cfg.z_center).squaredNorm();
            return -v;
        };
        // Warm-start radius: previous residual plus the y*(x) Lipschitz drift,
        // capped by the cold-start bound.
        double R0_sq = cfg.R_y0_sq;
        if (state->has_last) {
            const double lip = prob->constants.L_xy / mu_in;
            const double drift = lip * lip * (x - state->x_last).squaredNorm();
            R0_sq = std::min(R0_sq, 2.0 * state->resid_sq_bound + 2.0 * drift);
        }
        const Vector start = state->has_last ? state->y_tilde
                                             : (cfg.y_start.size() == prob->n_y
                                                    ? cfg.y_start
                                                    : Vector::Zero(prob->n_y));
        if (L_in * R0_sq / 2.0 > eps_expected) {
            ArddscConfig ac;
            ac.mu = mu_in;
            ac.L = L_in;
            ac.R0_sq = R0_sq;
            ac.n = prob->n_y;
            ac.tau = cfg.tau;
            ac.restarts = std::min(cfg.max_restarts,
                                   arddsc_iterations_for(eps_expected, ac).restarts);
            state->y_tilde = arddsc_run(inner, start, ac, *rng_p, *led_p);
        } else {
            state->y_tilde = start;
        }
        state->x_last = x;
        state->has_last = true;
        state->resid_sq_bound = 2.0 * cfg.eps_y / mu_in;
    };

    auto regularized_value = [prob, cfg, led_p](const Vector& x, const Vector& y) {
        double v = eval_f(*prob, x, y, *led_p);
        if (cfg.H1 > 0.0) v -= 0.5 * cfg.H1 * (y - cfg.z_center).squaredNorm();
        return v;
    };

    InexactOracle oracle;
    oracle.L = 2.0 * L_g;
    oracle.mu = c.mu_x;
    oracle.delta = 2.0 * config.eps_y;
    oracle.sigma = config.sigma_y;
    oracle.sample = [state, prob, led_p, solve_inner, regularized_value, cfg,
                     L_g](const Vector& x) {
        solve_inner(x);
        InexactOracleSample s;
        s.value = regularized_value(x, state->y_tilde);
        s.grad = eval_grad_x(*prob, x, state->y_tilde, *led_p);
        s.delta = 2.0 * cfg.eps_y;
        s.sigma = cfg.sigma_y;
        return s;
    };
    oracle.value_only = [state, solve_inner, regularized_value](const Vector& x) {
        solve_inner(x);
        return regularized_value(x, state->y_tilde);
    };
    oracle.last_inner = [state]() { return state->y_tilde; };
    return oracle;
}

}  // namespace mixoracle
