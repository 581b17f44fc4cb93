#include "mixoracle/ardd.hpp"

#include <cmath>

namespace mixoracle {

ArddRun ardd_run(const ZerothOracle& objective, const Vector& x0, const ArddConfig& config,
                 SeededRng& rng, OracleLedger& ledger, bool trace) {
    if (config.L <= 0.0) throw InvalidParameter("ardd_run: L must be positive");
    if (config.N < 1) throw InvalidParameter("ardd_run: N must be >= 1");
    const int n = config.n > 0 ? config.n : static_cast<int>(x0.size());
    if (n != x0.size()) throw InvalidDimension("ardd_run: dimension mismatch with x0");
    const double tau = config.tau > 0.0 ? config.tau : default_smoothing_radius(x0);

    const std::uint64_t z0 = ledger.zeroth_calls;
    Vector y = x0;
    Vector w = x0;
    ArddRun out;
    if (trace) out.objective_trace.reserve(static_cast<std::size_t>(config.N));

    const double n2L = 96.0 * static_cast<double>(n) * static_cast<double>(n) * config.L;
    Vector e(n), x_next(n), probe(n);
    for (std::int64_t k = 0; k < config.N; ++k) {
        sample_unit_sphere_inplace(e, rng);
        const double t_k = 2.0 / (static_cast<double>(k) + 2.0);
        x_next = t_k * w;
        x_next.noalias() += (1.0 - t_k) * y;
        // Two-point estimate along e: s * e is the n-scaled gradient
        // approximation. The gradient step needs the raw directional
        // derivative <grad f, e> e (that is, s e / n); only the mirror step
        // uses the n-scaled version.
        probe = x_next;
        probe.noalias() += tau * e;
        const double s =
            (static_cast<double>(n) / tau) * (objective(probe) - objective(x_next));
        if (!std::isfinite(s))
            throw NumericalFailure("ardd_run: non-finite gradient estimate at iteration " +
                                   std::to_string(k));
        y = x_next;
        y.noalias() -= (0.5 * s / (config.L * static_cast<double>(n))) * e;
        const double alpha_next = (static_cast<double>(k) + 1.0) / n2L;
        w.noalias() -= (alpha_next * s) * e;
        if (!y.allFinite() || !w.allFinite())
            throw NumericalFailure("ardd_run: non-finite iterate at iteration " +
                                   std::to_string(k));
        if (trace) out.objective_trace.push_back(objective(y));
    }
    out.y_final = std::move(y);
    out.zeroth_calls = ledger.zeroth_calls - z0;
    return out;
}

double ArddscConfig::a_const() const {
    const double nn = static_cast<double>(n);
    // q = 2: rho_n = min{1, 16 ln n - 8}; the second term only bites at
    // n = 1 where it goes negative, so clamp to 1.
    double rho_n = std::min(1.0, 16.0 * std::log(nn) - 8.0);
    if (rho_n <= 0.0) rho_n = 1.0;
    return 384.0 * nn * nn * rho_n;
}

std::int64_t ArddscConfig::inner_iterations() const {
    if (mu <= 0.0 || L < mu) throw InvalidParameter("arddsc: need 0 < mu <= L");
    if (n < 1) throw InvalidDimension("arddsc: n must be >= 1");
    return static_cast<std::int64_t>(std::ceil(std::sqrt(8.0 * a_const() * L * Omega2 / mu)));
}

Vector arddsc_run(const ZerothOracle& objective, const Vector& x0, const ArddscConfig& config,
                  SeededRng& rng, OracleLedger& ledger) {
    if (config.restarts < 0) throw InvalidParameter("arddsc_run: restarts must be >= 0");
    Vector u = x0;
    if (config.restarts == 0) return u;
    const std::int64_t N0 = config.inner_iterations();
    ArddConfig inner;
    inner.L = config.L;
    inner.N = N0;
    inner.tau = config.tau;
    inner.n = config.n > 0 ? config.n : static_cast<int>(x0.size());
    // For p = 2 the restart-scaled prox d_k only moves the Bregman center to
    // u_k; the Euclidean mirror updates are unchanged beyond the start point.
    for (std::int64_t k = 0; k < config.restarts; ++k)
        u = ardd_run(objective, u, inner, rng, ledger).y_final;
    return u;
}

ArddscPlan arddsc_iterations_for(double eps, const ArddscConfig& config) {
    if (eps <= 0.0) throw InvalidParameter("arddsc_iterations_for: eps must be positive");
    const double initial = config.mu * config.R0_sq / 2.0;
    ArddscPlan plan;
    plan.restarts = 1;
    if (initial > eps)
        plan.restarts = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(std::ceil(std::log2(initial / eps))));
    plan.total_calls = plan.restarts * config.inner_iterations() * 2;
    return plan;
}

}  // namespace mixoracle
