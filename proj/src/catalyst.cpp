#include "mixoracle/catalyst.hpp"

#include <cmath>

namespace mixoracle {

double catalyst_alpha_next(double alpha_prev, double q) {
    if (!(alpha_prev > 0.0 && alpha_prev <= 1.0))
        throw InvalidParameter("catalyst_alpha_next: alpha_prev must be in (0, 1]");
    if (!(q > 0.0 && q < 1.0))
        throw InvalidParameter("catalyst_alpha_next: q must be in (0, 1)");
    // alpha^2 + (alpha_prev^2 - q) alpha - alpha_prev^2 = 0
    const double b = alpha_prev * alpha_prev - q;
    const double disc = std::sqrt(b * b + 4.0 * alpha_prev * alpha_prev);
    const double alpha = b <= 0.0 ? 0.5 * (-b + disc)
                                  : 2.0 * alpha_prev * alpha_prev / (b + disc);
    return alpha;
}

CatalystResult catalyst_run(const Vector& y0, const CatalystSubsolver& subsolver,
                            const CatalystConfig& config) {
    if (config.H1 <= 0.0) throw InvalidParameter("catalyst_run: H1 must be positive");
    if (config.mu_y <= 0.0) throw InvalidParameter("catalyst_run: mu_y must be positive");
    if (config.max_outer < 1) throw InvalidParameter("catalyst_run: max_outer must be >= 1");

    const double q = config.q();
    double alpha_prev = config.alpha0 > 0.0 ? config.alpha0 : std::sqrt(q);

    Vector y_prev = y0;
    Vector z = y0;
    Vector y = y0;

    CatalystResult out;
    out.report.outer.reserve(static_cast<std::size_t>(config.max_outer));
    for (std::int64_t k = 0; k < config.max_outer; ++k) {
        y = subsolver(z, config.eps_subproblem);
        if (!y.allFinite())
            throw NumericalFailure("catalyst_run: subsolver returned non-finite point at outer " +
                                   std::to_string(k));
        const double alpha = catalyst_alpha_next(alpha_prev, q);
        const double beta =
            alpha_prev * (1.0 - alpha_prev) / (alpha_prev * alpha_prev + alpha);
        z = y + beta * (y - y_prev);
        out.report.outer.push_back({alpha, beta, config.eps_subproblem});
        y_prev = y;
        alpha_prev = alpha;
    }
    out.y = std::move(y);
    return out;
}

std::int64_t catalyst_outer_iterations(double H1, double mu_y, double C0, double eps) {
    if (H1 <= 0.0 || mu_y <= 0.0 || eps <= 0.0)
        throw InvalidParameter("catalyst_outer_iterations: arguments must be positive");
    const double ratio = std::max(C0 / eps, 1.0);
    const double n = std::sqrt((mu_y + H1) / mu_y) * std::log(ratio) + 1.0;
    return static_cast<std::int64_t>(std::ceil(n));
}

}  // namespace mixoracle
