#include "mixoracle/vaidya.hpp"

#include <cmath>
#include <numbers>

namespace mixoracle {

double vaidya_certified_iterations(int n, double R, double rho, double B, double gamma, double eps_geo) {
    if (n < 1 || R <= 0.0 || rho <= 0.0 || gamma <= 0.0 || eps_geo <= 0.0)
        throw InvalidParameter("vaidya_certified_iterations: all arguments must be positive");
    const double nn = static_cast<double>(n);
    const double arg = B * std::pow(nn, 1.5) * R / (gamma * rho * eps_geo);
    const double N = (2.0 * nn / gamma) * std::log(std::max(arg, 1.0)) +
                     std::log(std::numbers::pi) / gamma;
    return std::max(N, 1.0);
}

double vaidya_certified_gap_bound(int n, double R, double rho, double B, double gamma, double N,
                          double delta) {
    const double nn = static_cast<double>(n);
    return B * std::pow(nn, 1.5) * R / (gamma * rho) *
               std::exp((std::log(std::numbers::pi) - gamma * N) / (2.0 * nn)) +
           delta;
}

VaidyaState vaidya_init(int n, double R, const VaidyaParams& params) {
    auto [poly, omega] = initial_simplex(n, R);
    VaidyaState st;
    st.poly = std::move(poly);
    st.z = std::move(omega);
    st.eta = params.eta;
    st.gamma = params.gamma;
    st.m_max = params.m_max > 0 ? params.m_max : 10 * n + 20;
    st.recentre_opts = params.recentre;
    return st;
}

VaidyaStepKind vaidya_step(VaidyaState& state, const VaidyaOracle& oracle) {
    const Polytope& poly = state.poly;
    const int n = poly.n();
    const Vector s = poly.slacks(state.z);
    if (s.minCoeff() <= 0.0) throw NotInterior("vaidya_step: iterate left the interior");

    const Matrix H = log_barrier_hessian(poly, state.z);
    const auto llt = factor_barrier_hessian(H);
    Vector sigma(poly.m());
    for (int i = 0; i < poly.m(); ++i) {
        const Vector a = poly.A.row(i).transpose();
        sigma[i] = a.dot(llt.solve(a)) / (s[i] * s[i]);
    }

    int i_min = 0;
    for (int i = 1; i < poly.m(); ++i)
        if (sigma[i] < sigma[i_min]) i_min = i;  // ties keep the lowest index

    ++state.iteration;

    // Never shrink below a simplex worth of rows; a smaller system could
    // leave the polytope unbounded.
    if (sigma[i_min] < state.gamma && poly.m() > n + 1) {
        state.poly.remove_row(i_min);
        ++state.n_remove;
        state.z = recentre(state.poly, state.z, state.recentre_opts);
        return VaidyaStepKind::Removed;
    }

    DeltaSubgradient reply = oracle(state.z);
    if (reply.c.size() != n)
        throw InvalidParameter("vaidya_step: oracle returned a direction of wrong dimension");
    if (!reply.c.allFinite())
        throw NumericalFailure("vaidya_step: oracle returned a non-finite direction");
    if (reply.feasible) {
        ++state.n_feasible_queries;
        state.max_delta_seen = std::max(state.max_delta_seen, reply.delta);
        if (reply.value < state.best_value) {
            state.best_value = reply.value;
            state.best_point = state.z;
        }
    } else {
        ++state.n_infeasible_queries;
    }

    const double q = reply.c.dot(llt.solve(reply.c));
    if (!(q > 0.0))
        throw CenteringFailure("vaidya_step: c'H^{-1}c is not positive");
    const double target = 0.5 * std::sqrt(state.eta * state.gamma);
    const double slack_new = std::sqrt(q / target);
    const double beta = reply.c.dot(state.z) - slack_new;

    state.poly.append_row(reply.c, beta);
    ++state.n_add;
    if (state.poly.m() > state.m_max)
        throw BudgetExceeded("vaidya_step: polytope row count exceeded m_max");
    state.z = recentre(state.poly, state.z, state.recentre_opts);
    return VaidyaStepKind::Added;
}

VaidyaResult vaidya_solve(const VaidyaOracle& oracle, const FeasibleSet& set,
                          const VaidyaParams& params, OracleLedger& ledger) {
    const int n = set.dim();
    const double theory_N =
        params.eps_geometric > 0.0
            ? vaidya_certified_iterations(n, set.R, set.rho, set.B_bound, params.gamma,
                                  params.eps_geometric)
            : 0.0;
    std::int64_t planned = params.iterations;
    if (planned <= 0) {
        if (params.eps_geometric <= 0.0)
            throw InvalidParameter("vaidya_solve: need iterations or eps_geometric");
        planned = static_cast<std::int64_t>(std::ceil(theory_N));
    }
    const bool over_budget = planned > params.max_iterations;
    const std::int64_t to_run = over_budget ? params.max_iterations : planned;

    VaidyaState st = vaidya_init(n, set.R, params);
    const std::uint64_t first0 = ledger.first_calls;
    const std::uint64_t zeroth0 = ledger.zeroth_calls;

    VaidyaReport rep;
    rep.iterations_planned = planned;
    rep.theory_iterations = theory_N;
    rep.theory_certified = params.theory_certified();
    for (std::int64_t k = 0; k < to_run; ++k) {
        const auto kind = vaidya_step(st, oracle);
        if (params.record_trajectory) {
            rep.trajectory.push_back({st.z, volumetric_barrier(st.poly, st.z), kind,
                                      kind == VaidyaStepKind::Added});
        }
    }

    rep.iterations_run = to_run;
    rep.n_add = st.n_add;
    rep.n_remove = st.n_remove;
    rep.n_feasible_queries = st.n_feasible_queries;
    rep.n_infeasible_queries = st.n_infeasible_queries;
    rep.first_calls = ledger.first_calls - first0;
    rep.zeroth_calls = ledger.zeroth_calls - zeroth0;
    rep.best_value = st.best_value;
    rep.predicted_gap_bound = vaidya_certified_gap_bound(n, set.R, set.rho, set.B_bound, params.gamma,
                                                 static_cast<double>(to_run), st.max_delta_seen);

    VaidyaResult result;
    result.report = std::move(rep);
    result.x_hat = st.best_point ? *st.best_point : set.project(st.z);
    if (!st.best_point)
        result.report.best_value = std::numeric_limits<double>::quiet_NaN();
    if (over_budget)
        throw VaidyaBudgetExceeded("vaidya_solve: required iterations exceed max_iterations",
                                   std::move(result));
    return result;
}

}  // namespace mixoracle
