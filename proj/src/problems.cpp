#include "mixoracle/problems.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace mixoracle {

ProblemFamily problem_family_from_string(const std::string& s) {
    if (s == "quad_minmin") return ProblemFamily::QuadMinMin;
    if (s == "quad_saddle") return ProblemFamily::QuadSaddle;
    if (s == "lse_saddle") return ProblemFamily::LogSumExpSaddle;
    throw InvalidSpec("unknown problem family: " + s);
}

std::string to_string(ProblemFamily f) {
    switch (f) {
        case ProblemFamily::QuadMinMin: return "quad_minmin";
        case ProblemFamily::QuadSaddle: return "quad_saddle";
        case ProblemFamily::LogSumExpSaddle: return "lse_saddle";
    }
    return "?";
}

namespace {

Matrix random_orthogonal(int n, SeededRng& rng) {
    Matrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Matrix> qr(G);
    Matrix Q = qr.householderQ();
    return Q;
}

/// SPD matrix whose extreme eigenvalues are exactly (lo, hi); interior
/// eigenvalues uniform in between.
Matrix spd_with_spectrum(int n, double lo, double hi, SeededRng& rng) {
    if (lo <= 0.0 || hi < lo) throw InvalidSpec("spd_with_spectrum: need 0 < lo <= hi");
    Vector eig(n);
    if (n == 1) {
        eig[0] = hi;
    } else {
        eig[0] = lo;
        eig[n - 1] = hi;
        for (int i = 1; i < n - 1; ++i) eig[i] = rng.uniform(lo, hi);
    }
    const Matrix Q = random_orthogonal(n, rng);
    Matrix M = Q * eig.asDiagonal() * Q.transpose();
    return 0.5 * (M + M.transpose());
}

/// Random coupling with operator norm exactly L_xy (zero if L_xy = 0).
Matrix coupling_with_norm(int rows, int cols, double L_xy, SeededRng& rng) {
    Matrix B = Matrix::Zero(rows, cols);
    if (L_xy <= 0.0) return B;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) B(i, j) = rng.gaussian();
    const double s = Eigen::JacobiSVD<Matrix>(B).singularValues()(0);
    return B * (L_xy / s);
}

Vector random_in_box(int n, double halfwidth, double shrink, SeededRng& rng) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.uniform(-1.0, 1.0) * halfwidth * shrink;
    return v;
}

/// Max of a convex function over the box by vertex enumeration.
double max_over_box_vertices(const std::function<double(const Vector&)>& fn, int n,
                             double halfwidth) {
    if (n > 20) throw InvalidSpec("vertex enumeration capped at n_x <= 20");
    Vector v(n);
    double best = -std::numeric_limits<double>::infinity();
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < n; ++i)
            v[i] = (mask >> i) & 1 ? halfwidth : -halfwidth;
        best = std::max(best, fn(v));
    }
    return best;
}

struct QuadData {
    Matrix A, B, C;
    Vector a, b;
    Eigen::LLT<Matrix> lltC;
    Eigen::LLT<Matrix> lltA;
};

// u' M v without temporaries (column-major friendly); the synthetic
// objectives sit in the innermost zeroth-order loop.
double quad_form(const Matrix& M, const Vector& u, const Vector& v) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
        double t = 0.0;
        for (Eigen::Index i = 0; i < M.rows(); ++i) t += u[i] * M(i, j);
        s += t * v[j];
    }
    return s;
}

}  // namespace

GeneratedProblem generate_problem(const ProblemSpec& spec, SeededRng& rng) {
    if (spec.n_x < 1 || spec.n_y < 1) throw InvalidSpec("dimensions must be positive");
    if (spec.mu_y <= 0.0 || spec.L_yy < spec.mu_y) throw InvalidSpec("need 0 < mu_y <= L_yy");
    if (spec.mu_x < 0.0 || (spec.mu_x > 0.0 && spec.L_xx < spec.mu_x))
        throw InvalidSpec("need mu_x <= L_xx");
    if (spec.L_xy < 0.0) throw InvalidSpec("L_xy must be >= 0");
    if (spec.box_halfwidth <= 0.0) throw InvalidSpec("box_halfwidth must be positive");

    GeneratedProblem out;
    const int nx = spec.n_x, ny = spec.n_y;
    const double w = spec.box_halfwidth;

    auto data = std::make_shared<QuadData>();
    data->C = spd_with_spectrum(ny, spec.mu_y, spec.L_yy, rng);
    data->B = coupling_with_norm(nx, ny, spec.L_xy, rng);
    data->lltC = Eigen::LLT<Matrix>(data->C);

    FeasibleSet set = FeasibleSet::box(Vector::Constant(nx, -w), Vector::Constant(nx, w));

    if (spec.family == ProblemFamily::QuadMinMin || spec.family == ProblemFamily::QuadSaddle) {
        data->A = spd_with_spectrum(nx, std::max(spec.mu_x, 1e-12), spec.L_xx, rng);
        data->lltA = Eigen::LLT<Matrix>(data->A);

        // Place the unconstrained solution well inside the box.
        out.x_star = random_in_box(nx, w, 0.4, rng);
        out.y_star = random_in_box(ny, 1.0, 1.0, rng);

        const bool saddle = spec.family == ProblemFamily::QuadSaddle;
        if (!saddle) {
            // Joint convexity of [[A, B], [B', C]] requires A - B C^{-1} B' >= 0;
            // mu_x mu_y >= L_xy^2 guarantees it for every instance.
            if (spec.L_xy * spec.L_xy > spec.mu_x * spec.mu_y * (1.0 + 1e-12))
                throw InvalidSpec("quad_minmin knobs violate joint convexity: need "
                                  "L_xy^2 <= mu_x * mu_y");
            const Matrix S = data->A - data->B * data->lltC.solve(data->B.transpose());
            const double lmin =
                Eigen::SelfAdjointEigenSolver<Matrix>(S).eigenvalues().minCoeff();
            if (lmin < -1e-10)
                throw InvalidSpec("quad_minmin instance is not jointly convex");
        }

        // Back-solve the linear terms so (x*, y*) is the stationary pair.
        data->a = -(data->A * out.x_star + data->B * out.y_star);
        data->b = saddle ? Vector(data->C * out.y_star - data->B.transpose() * out.x_star)
                         : Vector(-data->C * out.y_star - data->B.transpose() * out.x_star);

        const double ysign = saddle ? -1.0 : 1.0;
        auto f = [data, ysign](const Vector& x, const Vector& y) {
            return 0.5 * quad_form(data->A, x, x) + quad_form(data->B, x, y) +
                   ysign * 0.5 * quad_form(data->C, y, y) + data->a.dot(x) + data->b.dot(y);
        };
        auto grad_x = [data](const Vector& x, const Vector& y) {
            Vector g = data->a;
            g.noalias() += data->A * x;
            g.noalias() += data->B * y;
            return g;
        };

        out.problem.n_x = nx;
        out.problem.n_y = ny;
        out.problem.f = f;
        out.problem.grad_x = grad_x;
        out.problem.mode = saddle ? InnerSense::MinMax : InnerSense::MinMin;
        out.f_star = f(out.x_star, out.y_star);

        if (saddle) {
            // g(x) = 1/2 x'Ax + a'x + 1/2 (B'x + b)' C^{-1} (B'x + b)
            out.g = [data](const Vector& x) {
                const Vector v = data->B.transpose() * x + data->b;
                return 0.5 * x.dot(data->A * x) + data->a.dot(x) +
                       0.5 * v.dot(data->lltC.solve(v));
            };
            const double wbox = w;
            out.h = [data, wbox](const Vector& y) {
                const Vector rhs = data->B * y + data->a;
                const Vector xmin = -data->lltA.solve(rhs);
                if (xmin.lpNorm<Eigen::Infinity>() > wbox)
                    throw NumericalFailure("h(y): unconstrained x-minimizer left the box");
                return -0.5 * rhs.dot(data->lltA.solve(rhs)) - 0.5 * y.dot(data->C * y) +
                       data->b.dot(y);
            };
        } else {
            // g(x) = 1/2 x'Ax + a'x - 1/2 (B'x + b)' C^{-1} (B'x + b)
            out.g = [data](const Vector& x) {
                const Vector v = data->B.transpose() * x + data->b;
                return 0.5 * x.dot(data->A * x) + data->a.dot(x) -
                       0.5 * v.dot(data->lltC.solve(v));
            };
        }
    } else {
        // Log-sum-exp saddle: f = tau ln sum_j exp(r_j'x / tau) + mu_x/2 ||x||^2
        //                       + x'By - 1/2 y'Cy + b'y
        if (spec.mu_x <= 0.0) throw InvalidSpec("lse_saddle requires mu_x > 0");
        const double tau = spec.lse_temperature;
        if (tau <= 0.0) throw InvalidSpec("lse temperature must be positive");
        const int J = 2 * nx;
        Matrix R(J, nx);
        for (int i = 0; i < J; ++i)
            for (int j = 0; j < nx; ++j) R(i, j) = rng.gaussian();
        // Scale rows so the smoothness bound ||R||^2 / tau matches L_xx - mu_x.
        const double target = spec.L_xx > spec.mu_x ? spec.L_xx - spec.mu_x : 0.5;
        const double snorm = Eigen::JacobiSVD<Matrix>(R).singularValues()(0);
        R *= std::sqrt(target * tau) / snorm;
        out.lse_rows = R;
        data->b = random_in_box(ny, 1.0, 0.5, rng);
        const double mu_x = spec.mu_x;

        auto lse = [R, tau](const Vector& x) {
            const Vector t = R * x / tau;
            const double m = t.maxCoeff();
            return tau * (m + std::log((t.array() - m).exp().sum()));
        };
        auto lse_grad = [R, tau](const Vector& x) {
            const Vector t = R * x / tau;
            const double m = t.maxCoeff();
            Vector p = (t.array() - m).exp();
            p /= p.sum();
            return Vector(R.transpose() * p);
        };

        auto f = [data, lse, mu_x](const Vector& x, const Vector& y) {
            return lse(x) + 0.5 * mu_x * x.squaredNorm() + quad_form(data->B, x, y) -
                   0.5 * quad_form(data->C, y, y) + data->b.dot(y);
        };
        auto grad_x = [data, lse_grad, mu_x](const Vector& x, const Vector& y) {
            return Vector(lse_grad(x) + mu_x * x + data->B * y);
        };
        out.problem.n_x = nx;
        out.problem.n_y = ny;
        out.problem.f = f;
        out.problem.grad_x = grad_x;
        out.problem.mode = InnerSense::MinMax;

        out.g = [data, lse, mu_x](const Vector& x) {
            const Vector v = data->B.transpose() * x + data->b;
            return lse(x) + 0.5 * mu_x * x.squaredNorm() + 0.5 * v.dot(data->lltC.solve(v));
        };
        // Reference solve of min_X g by projected gradient at the exact
        // gradient; harness-side ground truth only.
        auto g_grad = [data, lse_grad, mu_x](const Vector& x) {
            const Vector v = data->B.transpose() * x + data->b;
            return Vector(lse_grad(x) + mu_x * x + data->B * data->lltC.solve(v));
        };
        const double L_ref = spec.L_xx + spec.L_xy * spec.L_xy / spec.mu_y;
        Vector x = Vector::Zero(nx);
        for (int it = 0; it < 200000; ++it) {
            const Vector xn = set.project(x - (1.0 / L_ref) * g_grad(x));
            const double move = (xn - x).norm();
            x = xn;
            if (move < 1e-14) break;
        }
        out.x_star = x;
        out.y_star = data->lltC.solve(data->B.transpose() * x + data->b);
        out.f_star = out.g(out.x_star);
    }

    // Declared constants and set descriptors.
    SmoothnessConstants cs;
    cs.mu_x = spec.mu_x;
    cs.mu_y = spec.mu_y;
    cs.L_xx = spec.L_xx;
    cs.L_xy = spec.L_xy;
    cs.L_yy = spec.L_yy;

    if (spec.family == ProblemFamily::QuadMinMin) {
        // D = max_X [ f(x, 0) - g(x) ] = max_X 1/2 (B'x + b)' C^{-1} (B'x + b)
        auto dev = [data](const Vector& x) {
            const Vector v = data->B.transpose() * x + data->b;
            return 0.5 * v.dot(data->lltC.solve(v));
        };
        cs.D = max_over_box_vertices(dev, nx, w);
    }

    // Oscillation of g over the box: convex g peaks at a vertex.
    const double g_max = max_over_box_vertices(out.g, nx, w);
    set.B_bound = std::max(g_max - out.f_star, 1e-12);
    out.problem.feasible_set = set;
    out.problem.constants = cs;

    // sup_X ||y*(x)||: ||C^{-1}|| (L_xy ||x|| + ||b||), with the right sign
    // convention per family.
    {
        const double bnorm = data->b.norm();
        const double xnorm = std::sqrt(static_cast<double>(nx)) * w;
        const double yb = (spec.L_xy * xnorm + bnorm) / spec.mu_y;
        out.R_y0_sq = 1.1 * yb * yb + 1.0;
    }

    out.A = data->A;
    out.B = data->B;
    out.C = data->C;
    out.lin_a = data->a;
    out.lin_b = data->b;
    return out;
}

}  // namespace mixoracle
