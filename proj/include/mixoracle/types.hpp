#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "mixoracle/errors.hpp"

namespace mixoracle {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Monotone counters for the two oracle types. Every f(x,y) evaluation
/// increments zeroth_calls exactly once, every grad_x f(x,y) evaluation
/// increments first_calls exactly once.
struct OracleLedger {
    std::uint64_t zeroth_calls = 0;
    std::uint64_t first_calls = 0;
};

/// Constants of Assumptions 1(s)/2: strong convexity/concavity moduli and
/// the three block-smoothness constants, plus the min-min deviation bound
/// D = max over X of f(x, 0) - g(x) (user-supplied where computable).
struct SmoothnessConstants {
    double mu_x = 0.0;
    double mu_y = 1.0;
    double L_xx = 1.0;
    double L_xy = 0.0;
    double L_yy = 1.0;
    double D = 0.0;
};

/// Outer feasible set X: axis-aligned box or Euclidean ball, together with
/// the descriptors the cutting-plane analysis needs (enclosing radius R
/// around the origin, contained-ball radius rho, objective oscillation
/// bound B over X).
class FeasibleSet {
  public:
    enum class Kind { Box, Ball };

    static FeasibleSet box(Vector lower, Vector upper);
    static FeasibleSet ball(Vector center, double radius);

    Kind kind() const { return kind_; }
    int dim() const {
        return static_cast<int>(kind_ == Kind::Box ? lower_.size() : center_.size());
    }

    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }
    const Vector& center() const { return center_; }
    double radius() const { return radius_; }

    // Enclosing-ball radius around the origin.
    double R = 0.0;
    // Radius of a Euclidean ball contained in the set.
    double rho = 0.0;
    // Oscillation bound |g(x) - g(x')| <= B over the set; problem-dependent,
    // set by the caller.
    double B_bound = 0.0;

    bool contains(const Vector& x, double tol = 0.0) const;
    Vector project(const Vector& x) const;

    /// For z outside the set, a direction c with c'x >= c'z for all x in X.
    Vector separating_direction(const Vector& z) const;

    /// An interior point (box midpoint / ball center).
    Vector interior_point() const;

  private:
    FeasibleSet() = default;
    Kind kind_ = Kind::Box;
    Vector lower_, upper_;   // box
    Vector center_;          // ball
    double radius_ = 0.0;    // ball
};

inline FeasibleSet FeasibleSet::box(Vector lower, Vector upper) {
    if (lower.size() != upper.size() || lower.size() == 0)
        throw InvalidParameter("box bounds must have equal positive length");
    if ((upper - lower).minCoeff() <= 0.0)
        throw InvalidParameter("box must have positive side lengths");
    FeasibleSet s;
    s.kind_ = Kind::Box;
    s.lower_ = std::move(lower);
    s.upper_ = std::move(upper);
    // Farthest corner from the origin encloses the box.
    double r2 = 0.0;
    for (Eigen::Index i = 0; i < s.lower_.size(); ++i) {
        const double m = std::max(std::abs(s.lower_[i]), std::abs(s.upper_[i]));
        r2 += m * m;
    }
    s.R = std::sqrt(r2);
    s.rho = 0.5 * (s.upper_ - s.lower_).minCoeff();
    return s;
}

inline FeasibleSet FeasibleSet::ball(Vector center, double radius) {
    if (center.size() == 0) throw InvalidParameter("ball center must be nonempty");
    if (radius <= 0.0) throw InvalidParameter("ball radius must be positive");
    FeasibleSet s;
    s.kind_ = Kind::Ball;
    s.center_ = std::move(center);
    s.radius_ = radius;
    s.R = s.center_.norm() + radius;
    s.rho = radius;
    return s;
}

inline bool FeasibleSet::contains(const Vector& x, double tol) const {
    if (kind_ == Kind::Box) {
        for (Eigen::Index i = 0; i < x.size(); ++i)
            if (x[i] < lower_[i] - tol || x[i] > upper_[i] + tol) return false;
        return true;
    }
    return (x - center_).norm() <= radius_ + tol;
}

inline Vector FeasibleSet::project(const Vector& x) const {
    if (kind_ == Kind::Box) return x.cwiseMax(lower_).cwiseMin(upper_);
    const Vector d = x - center_;
    const double n = d.norm();
    if (n <= radius_) return x;
    return center_ + (radius_ / n) * d;
}

inline Vector FeasibleSet::separating_direction(const Vector& z) const {
    if (kind_ == Kind::Box) {
        // One violated facet is enough; pick the most violated one.
        int worst = -1;
        double worst_gap = 0.0;
        double sign = 1.0;
        for (Eigen::Index i = 0; i < z.size(); ++i) {
            if (z[i] < lower_[i] && lower_[i] - z[i] > worst_gap) {
                worst = static_cast<int>(i);
                worst_gap = lower_[i] - z[i];
                sign = 1.0;
            }
            if (z[i] > upper_[i] && z[i] - upper_[i] > worst_gap) {
                worst = static_cast<int>(i);
                worst_gap = z[i] - upper_[i];
                sign = -1.0;
            }
        }
        if (worst < 0) throw InvalidParameter("separating_direction: point is inside the box");
        Vector c = Vector::Zero(z.size());
        c[worst] = sign;
        return c;
    }
    const Vector d = center_ - z;
    const double n = d.norm();
    if (n <= radius_) throw InvalidParameter("separating_direction: point is inside the ball");
    return d / n;
}

inline Vector FeasibleSet::interior_point() const {
    if (kind_ == Kind::Box) return 0.5 * (lower_ + upper_);
    return center_;
}

enum class InnerSense { MinMin, MinMax };

/// Mixed-oracle problem: exact gradients in the outer block x, function
/// values only in the inner block y.
struct MixedOracleProblem {
    int n_x = 0;
    int n_y = 0;
    std::function<double(const Vector&, const Vector&)> f;
    std::function<Vector(const Vector&, const Vector&)> grad_x;
    InnerSense mode = InnerSense::MinMin;
    SmoothnessConstants constants;
    FeasibleSet feasible_set = FeasibleSet::box(Vector::Constant(1, -1.0), Vector::Constant(1, 1.0));
};

/// Zeroth-order oracle call.
inline double eval_f(const MixedOracleProblem& p, const Vector& x, const Vector& y,
                     OracleLedger& ledger) {
    ++ledger.zeroth_calls;
    const double v = p.f(x, y);
    if (!std::isfinite(v))
        throw NumericalFailure("eval_f: non-finite value at queried point");
    return v;
}

/// First-order oracle call (outer block only).
inline Vector eval_grad_x(const MixedOracleProblem& p, const Vector& x, const Vector& y,
                          OracleLedger& ledger) {
    ++ledger.first_calls;
    Vector g = p.grad_x(x, y);
    if (!g.allFinite())
        throw NumericalFailure("eval_grad_x: non-finite gradient at queried point");
    return g;
}

/// Default forward-difference smoothing radius.
inline double default_smoothing_radius(const Vector& y) {
    return std::sqrt(std::numeric_limits<double>::epsilon()) * (1.0 + y.norm());
}

}  // namespace mixoracle
