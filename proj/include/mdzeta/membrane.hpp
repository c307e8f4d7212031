#pragma once

#include "mdzeta/cone.hpp"

#include <utility>
#include <vector>

namespace mdzeta {

// ---------------------------------------------------------------------------
// double-precision evaluators shared with the quadrature hot loops.
// Membrane parametrization: x_i = e^{-t_i}, y_i = x_i^{beta_i}; the 2-form
// coefficients split off the constant (beta2 - beta1) factor.
// ---------------------------------------------------------------------------

/// f0 from the precomputed products u = e^{-(t1+t2)}, v = e^{-(b1 t1 + b2 t2)}.
inline double f0_from_products(double u, double v) {
    return (u / (1.0 - u)) * (v / (1.0 - v));
}

inline double f0_closed_d(double t1, double t2, double b1, double b2) {
    return f0_from_products(std::exp(-(t1 + t2)), std::exp(-(b1 * t1 + b2 * t2)));
}

/// omega1 coefficient wrt dxa^dxb divided by (beta2-beta1);
/// xx = xa*xb, yy = xa^b1 * xb^b2.
inline double omega1_x_reduced(double xx, double yy) {
    return yy / ((1.0 - xx) * (1.0 - yy));
}

/// omega0 coefficient wrt dxa^dxb divided by (beta2-beta1); xx = xa*xb.
inline double omega0_x_reduced(double xx) { return 1.0 / xx; }

// ---------------------------------------------------------------------------
// High-precision lane.
// ---------------------------------------------------------------------------

Real f0_closed(const Cone& cone, const Real& t1, const Real& t2);

struct F0Series {
    Real value;
    Real tailBound;  // rigorous: trace comparison against a geometric series
    long long termsUsed = 0;
};

F0Series f0_series(const Cone& cone, const Real& t1, const Real& t2, long long maxNorm);

enum class FormKind { Omega0, Omega1 };

/// Evaluators for the 2-forms
///   omega1 = d(x_a x_b)/(1 - x_a x_b) ^ d(y_a y_b)/(1 - y_a y_b)
///   omega0 = d(x_a x_b)/(x_a x_b)     ^ d(y_a y_b)/(y_a y_b)
/// pulled back along the membrane (odd slot exponent beta1, even slot beta2),
/// plus the raw scalar pole factor on independent ambient coordinates.
class PulledBackForm {
public:
    PulledBackForm(FormKind kind, const Cone& cone);

    FormKind kind() const { return kind_; }
    const Real& beta1() const { return b1_; }
    const Real& beta2() const { return b2_; }

    /// Coefficient wrt dt1^dt2 from the analytic partial derivatives of
    /// (u, v) = (x1 x2, y1 y2) as functions of (t1, t2).
    Real t_coefficient_analytic(const Real& t1, const Real& t2) const;

    /// Same coefficient with the four partials replaced by central
    /// differences of step h. Throws on step underflow.
    Real t_coefficient_fd(const Real& t1, const Real& t2, const Real& h) const;

    /// Coefficient wrt dxa^dxb with y bound along the membrane
    /// (ya = xa^beta1, yb = xb^beta2).
    Real x_coefficient(const Real& xa, const Real& xb) const;

    /// Scalar pole factor with all four coordinates independent:
    /// omega1 -> 1/((1-xa xb)(1-ya yb)), omega0 -> 1/(xa xb ya yb).
    Real ambient_factor(const Real& xa, const Real& xb, const Real& ya, const Real& yb) const;

private:
    Real scalar_part(const Real& u, const Real& v) const;

    FormKind kind_;
    Real b1_, b2_;
};

/// Convenience: finite differences for h > 0, analytic derivatives for h = 0.
Real pullback_coefficient(const PulledBackForm& form, const Real& t1, const Real& t2,
                          const Real& h);

// ---------------------------------------------------------------------------
// Tangential base points.
// ---------------------------------------------------------------------------

struct ProjectivePoint {
    Real u, v;  // normalized so max(|u|, |v|) = 1

    static ProjectivePoint make(const Real& u, const Real& v);
};

/// |u v' - u' v| after max-normalization; zero iff equal in P^1.
Real projective_residual(const ProjectivePoint& p, const ProjectivePoint& q);

enum class PathEnd { Zero, Infinity };

/// The path gamma(t) = (e^{-t}, e^{-beta t}) into the (x, y) chart.
class MembranePath {
public:
    explicit MembranePath(Real beta_embedding);

    const Real& beta_embedding() const { return beta_; }
    std::pair<Real, Real> point(const Real& t) const;
    /// Central-difference velocity (dx/dt, dy/dt).
    std::pair<Real, Real> velocity(const Real& t) const;

private:
    Real beta_;
};

struct TangentLimitResult {
    ProjectivePoint point;
    bool converged = false;
    std::vector<ProjectivePoint> sequence;  // extrapolation trail, for diagnostics
};

/// Projective limit of [dx/dt : dy/dt] as t -> 0 or t -> infinity, by
/// evaluating along a geometric parameter sequence until Cauchy.
TangentLimitResult tangent_limit(const MembranePath& path, PathEnd end);

}  // namespace mdzeta
