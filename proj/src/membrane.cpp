#include "mdzeta/membrane.hpp"

#include <stdexcept>

namespace mdzeta {

namespace {

void require_positive_t(const Real& t1, const Real& t2) {
    if (t1 <= 0 || t2 <= 0) throw std::invalid_argument("f0: t1, t2 must be > 0 (divergent otherwise)");
}

}  // namespace

Real f0_closed(const Cone& cone, const Real& t1, const Real& t2) {
    require_positive_t(t1, t2);
    Real u = exp(-(t1 + t2));
    Real v = exp(-(cone.beta1() * t1 + cone.beta2() * t2));
    return (u / (1 - u)) * (v / (1 - v));
}

F0Series f0_series(const Cone& cone, const Real& t1, const Real& t2, long long maxNorm) {
    require_positive_t(t1, t2);
    F0Series out;
    out.value = 0;
    for (const ConeElement& g : enumerate_cone(cone, maxNorm)) {
        auto [g1, g2] = g.value.embed();
        out.value += exp(-(t1 * g1 + t2 * g2));
        ++out.termsUsed;
    }
    // Excluded elements have Tr(gamma) > 2 sqrt(maxNorm), and the number of
    // cone elements of trace j is at most j, so the tail is dominated by
    // sum_{j >= j0} j x^j with x = e^{-min(t1,t2)}.
    Real m = t1 < t2 ? t1 : t2;
    Real x = exp(-m);
    long long j0 = static_cast<long long>(2.0 * std::sqrt(static_cast<double>(maxNorm))) + 1;
    Real xj = pow(x, j0);
    out.tailBound = xj * (Real(j0) - Real(j0 - 1) * x) / ((1 - x) * (1 - x));
    return out;
}

PulledBackForm::PulledBackForm(FormKind kind, const Cone& cone)
    : kind_(kind), b1_(cone.beta1()), b2_(cone.beta2()) {}

Real PulledBackForm::scalar_part(const Real& u, const Real& v) const {
    if (kind_ == FormKind::Omega0) return 1 / (u * v);
    return 1 / ((1 - u) * (1 - v));
}

Real PulledBackForm::t_coefficient_analytic(const Real& t1, const Real& t2) const {
    require_positive_t(t1, t2);
    Real u = exp(-(t1 + t2));
    Real v = exp(-(b1_ * t1 + b2_ * t2));
    Real du1 = -u, du2 = -u;
    Real dv1 = -b1_ * v, dv2 = -b2_ * v;
    return scalar_part(u, v) * (du1 * dv2 - du2 * dv1);
}

Real PulledBackForm::t_coefficient_fd(const Real& t1, const Real& t2, const Real& h) const {
    require_positive_t(t1, t2);
    if (h <= 0 || t1 - h <= 0 || t2 - h <= 0)
        throw std::invalid_argument("pullback: invalid finite-difference step");
    auto u_at = [&](const Real& a, const Real& b) { return exp(-(a + b)); };
    auto v_at = [&](const Real& a, const Real& b) { return exp(-(b1_ * a + b2_ * b)); };
    Real two_h = 2 * h;
    Real du1 = (u_at(t1 + h, t2) - u_at(t1 - h, t2)) / two_h;
    Real du2 = (u_at(t1, t2 + h) - u_at(t1, t2 - h)) / two_h;
    Real dv1 = (v_at(t1 + h, t2) - v_at(t1 - h, t2)) / two_h;
    Real dv2 = (v_at(t1, t2 + h) - v_at(t1, t2 - h)) / two_h;
    if (du1 == 0 || dv2 == 0)
        throw std::runtime_error("pullback: finite-difference step underflow");
    return scalar_part(u_at(t1, t2), v_at(t1, t2)) * (du1 * dv2 - du2 * dv1);
}

Real PulledBackForm::x_coefficient(const Real& xa, const Real& xb) const {
    if (xa <= 0 || xb <= 0) throw std::invalid_argument("pullback: x coordinates must be > 0");
    Real u = xa * xb;
    Real v = pow(xa, b1_) * pow(xb, b2_);
    Real du_a = xb, du_b = xa;
    Real dv_a = b1_ * v / xa, dv_b = b2_ * v / xb;
    return scalar_part(u, v) * (du_a * dv_b - du_b * dv_a);
}

Real PulledBackForm::ambient_factor(const Real& xa, const Real& xb, const Real& ya,
                                    const Real& yb) const {
    if (kind_ == FormKind::Omega0) return 1 / (xa * xb * ya * yb);
    return 1 / ((1 - xa * xb) * (1 - ya * yb));
}

Real pullback_coefficient(const PulledBackForm& form, const Real& t1, const Real& t2,
                          const Real& h) {
    if (h == 0) return form.t_coefficient_analytic(t1, t2);
    return form.t_coefficient_fd(t1, t2, h);
}

ProjectivePoint ProjectivePoint::make(const Real& u, const Real& v) {
    Real au = abs(u), av = abs(v);
    Real m = au > av ? au : av;
    if (m == 0) throw std::invalid_argument("ProjectivePoint: [0:0] is not a point");
    return ProjectivePoint{u / m, v / m};
}

Real projective_residual(const ProjectivePoint& p, const ProjectivePoint& q) {
    return abs(p.u * q.v - q.u * p.v);
}

MembranePath::MembranePath(Real beta_embedding) : beta_(std::move(beta_embedding)) {
    if (beta_ <= 0) throw std::invalid_argument("MembranePath: beta embedding must be > 0");
}

std::pair<Real, Real> MembranePath::point(const Real& t) const {
    return {exp(-t), exp(-beta_ * t)};
}

std::pair<Real, Real> MembranePath::velocity(const Real& t) const {
    Real h = t * Real("1e-30");
    Real two_h = 2 * h;
    auto [xp, yp] = point(t + h);
    auto [xm, ym] = point(t - h);
    return {(xp - xm) / two_h, (yp - ym) / two_h};
}

TangentLimitResult tangent_limit(const MembranePath& path, PathEnd end) {
    TangentLimitResult out{ProjectivePoint{Real(1), Real(0)}, false, {}};
    const Real tol("1e-40");
    Real t = 1;
    int streak = 0;
    const int k_max = end == PathEnd::Infinity ? 60 : 140;
    for (int k = 0; k <= k_max; ++k) {
        auto [dx, dy] = path.velocity(t);
        ProjectivePoint p = ProjectivePoint::make(dx, dy);
        if (!out.sequence.empty()) {
            Real r = projective_residual(out.sequence.back(), p);
            streak = r < tol ? streak + 1 : 0;
        }
        out.sequence.push_back(p);
        if (streak >= 2) {
            out.point = p;
            out.converged = true;
            return out;
        }
        t = end == PathEnd::Infinity ? t * 2 : t / 2;
    }
    out.point = out.sequence.back();
    return out;
}

}  // namespace mdzeta
