#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdzeta/membrane.hpp"

#include <random>

using namespace mdzeta;

TEST_CASE("f0 closed form at t1 = t2 = 1") {
    Cone c5 = Cone::make(make_field(5));
    // x1 x2 = e^-2; x1^b1 x2^b2 = e^-Tr(beta) = e^-3
    Real expected = (1 / (exp(Real(2)) - 1)) * (1 / (exp(Real(3)) - 1));
    CHECK(abs(f0_closed(c5, 1, 1) - expected) < Real("1e-90"));
    CHECK(to_double(expected) == doctest::Approx(0.0082003125).epsilon(1e-7));

    Cone c2 = Cone::make(make_field(2));
    Real expected2 = (1 / (exp(Real(2)) - 1)) * (1 / (exp(Real(6)) - 1));
    CHECK(abs(f0_closed(c2, 1, 1) - expected2) < Real("1e-90"));
}

TEST_CASE("f0 symmetric specialization t1 = t2 = t") {
    Cone c13 = Cone::make(make_field(13));
    Real t("0.7");
    Real u = exp(-2 * t);
    Real v = exp(-Real(c13.trace()) * t);
    Real expected = (u / (1 - u)) * (v / (1 - v));
    CHECK(abs(f0_closed(c13, t, t) - expected) < Real("1e-85"));
}

TEST_CASE("f0 series: single term, decay, domain errors") {
    Cone c5 = Cone::make(make_field(5));
    // norm ball of radius 5 holds only 1 + beta, whose trace is 5
    F0Series one = f0_series(c5, 1, 1, 5);
    CHECK(one.termsUsed == 1);
    CHECK(abs(one.value - exp(Real(-5))) < Real("1e-90"));

    CHECK(f0_closed(c5, 40, 40) < Real("1e-16"));
    CHECK_THROWS_AS(f0_closed(c5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(f0_series(c5, Real(-1), Real(1), 100), std::invalid_argument);
}

TEST_CASE("f0 series matches the closed form with a certified tail") {
    const double grid[5] = {0.3, 0.5, 1.0, 2.0, 5.0};
    for (long long d : {2LL, 3LL, 5LL, 13LL}) {
        Cone c = Cone::make(make_field(d));
        for (double t1 : grid)
            for (double t2 : grid) {
                Real closed = f0_closed(c, t1, t2);
                F0Series ser = f0_series(c, t1, t2, 20000);
                CAPTURE(d);
                CAPTURE(t1);
                CAPTURE(t2);
                CHECK(abs(closed - ser.value) <= ser.tailBound + closed * Real("1e-80"));
                CHECK(to_double(abs(closed - ser.value) / closed) < 1e-12);
            }
    }
}

TEST_CASE("omega0 pullback is the constant beta2 - beta1") {
    Cone c5 = Cone::make(make_field(5));
    PulledBackForm w0(FormKind::Omega0, c5);
    Real expected = -sqrt(Real(5));  // beta2 - beta1 = -sqrt(Tr^2 - 4)
    for (double t1 : {0.4, 1.0, 3.3})
        for (double t2 : {0.7, 2.1}) {
            CHECK(abs(w0.t_coefficient_analytic(t1, t2) - expected) < Real("1e-49"));
        }

    Cone c2 = Cone::make(make_field(2));
    PulledBackForm w02(FormKind::Omega0, c2);
    CHECK(abs(w02.t_coefficient_analytic(1, 1) + sqrt(Real(32))) < Real("1e-48"));
}

TEST_CASE("omega0 constancy: sample standard deviation below 1e-20") {
    Cone c5 = Cone::make(make_field(5));
    PulledBackForm w0(FormKind::Omega0, c5);
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> unif(0.2, 5.0);
    std::vector<Real> vals;
    Real mean = 0;
    for (int i = 0; i < 40; ++i) {
        Real v = w0.t_coefficient_analytic(unif(rng), unif(rng));
        vals.push_back(v);
        mean += v;
    }
    mean /= static_cast<int>(vals.size());
    Real var = 0;
    for (const Real& v : vals) var += (v - mean) * (v - mean);
    CHECK(sqrt(var / static_cast<int>(vals.size())) < Real("1e-20"));
}

TEST_CASE("omega1 pullback equals f0 times the omega0 constant") {
    for (long long d : {2LL, 5LL}) {
        Cone c = Cone::make(make_field(d));
        PulledBackForm w1(FormKind::Omega1, c);
        Real gap = c.beta2() - c.beta1();
        for (double t1 : {0.5, 1.0, 2.0}) {
            Real lhs = w1.t_coefficient_analytic(t1, 1.0);
            Real rhs = f0_closed(c, t1, 1.0) * gap;
            CHECK(abs(lhs - rhs) < abs(rhs) * Real("1e-90"));
        }
    }
}

TEST_CASE("finite differences converge to the analytic coefficient at order 2") {
    Cone c5 = Cone::make(make_field(5));
    for (FormKind kind : {FormKind::Omega0, FormKind::Omega1}) {
        PulledBackForm w(kind, c5);
        Real t1("1.3"), t2("0.8");
        Real exact = w.t_coefficient_analytic(t1, t2);
        Real h("1e-3");
        Real e1 = abs(w.t_coefficient_fd(t1, t2, h) - exact);
        Real e2 = abs(w.t_coefficient_fd(t1, t2, h / 2) - exact);
        double order = to_double(log(e1 / e2) / log(Real(2)));
        CHECK(std::abs(order - 2.0) <= 0.2);
    }
    PulledBackForm w(FormKind::Omega0, c5);
    CHECK_THROWS_AS(w.t_coefficient_fd(Real("0.5"), Real("0.5"), Real("0.6")),
                    std::invalid_argument);
    CHECK_THROWS_AS(w.t_coefficient_fd(Real("0.5"), Real("0.5"), Real(0)), std::invalid_argument);
}

TEST_CASE("pullback_coefficient dispatches on h") {
    Cone c5 = Cone::make(make_field(5));
    PulledBackForm w0(FormKind::Omega0, c5);
    Real analytic = pullback_coefficient(w0, 1, 1, Real(0));
    Real fd = pullback_coefficient(w0, 1, 1, Real("1e-5"));
    CHECK(abs(analytic - fd) < Real("1e-9"));
}

TEST_CASE("exact squared gap identity (beta2-beta1)^2 = Tr^2 - 4") {
    for (long long d : {2LL, 3LL, 5LL, 13LL, 21LL}) {
        Cone c = Cone::make(make_field(d));
        const FieldElement& b = c.beta();
        Rational gap2 = 4 * b.b() * b.b() * d;  // (2 b sqrtD)^2
        CHECK(gap2 == b.trace() * b.trace() - 4 * b.norm());
        CHECK(abs(to_real(gap2) - (c.beta2() - c.beta1()) * (c.beta2() - c.beta1())) < Real("1e-88"));
    }
}

TEST_CASE("x-coordinate coefficient agrees with the double kernels") {
    Cone c5 = Cone::make(make_field(5));
    PulledBackForm w1(FormKind::Omega1, c5);
    PulledBackForm w0(FormKind::Omega0, c5);
    Real gap = c5.beta2() - c5.beta1();
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    for (int i = 0; i < 30; ++i) {
        double xa = unif(rng), xb = unif(rng);
        double xx = xa * xb;
        double yy = std::pow(xa, c5.beta1_d()) * std::pow(xb, c5.beta2_d());
        CHECK(to_double(w1.x_coefficient(xa, xb) / gap) ==
              doctest::Approx(omega1_x_reduced(xx, yy)).epsilon(1e-12));
        CHECK(to_double(w0.x_coefficient(xa, xb) / gap) ==
              doctest::Approx(omega0_x_reduced(xx)).epsilon(1e-12));
        CHECK(to_double(f0_closed(c5, 0.3 + xa, 0.3 + xb)) ==
              doctest::Approx(f0_closed_d(0.3 + xa, 0.3 + xb, c5.beta1_d(), c5.beta2_d()))
                  .epsilon(1e-13));
    }
}

TEST_CASE("ambient pole factors") {
    Cone c5 = Cone::make(make_field(5));
    PulledBackForm w0(FormKind::Omega0, c5);
    PulledBackForm w1(FormKind::Omega1, c5);
    CHECK(abs(w0.ambient_factor(Real("0.5"), Real("0.5"), Real("0.5"), Real("0.5")) - 16) <
          Real("1e-90"));
    CHECK(abs(w1.ambient_factor(Real("0.5"), Real("0.5"), Real("0.5"), Real("0.5")) -
              Real(16) / 9) < Real("1e-90"));
}

TEST_CASE("tangent limits of the membrane paths") {
    for (long long d : {2LL, 3LL, 5LL}) {
        Cone c = Cone::make(make_field(d));
        MembranePath g1(c.beta1()), g2(c.beta2());

        auto r1i = tangent_limit(g1, PathEnd::Infinity);
        CHECK(r1i.converged);
        CHECK(projective_residual(r1i.point, ProjectivePoint::make(1, 0)) < Real("1e-6"));

        auto r10 = tangent_limit(g1, PathEnd::Zero);
        CHECK(r10.converged);
        CHECK(projective_residual(r10.point, ProjectivePoint::make(1, c.beta1())) < Real("1e-6"));

        auto r2i = tangent_limit(g2, PathEnd::Infinity);
        CHECK(r2i.converged);
        CHECK(projective_residual(r2i.point, ProjectivePoint::make(0, 1)) < Real("1e-6"));

        auto r20 = tangent_limit(g2, PathEnd::Zero);
        CHECK(r20.converged);
        CHECK(projective_residual(r20.point, ProjectivePoint::make(1, c.beta2())) < Real("1e-6"));

        CHECK(r1i.sequence.size() >= 3);  // Cauchy refinement trail exists
    }
    // D = 5, gamma1 at 0: [1 : 2.6180339...]
    Cone c5 = Cone::make(make_field(5));
    auto r = tangent_limit(MembranePath(c5.beta1()), PathEnd::Zero);
    CHECK(to_double(r.point.v / r.point.u) == doctest::Approx(2.618033988749895).epsilon(1e-9));
}

TEST_CASE("projective points") {
    CHECK_THROWS_AS(ProjectivePoint::make(0, 0), std::invalid_argument);
    ProjectivePoint p = ProjectivePoint::make(2, 1);
    CHECK(p.u == 1);
    CHECK(abs(p.v - Real("0.5")) < Real("1e-95"));
    // scale invariance
    CHECK(projective_residual(p, ProjectivePoint::make(-4, -2)) < Real("1e-95"));
}
