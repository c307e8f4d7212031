#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdzeta/series.hpp"

#include <cmath>
#include <random>

using namespace mdzeta;

namespace {

const double kZeta2 = 1.6449340668482264365;  // pi^2/6
const double kZeta3 = 1.2020569031595942854;

// rational-arithmetic oracle for a depth-1 truncation
double depth1_oracle(const Cone& c, int s, long long X) {
    Rational sum = 0;
    for (const auto& e : enumerate_cone(c, X)) {
        Rational q(e.norm);
        Rational t = 1;
        for (int i = 0; i < s; ++i) t /= q;
        sum += t;
    }
    return to_double(to_real(sum));
}

}  // namespace

TEST_CASE("exponent vector validation") {
    CHECK_THROWS_AS(ExponentVector::make({2, 1}), std::invalid_argument);  // s_m = 1
    CHECK_THROWS_AS(ExponentVector::make({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ExponentVector::make({}), std::invalid_argument);
    CHECK(ExponentVector::make({1, 2}).weight() == 3);
    CHECK(ExponentVector::make({2}).str() == "(2)");
}

TEST_CASE("depth-1 values match the exact rational oracle") {
    Cone c5 = Cone::make(make_field(5));
    // norm ball of radius 20 holds norms {5, 11, 11, 19, 19, 20}
    SeriesResult r = mdzv_series(c5, ExponentVector::make({2}), 20);
    const double expected = 1.0 / 25 + 2.0 / 121 + 2.0 / 361 + 1.0 / 400;
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-14));
    CHECK(r.value == doctest::Approx(depth1_oracle(c5, 2, 20)).epsilon(1e-14));
    CHECK(r.termsUsed == 6);

    SeriesResult r12 = mdzv_series(c5, ExponentVector::make({2}), 12);
    CHECK(r12.value == doctest::Approx(1.0 / 25 + 2.0 / 121).epsilon(1e-14));

    for (long long X : {50LL, 200LL, 1000LL}) {
        SeriesResult rr = mdzv_series(c5, ExponentVector::make({3}), X);
        CHECK(rr.value == doctest::Approx(depth1_oracle(c5, 3, X)).epsilon(1e-13));
    }
}

TEST_CASE("depth-2 single admissible pair") {
    Cone c5 = Cone::make(make_field(5));
    // maxNorm 20: only sigma = 2 + 2 beta (norm 20), gamma = delta = 1 + beta
    SeriesResult r = mdzv_series(c5, ExponentVector::make({1, 2}), 20);
    CHECK(r.value == doctest::Approx(1.0 / (5.0 * 400.0)).epsilon(1e-14));
    CHECK(r.termsUsed == 1);
}

TEST_CASE("depth-2 equals the explicit double sum at small truncations") {
    for (long long d : {2LL, 5LL}) {
        Cone c = Cone::make(make_field(d));
        for (long long X : {100LL, 300LL}) {
            auto elems = enumerate_cone(c, X);
            double naive = 0;
            for (const auto& g : elems)
                for (const auto& h : elems) {
                    long long ns = c.norm_of(g.a + h.a, g.b + h.b);
                    if (ns <= X)
                        naive += 1.0 / (static_cast<double>(g.norm) * ns * ns);
                }
            SeriesResult r = mdzv_series(c, ExponentVector::make({1, 2}), X);
            CHECK(r.value == doctest::Approx(naive).epsilon(1e-12));
        }
    }
}

TEST_CASE("rejects divergent exponents and oversized budgets") {
    Cone c5 = Cone::make(make_field(5));
    CHECK_THROWS_AS(mdzv_series(c5, ExponentVector{{2, 1}}, 100), std::invalid_argument);
    CHECK_THROWS_AS(mdzv_series(c5, ExponentVector::make({1, 1, 2}), 100), std::invalid_argument);
    CHECK_THROWS_AS(mdzv_series(c5, ExponentVector::make({2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(mdzv_series(c5, ExponentVector::make({2}), 4'000'000'000'000LL),
                    std::invalid_argument);
}

TEST_CASE("values increase monotonically with the truncation") {
    Cone c2 = Cone::make(make_field(2));
    double prev12 = 0, prev2 = 0;
    for (long long X : {1000LL, 10000LL, 100000LL}) {
        double v2 = mdzv_series(c2, ExponentVector::make({2}), X).value;
        double v12 = mdzv_series(c2, ExponentVector::make({1, 2}), X).value;
        CHECK(v2 > prev2);
        CHECK(v12 > prev12);
        prev2 = v2;
        prev12 = v12;
    }
}

TEST_CASE("tail bounds are sound under 16x refinement") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<long long> xs(2000, 60000);
    for (long long d : {2LL, 3LL, 5LL, 13LL}) {
        Cone c = Cone::make(make_field(d));
        for (const auto& s : {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{1, 2}}) {
            ExponentVector ev = ExponentVector::make(s);
            for (int it = 0; it < 3; ++it) {
                long long X = xs(rng);
                SeriesResult a = mdzv_series(c, ev, X);
                SeriesResult b = mdzv_series(c, ev, 16 * X);
                CAPTURE(d);
                CAPTURE(X);
                CHECK(std::abs(b.value - a.value) <= a.tailBound);
                CHECK(a.tailEstimate <= a.tailBound);
                // the estimate should be in the right ballpark, not just below the bound
                CHECK(std::abs(b.value - a.value) <= 3.0 * std::max(a.tailEstimate, 1e-12));
            }
        }
    }
}

TEST_CASE("refine honors the previous tail bound") {
    Cone c5 = Cone::make(make_field(5));
    ExponentVector s2 = ExponentVector::make({2});
    SeriesResult r100 = mdzv_series(c5, s2, 100);
    SeriesResult r1000 = refine(r100, c5, s2, 1000);
    CHECK(std::abs(r1000.value - r100.value) <= r100.tailBound);
    CHECK_THROWS_AS(refine(r1000, c5, s2, 500), std::invalid_argument);

    // tail-corrected values stabilize to ~6 significant digits by 1e5 -> 1e6
    SeriesResult a = mdzv_series(c5, s2, 100000);
    SeriesResult b = mdzv_series(c5, s2, 1000000);
    double ca = a.value + a.tailEstimate, cb = b.value + b.tailEstimate;
    CHECK(std::abs(ca - cb) / cb < 2e-6);
}

TEST_CASE("classical series with Euler-Maclaurin corrections") {
    SeriesResult z2 = classical_mzv_series(ExponentVector::make({2}), 1000000);
    CHECK(std::abs(z2.value + z2.tailEstimate - kZeta2) < 1e-9);
    CHECK(std::abs(z2.value - kZeta2) <= z2.tailBound);

    SeriesResult z3 = classical_mzv_series(ExponentVector::make({3}), 10000);
    CHECK(std::abs(z3.value + z3.tailEstimate - kZeta3) < 1e-10);

    // zeta(1,2) = zeta(3): observed numerically, not assumed
    SeriesResult z12 = classical_mzv_series(ExponentVector::make({1, 2}), 10000);
    CHECK(std::abs(z12.value - kZeta3) <= z12.tailBound);
    CHECK(std::abs(z12.value + z12.tailEstimate - kZeta3) < 1e-5);

    CHECK_THROWS_AS(classical_mzv_series(ExponentVector{{2, 1}}, 100), std::invalid_argument);
}

TEST_CASE("parallel and serial summation agree exactly") {
    Cone c5 = Cone::make(make_field(5));
    ExponentVector s2 = ExponentVector::make({2});
    SeriesResult par = mdzv_series(c5, s2, 200000, true);
    SeriesResult ser = mdzv_series(c5, s2, 200000, false);
    CHECK(par.value == ser.value);
    CHECK(par.termsUsed == ser.termsUsed);
}
