#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdzeta/cone.hpp"

#include <random>

using namespace mdzeta;

TEST_CASE("cone_element") {
    Cone c5 = Cone::make(make_field(5));
    ConeElement e = cone_element(c5, 1, 1);
    CHECK(e.value == element(c5.field(), Rational(5, 2), Rational(1, 2)));  // 1 + beta
    CHECK(e.norm == 5);
    CHECK(e.value.norm() == 5);

    CHECK(cone_element(c5, 2, 1).norm == 11);
    CHECK_THROWS_AS(cone_element(c5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(cone_element(c5, 1, -2), std::invalid_argument);

    auto [s1, s2] = e.value.embed();
    CHECK(s1 > 0);
    CHECK(s2 > 0);
}

TEST_CASE("norm_form coefficients and identity") {
    Cone c5 = Cone::make(make_field(5));
    NormForm q5 = norm_form(c5);
    CHECK(q5.a2 == 1);
    CHECK(q5.ab == 3);
    CHECK(q5.b2 == 1);

    Cone c2 = Cone::make(make_field(2));
    NormForm q2 = norm_form(c2);
    CHECK(q2.ab == 6);
    CHECK(q2.b2 == 1);

    // Q(1,1) = 1 + 3 + 1 = 5 = N(1 + beta)
    CHECK(c5.norm_of(1, 1) == 5);
    CHECK(cone_element(c5, 1, 1).value.norm() == 5);
}

TEST_CASE("enumerate_cone small cases") {
    Cone c5 = Cone::make(make_field(5));
    auto v = enumerate_cone(c5, 12);
    REQUIRE(v.size() == 3);
    CHECK(v[0].a == 1);
    CHECK(v[0].b == 1);
    CHECK(v[0].norm == 5);
    CHECK(v[1].norm == 11);
    CHECK(v[2].norm == 11);
    CHECK(v[1].a == 1);  // (norm, a) order
    CHECK(v[2].a == 2);

    CHECK(enumerate_cone(c5, 4).empty());

    Cone c2 = Cone::make(make_field(2));
    auto w = enumerate_cone(c2, 8);
    REQUIRE(w.size() == 1);
    CHECK(w[0].a == 1);
    CHECK(w[0].b == 1);
    CHECK(w[0].norm == 8);
}

TEST_CASE("enumeration is complete against a box scan") {
    std::mt19937 rng(11);
    for (long long d : {2LL, 5LL, 13LL, 21LL}) {
        Cone c = Cone::make(make_field(d));
        std::uniform_int_distribution<long long> xs(5, 4000);
        for (int it = 0; it < 8; ++it) {
            long long X = xs(rng);
            auto fast = enumerate_cone(c, X);
            size_t count = 0;
            long long lim = static_cast<long long>(std::sqrt(static_cast<double>(X))) + 1;
            for (long long a = 1; a <= lim; ++a)
                for (long long b = 1; b <= lim; ++b)
                    if (c.norm_of(a, b) <= X) ++count;
            CHECK(fast.size() == count);
            for (const auto& e : fast) CHECK(e.norm <= X);
        }
    }
}

TEST_CASE("norm form is strictly monotone in each argument") {
    Cone c = Cone::make(make_field(13));
    for (long long a = 1; a < 30; ++a)
        for (long long b = 1; b < 30; ++b) {
            CHECK(c.norm_of(a + 1, b) > c.norm_of(a, b));
            CHECK(c.norm_of(a, b + 1) > c.norm_of(a, b));
        }
}

TEST_CASE("component-wise sums represent element sums") {
    Cone c = Cone::make(make_field(5));
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> ab(1, 50);
    for (int it = 0; it < 30; ++it) {
        long long a1 = ab(rng), b1 = ab(rng), a2 = ab(rng), b2 = ab(rng);
        FieldElement sum = cone_element(c, a1, b1).value + cone_element(c, a2, b2).value;
        CHECK(sum == cone_element(c, a1 + a2, b1 + b2).value);
    }
}

TEST_CASE("custom beta is validated and normalized") {
    auto f5 = make_field(5);
    // beta = (3+sqrt5)/2 given as its conjugate: normalized back to sigma1 > 1
    Cone c = Cone::make(f5, element(f5, Rational(3, 2), Rational(-1, 2)));
    CHECK(c.beta() == element(f5, Rational(3, 2), Rational(1, 2)));
    CHECK(c.trace() == 3);

    // beta^2 is a legal generator with trace 7
    Cone c2 = Cone::make(f5, element(f5, Rational(7, 2), Rational(3, 2)));
    CHECK(c2.trace() == 7);

    CHECK_THROWS_AS(Cone::make(f5, element(f5, 1, 0)), std::invalid_argument);   // beta = 1
    CHECK_THROWS_AS(Cone::make(f5, element(f5, 2, 0)), std::invalid_argument);   // not a unit
    CHECK_THROWS_AS(Cone::make(f5, element(f5, Rational(1, 2), Rational(1, 2))),
                    std::invalid_argument);  // fundamental unit, norm -1: not totally positive
    auto f2 = make_field(2);
    CHECK_THROWS_AS(Cone::make(f2, element(f2, 1, 1)), std::invalid_argument);  // 1+sqrt2
}
