#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdzeta/quadfield.hpp"

#include <random>

using namespace mdzeta;

namespace {

bool squarefree(long long d) {
    for (long long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("make_field validates D") {
    auto f5 = make_field(5);
    CHECK(f5->ring_basis() == RingBasis::HalfInteger);
    CHECK(f5->discriminant() == 5);
    CHECK(abs(f5->sqrt_d() * f5->sqrt_d() - 5) < Real("1e-95"));
    CHECK(real_str(f5->sqrt_d(), 8).substr(0, 9) == "2.2360680");

    auto f2 = make_field(2);
    CHECK(f2->ring_basis() == RingBasis::Integer);
    CHECK(f2->discriminant() == 8);

    CHECK_THROWS_AS(make_field(12), std::invalid_argument);  // 4 | 12
    CHECK_THROWS_AS(make_field(4), std::invalid_argument);
    CHECK_THROWS_AS(make_field(9), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(-5), std::invalid_argument);
    CHECK_THROWS_AS(make_field(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(5, 101), std::invalid_argument);
}

TEST_CASE("embed") {
    auto f5 = make_field(5);
    auto [a1, a2] = element(f5, 1, 0).embed();
    CHECK(a1 == 1);
    CHECK(a2 == 1);

    auto [b1, b2] = element(f5, Rational(3, 2), Rational(1, 2)).embed();
    CHECK(abs(b1 - Real("2.618033988749894848204586834365638117720309179805762862135")) < Real("1e-50"));
    CHECK(abs(b2 - Real("0.381966011250105151795413165634361882279690820194237137864")) < Real("1e-50"));

    auto f2 = make_field(2);
    auto [c1, c2] = element(f2, 0, 1).embed();
    CHECK(abs(c1 - Real("1.41421356237309504880168872420969807856967187537694")) < Real("1e-48"));
    CHECK(c2 == -c1);
}

TEST_CASE("norm and trace") {
    auto f5 = make_field(5);
    FieldElement beta = element(f5, Rational(3, 2), Rational(1, 2));
    CHECK(beta.norm() == 1);
    CHECK(beta.trace() == 3);

    FieldElement g = element(f5, Rational(5, 2), Rational(1, 2));
    CHECK(g.norm() == 5);

    auto f2 = make_field(2);
    CHECK(element(f2, 1, 1).norm() == -1);
}

TEST_CASE("norm equals product of embeddings") {
    auto f13 = make_field(13);
    FieldElement x = element(f13, Rational(7, 2), Rational(3, 2));
    auto [s1, s2] = x.embed();
    CHECK(abs(s1 * s2 - to_real(x.norm())) < Real("1e-90"));
}

TEST_CASE("fundamental unit, small fields") {
    CHECK(fundamental_unit(make_field(2)) == element(make_field(2), 1, 1));            // 1+sqrt2
    CHECK(fundamental_unit(make_field(3)) == element(make_field(3), 2, 1));            // 2+sqrt3
    CHECK(fundamental_unit(make_field(5)) == element(make_field(5), Rational(1, 2), Rational(1, 2)));
    CHECK(fundamental_unit(make_field(13)) == element(make_field(13), Rational(3, 2), Rational(1, 2)));
}

TEST_CASE("continued fraction agrees with the direct Pell search, D <= 50") {
    for (long long d = 2; d <= 50; ++d) {
        if (!squarefree(d)) continue;
        CAPTURE(d);
        auto f = make_field(d);
        FieldElement cf = fundamental_unit(f);
        FieldElement bf = fundamental_unit_bruteforce(f);
        CHECK(cf == bf);
        CHECK(cf.is_unit());
        CHECK(cf.sigma1() > 1);
    }
}

TEST_CASE("totally positive unit") {
    auto f5 = make_field(5);
    FieldElement b5 = totally_positive_unit(f5);
    CHECK(b5 == element(f5, Rational(3, 2), Rational(1, 2)));  // eps^2, norm(eps) = -1

    auto f2 = make_field(2);
    CHECK(totally_positive_unit(f2) == element(f2, 3, 2));  // (1+sqrt2)^2

    auto f3 = make_field(3);
    CHECK(totally_positive_unit(f3) == element(f3, 2, 1));  // eps itself, norm +1

    for (long long d : {2LL, 3LL, 5LL, 13LL, 17LL, 19LL, 46LL}) {
        auto f = make_field(d);
        FieldElement b = totally_positive_unit(f);
        CHECK(b.norm() == 1);
        auto [s1, s2] = b.embed();
        CHECK(s1 > 1);
        CHECK(s2 > 0);
        CHECK(s2 < 1);
        // norm 1 forces sigma2 = 1/sigma1
        CHECK(abs(s2 - 1 / s1) < Real("1e-90"));
    }
}

TEST_CASE("is_totally_positive is an exact sign test") {
    auto f2 = make_field(2);
    CHECK_FALSE(element(f2, 1, 1).is_totally_positive());  // 1 - sqrt2 < 0
    CHECK(element(f2, 3, 2).is_totally_positive());
    CHECK_FALSE(element(f2, 0, 0).is_totally_positive());
    // values where sigma2 is tiny: 3363 - 2378 sqrt2 = 1/(3363+2378 sqrt2)
    CHECK(element(f2, 3363, -2378).is_totally_positive());
    CHECK_FALSE(element(f2, 3363, -2379).is_totally_positive());
}

TEST_CASE("algebraic integer test follows the ring basis") {
    auto f5 = make_field(5);
    CHECK(element(f5, Rational(1, 2), Rational(1, 2)).is_algebraic_integer());
    CHECK_FALSE(element(f5, Rational(1, 2), 0).is_algebraic_integer());
    CHECK_FALSE(element(f5, 0, Rational(1, 2)).is_algebraic_integer());
    CHECK(element(f5, 2, 3).is_algebraic_integer());
    CHECK_FALSE(element(f5, Rational(1, 3), 0).is_algebraic_integer());

    auto f2 = make_field(2);
    CHECK(element(f2, 1, 1).is_algebraic_integer());
    CHECK_FALSE(element(f2, Rational(1, 2), Rational(1, 2)).is_algebraic_integer());
}

TEST_CASE("property: norm is multiplicative, embeddings are homomorphisms") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    for (long long d : {2LL, 5LL, 13LL}) {
        auto f = make_field(d);
        for (int it = 0; it < 50; ++it) {
            FieldElement x = element(f, Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            FieldElement y = element(f, Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            CHECK((x * y).norm() == x.norm() * y.norm());
            auto [x1, x2] = x.embed();
            auto [y1, y2] = y.embed();
            auto [p1, p2] = (x * y).embed();
            CHECK(abs(p1 - x1 * y1) < Real("1e-48"));
            CHECK(abs(p2 - x2 * y2) < Real("1e-48"));
        }
    }
}

TEST_CASE("inverse and conjugate") {
    auto f5 = make_field(5);
    FieldElement b = element(f5, Rational(3, 2), Rational(1, 2));
    FieldElement inv = b.inverse();
    CHECK(b * inv == element(f5, 1, 0));
    CHECK(inv == b.conjugate());  // norm 1
    CHECK_THROWS_AS(element(f5, 0, 0).inverse(), std::domain_error);
}
