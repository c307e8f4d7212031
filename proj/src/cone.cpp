#include "mdzeta/cone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdzeta {

Cone::Cone(FieldPtr field, FieldElement beta) : field_(std::move(field)), beta_(std::move(beta)) {
    Rational tr = beta_.trace();
    if (denominator(tr) != 1) throw std::invalid_argument("Cone: Tr(beta) must be a rational integer");
    if (numerator(tr) > 1'000'000'000 || numerator(tr) < 3)
        throw std::invalid_argument("Cone: Tr(beta) out of supported range");
    trace_ = static_cast<long long>(numerator(tr));
    auto [b1, b2] = beta_.embed();
    beta1_ = b1;
    beta2_ = b2;
    beta1_dbl_ = to_double(b1);
    beta2_dbl_ = to_double(b2);
}

Cone Cone::make(const FieldPtr& f) { return Cone(f, totally_positive_unit(f)); }

Cone Cone::make(const FieldPtr& f, FieldElement beta) {
    if (!beta.is_unit()) throw std::invalid_argument("Cone: beta is not a unit of O_K");
    if (!beta.is_totally_positive()) throw std::invalid_argument("Cone: beta is not totally positive");
    if (beta.is_one()) throw std::invalid_argument("Cone: beta must differ from 1");
    // Totally positive unit has norm +1, so 1/beta is the conjugate.
    if ((beta - element(f, 1, 0)).sign() < 0) beta = beta.conjugate();
    return Cone(f, std::move(beta));
}

ConeElement cone_element(const Cone& cone, long long a, long long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("cone_element: a and b must be >= 1");
    FieldElement v = cone.beta() * Rational(b) + element(cone.field(), Rational(a), 0);
    return ConeElement{a, b, cone.norm_of(a, b), std::move(v)};
}

NormForm norm_form(const Cone& cone) {
    return NormForm{Rational(1), cone.beta().trace(), cone.beta().norm()};
}

long long cone_b_max(long long trace, long long a, long long max_norm) {
    if (a * a + trace * a + 1 > max_norm) return 0;
    double t = static_cast<double>(trace) * a;
    double disc = t * t - 4.0 * (static_cast<double>(a) * a - static_cast<double>(max_norm));
    long long b = static_cast<long long>((-t + std::sqrt(std::max(disc, 0.0))) / 2.0) + 2;
    while (b >= 1 && a * a + trace * a * b + b * b > max_norm) --b;
    return b;
}

std::vector<ConeElement> enumerate_cone(const Cone& cone, long long max_norm) {
    std::vector<ConeElement> out;
    const long long T = cone.trace();
    for (long long a = 1; a * a + T * a + 1 <= max_norm; ++a) {
        long long bmax = cone_b_max(T, a, max_norm);
        for (long long b = 1; b <= bmax; ++b) out.push_back(cone_element(cone, a, b));
    }
    std::sort(out.begin(), out.end(), [](const ConeElement& x, const ConeElement& y) {
        return x.norm != y.norm ? x.norm < y.norm : x.a < y.a;
    });
    return out;
}

}  // namespace mdzeta
