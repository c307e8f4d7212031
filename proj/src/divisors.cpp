#include "mdzeta/divisors.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mdzeta {

namespace {

std::string coord_name(int idx) {
    return (idx < 6 ? "x" : "y") + std::to_string(idx % 6 + 1);
}

DivisorComponent listed(DivFamily fam, DivEq eq, int i, int j = -1) {
    DivisorComponent c;
    c.family = fam;
    c.kind = DivKind::Listed;
    c.eq = eq;
    c.i = i;
    c.j = j;
    switch (eq) {
        case DivEq::ProductOne: c.label = coord_name(i) + coord_name(j) + "=1"; break;
        case DivEq::CoordZero: c.label = coord_name(i) + "=0"; break;
        case DivEq::CoordOne: c.label = coord_name(i) + "=1"; break;
        case DivEq::CoordEq: c.label = coord_name(i) + "=" + coord_name(j); break;
        case DivEq::CoordInf: c.label = coord_name(i) + "=inf"; break;
        default: break;
    }
    return c;
}

constexpr const char* kBlowupRecipe =
    "exceptional divisors of the blow-ups at pairwise intersections of listed "
    "components sharing a variable or a constant; kept as an unexpanded placeholder";

}  // namespace

std::vector<DivisorComponent> catalog_A() {
    std::vector<DivisorComponent> out;
    // poles of the 1/(1 - x_a x_b) and 1/(1 - y_a y_b) factors of the two omega1
    out.push_back(listed(DivFamily::A, DivEq::ProductOne, 0, 1));   // x1x2=1
    out.push_back(listed(DivFamily::A, DivEq::ProductOne, 6, 7));   // y1y2=1
    out.push_back(listed(DivFamily::A, DivEq::ProductOne, 2, 3));   // x3x4=1
    out.push_back(listed(DivFamily::A, DivEq::ProductOne, 8, 9));   // y3y4=1
    // poles of the dlog factors of omega0
    out.push_back(listed(DivFamily::A, DivEq::CoordZero, 4));   // x5=0
    out.push_back(listed(DivFamily::A, DivEq::CoordZero, 5));   // x6=0
    out.push_back(listed(DivFamily::A, DivEq::CoordZero, 10));  // y5=0
    out.push_back(listed(DivFamily::A, DivEq::CoordZero, 11));  // y6=0
    for (int i = 0; i < 6; ++i) out.push_back(listed(DivFamily::A, DivEq::CoordInf, i));
    for (int i = 6; i < 12; ++i) out.push_back(listed(DivFamily::A, DivEq::CoordInf, i));
    DivisorComponent exc;
    exc.label = "A-exceptional";
    exc.family = DivFamily::A;
    exc.kind = DivKind::Exceptional;
    exc.note = kBlowupRecipe;
    out.push_back(exc);
    return out;
}

std::vector<DivisorComponent> catalog_B(const Cone& cone) {
    std::vector<DivisorComponent> out;
    // four chains: x-odd, x-even, y-odd, y-even; each 0 -> equalities -> 1
    const int chains[4][3] = {{0, 2, 4}, {1, 3, 5}, {6, 8, 10}, {7, 9, 11}};
    for (const auto& ch : chains) {
        out.push_back(listed(DivFamily::B, DivEq::CoordZero, ch[0]));
        out.push_back(listed(DivFamily::B, DivEq::CoordEq, ch[0], ch[1]));
        out.push_back(listed(DivFamily::B, DivEq::CoordEq, ch[1], ch[2]));
        out.push_back(listed(DivFamily::B, DivEq::CoordOne, ch[2]));
    }
    auto tangential = [&](const char* lbl, int xi, const Real& pu, const Real& pv,
                          const char* note) {
        DivisorComponent c;
        c.label = lbl;
        c.family = DivFamily::B;
        c.kind = DivKind::TangentialCodim2;
        c.i = xi;
        c.j = xi + 6;
        c.tangentialPoint = ProjectivePoint::make(pu, pv);
        c.note = note;
        out.push_back(c);
    };
    tangential("B1", 0, Real(1), Real(0), "on the blow-up of (x1=0) & (y1=0): [x1:y1]=[1:0]");
    tangential("B2", 1, Real(0), Real(1), "on the blow-up of (x2=0) & (y2=0): [x2:y2]=[0:1]");
    tangential("B5", 4, Real(1), cone.beta1(), "on the blow-up of (x5=1) & (y5=1): [x5:y5]=[1:beta1]");
    tangential("B6", 5, Real(1), cone.beta2(), "on the blow-up of (x6=1) & (y6=1): [x6:y6]=[1:beta2]");
    DivisorComponent exc;
    exc.label = "B-exceptional";
    exc.family = DivFamily::B;
    exc.kind = DivKind::Exceptional;
    exc.note = std::string(kBlowupRecipe) + "; the four tangential intersections are excluded";
    out.push_back(exc);
    return out;
}

double omega_a_factor(const double* c) {
    const double* x = c;
    const double* y = c + 6;
    double f = 1.0;
    f /= (1.0 - x[0] * x[1]) * (1.0 - y[0] * y[1]);
    f /= (1.0 - x[2] * x[3]) * (1.0 - y[2] * y[3]);
    f /= x[4] * x[5] * y[4] * y[5];
    return std::abs(f);
}

namespace {

// Generic base point away from every listed component.
bool acceptable_base(const double* c) {
    auto away_from_one = [](double v) { return std::abs(1.0 - v) > 0.05; };
    if (!away_from_one(c[0] * c[1]) || !away_from_one(c[6] * c[7])) return false;
    if (!away_from_one(c[2] * c[3]) || !away_from_one(c[8] * c[9])) return false;
    for (int i = 0; i < kAmbientDim; ++i)
        if (c[i] < 0.05) return false;
    // stay off the coordinate equalities used by family B
    const int chains[4][3] = {{0, 2, 4}, {1, 3, 5}, {6, 8, 10}, {7, 9, 11}};
    for (const auto& ch : chains)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (std::abs(c[ch[a]] - c[ch[b]]) < 0.02) return false;
    return true;
}

}  // namespace

PoleCheckResult pole_check(const DivisorComponent& comp, const Cone& cone, int samples, int kMin,
                           int kMax, std::uint64_t seed) {
    (void)cone;  // the ambient factor does not depend on beta; kept for interface symmetry
    PoleCheckResult out;
    if (comp.kind != DivKind::Listed || comp.eq == DivEq::CoordInf || comp.eq == DivEq::None) {
        out.verdict = PoleVerdict::Skipped;
        return out;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.15, 0.85);

    std::vector<double> log_eps, log_val;
    double vmin = HUGE_VAL, vmax = 0.0;
    for (int s = 0; s < samples; ++s) {
        double base[kAmbientDim];
        int guard = 0;
        do {
            for (double& v : base) v = unif(rng);
            if (++guard > 10000)
                throw std::runtime_error("pole_check: persistent coincidental components");
        } while (!acceptable_base(base));
        out.resamples += guard - 1;

        for (int k = kMin; k <= kMax; ++k) {
            const double eps = std::ldexp(1.0, -k);
            double c[kAmbientDim];
            std::copy(base, base + kAmbientDim, c);
            switch (comp.eq) {
                case DivEq::ProductOne: c[comp.j] = (1.0 - eps) / c[comp.i]; break;
                case DivEq::CoordZero: c[comp.i] = eps; break;
                case DivEq::CoordOne: c[comp.i] = 1.0 - eps; break;
                case DivEq::CoordEq: c[comp.j] = c[comp.i] + eps; break;
                default: break;
            }
            const double v = omega_a_factor(c);
            log_eps.push_back(-k * std::log(2.0));
            log_val.push_back(std::log(v));
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
            out.values.push_back(v);
        }
    }

    // least-squares slope of log|factor| against log(eps)
    const size_t n = log_eps.size();
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += log_eps[i];
        my += log_val[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (log_eps[i] - mx) * (log_eps[i] - mx);
        sxy += (log_eps[i] - mx) * (log_val[i] - my);
    }
    out.slope = sxy / sxx;
    out.growth = vmax / vmin;
    out.verdict = (out.growth >= 1e3 && out.slope < -0.5) ? PoleVerdict::Diverges
                                                          : PoleVerdict::Finite;
    return out;
}

}  // namespace mdzeta
