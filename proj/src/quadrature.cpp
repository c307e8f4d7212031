#include "mdzeta/quadrature.hpp"

#include "mdzeta/membrane.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mdzeta {

namespace {

// ---------------------------------------------------------------------------
// Axes
// ---------------------------------------------------------------------------

struct Axis {
    std::vector<double> x, w;  // mapped nodes, weights with the map jacobian folded in
    int n() const { return static_cast<int>(x.size()); }
};

// g = L s^3 on (0, L): clusters nodes at the f0 corner singularity at t = 0.
Axis t_axis(int n, double cutoff) {
    auto [s, w] = gauss_legendre01(n);
    Axis a;
    a.x.resize(n);
    a.w.resize(n);
    for (int i = 0; i < n; ++i) {
        a.x[i] = cutoff * s[i] * s[i] * s[i];
        a.w[i] = w[i] * cutoff * 3.0 * s[i] * s[i];
    }
    return a;
}

// r = s^p/(s^p + (1-s)^p) on (0,1): symmetric clustering at both endpoints,
// where the d(xy)/(xy) factors have their integrable singularities.
Axis x_axis(int n, int p) {
    auto [s, w] = gauss_legendre01(n);
    Axis a;
    a.x.resize(n);
    a.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double sp = std::pow(s[i], p);
        double cp = std::pow(1.0 - s[i], p);
        double den = sp + cp;
        a.x[i] = sp / den;
        a.w[i] = w[i] * p * std::pow(s[i] * (1.0 - s[i]), p - 1) / (den * den);
    }
    return a;
}

double fold(const std::vector<double>& partial) {
    double s = 0.0, c = 0.0;
    for (double v : partial) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    return s + c;
}

// ---------------------------------------------------------------------------
// t-domain chain kernels. Chains are mapped per coordinate by partial sums of
// axis variables; exponentials enter only through per-axis tables, so each
// node costs a handful of multiplications.
// ---------------------------------------------------------------------------

struct TTables {
    std::vector<double> e, f1, f2, w;  // e^-g, e^-b1 g, e^-b2 g, weights
};

TTables t_tables(const Axis& ax, double b1, double b2) {
    TTables t;
    const int n = ax.n();
    t.e.resize(n);
    t.f1.resize(n);
    t.f2.resize(n);
    t.w = ax.w;
    for (int i = 0; i < n; ++i) {
        t.e[i] = std::exp(-ax.x[i]);
        t.f1[i] = std::exp(-b1 * ax.x[i]);
        t.f2[i] = std::exp(-b2 * ax.x[i]);
    }
    return t;
}

// value = sum f0(t1, t2) over t1 = g_i + g_j, t2 = g_k + g_l.
double zeta2_t_sum(const TTables& t, bool parallel) {
    const int n = static_cast<int>(t.e.size());
    const int m = n * n;
    std::vector<double> eu(m), f1u(m), f2u(m), wu(m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            eu[i * n + j] = t.e[i] * t.e[j];
            f1u[i * n + j] = t.f1[i] * t.f1[j];
            f2u[i * n + j] = t.f2[i] * t.f2[j];
            wu[i * n + j] = t.w[i] * t.w[j];
        }
    std::vector<double> partial(m);
#pragma omp parallel for schedule(static) if (parallel)
    for (int p = 0; p < m; ++p) {
        double acc = 0.0;
        for (int q = 0; q < m; ++q)
            acc += wu[q] * f0_from_products(eu[p] * eu[q], f1u[p] * f2u[q]);
        partial[p] = wu[p] * acc;
    }
    return fold(partial);
}

// value = sum f0(t1, t2) over t = g_i + g_j + g_k per coordinate.
double zeta3_t_sum(const TTables& t, bool parallel) {
    const int n = static_cast<int>(t.e.size());
    const int m = n * n * n;
    std::vector<double> eu(m), f1u(m), f2u(m), wu(m);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++idx) {
                eu[idx] = t.e[i] * t.e[j] * t.e[k];
                f1u[idx] = t.f1[i] * t.f1[j] * t.f1[k];
                f2u[idx] = t.f2[i] * t.f2[j] * t.f2[k];
                wu[idx] = t.w[i] * t.w[j] * t.w[k];
            }
    std::vector<double> partial(m);
#pragma omp parallel for schedule(static) if (parallel)
    for (int p = 0; p < m; ++p) {
        double acc = 0.0;
        for (int q = 0; q < m; ++q)
            acc += wu[q] * f0_from_products(eu[p] * eu[q], f1u[p] * f2u[q]);
        partial[p] = wu[p] * acc;
    }
    return fold(partial);
}

// value = sum F(t1,t2) * F(u1,u2) over u = g_i + g_j, t = u + g_k per
// coordinate. F is f0 or a test substitute; it must be expressible through
// the products (e^{-(t1+t2)}, e^{-(b1 t1 + b2 t2)}).
template <class F>
double zeta12_t_sum(const TTables& t, F&& phi, bool parallel) {
    const int n = static_cast<int>(t.e.size());
    const int m = n * n;
    std::vector<double> eu(m), f1u(m), f2u(m), wu(m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            eu[i * n + j] = t.e[i] * t.e[j];
            f1u[i * n + j] = t.f1[i] * t.f1[j];
            f2u[i * n + j] = t.f2[i] * t.f2[j];
            wu[i * n + j] = t.w[i] * t.w[j];
        }
    // extension tables: coordinate-1 pairs extended by one axis value
    std::vector<double> ea(static_cast<size_t>(m) * n), fa1(static_cast<size_t>(m) * n),
        fa2(static_cast<size_t>(m) * n);
    for (int p = 0; p < m; ++p)
        for (int k = 0; k < n; ++k) {
            ea[static_cast<size_t>(p) * n + k] = eu[p] * t.e[k];
            fa1[static_cast<size_t>(p) * n + k] = f1u[p] * t.f1[k];
            fa2[static_cast<size_t>(p) * n + k] = f2u[p] * t.f2[k];
        }
    std::vector<double> partial(m);
#pragma omp parallel for schedule(static) if (parallel)
    for (int p = 0; p < m; ++p) {
        const double* eap = &ea[static_cast<size_t>(p) * n];
        const double* fap = &fa1[static_cast<size_t>(p) * n];
        double acc = 0.0;
        for (int q = 0; q < m; ++q) {
            const double f0u = phi(eu[p] * eu[q], f1u[p] * f2u[q]);
            const double* eaq = &ea[static_cast<size_t>(q) * n];
            const double* faq = &fa2[static_cast<size_t>(q) * n];
            double inner = 0.0;
            for (int k = 0; k < n; ++k) {
                double ek = eap[k], fk = fap[k], wk = t.w[k];
                for (int l = 0; l < n; ++l)
                    inner += wk * t.w[l] * phi(ek * eaq[l], fk * faq[l]);
            }
            acc += wu[q] * f0u * inner;
        }
        partial[p] = wu[p] * acc;
    }
    return fold(partial);
}

// ---------------------------------------------------------------------------
// x-domain kernels (ratio coordinates; jacobians cancel the omega0 factor).
// ---------------------------------------------------------------------------

struct XTables {
    std::vector<double> r, rb1, rb2, w;
};

XTables x_tables(const Axis& ax, double b1, double b2) {
    XTables t;
    const int n = ax.n();
    t.r = ax.x;
    t.w = ax.w;
    t.rb1.resize(n);
    t.rb2.resize(n);
    for (int i = 0; i < n; ++i) {
        t.rb1[i] = std::pow(ax.x[i], b1);
        t.rb2[i] = std::pow(ax.x[i], b2);
    }
    return t;
}

// omega1(x1,x2) ^ omega0(x3,x4) over 0<x1<x3<1, 0<x2<x4<1, divided by
// (b2-b1)^2: after x1 = r1 r2, x3 = r2 (and likewise for the even chain) the
// jacobian cancels 1/(x3 x4) and the integrand is Phi(x1, x2).
double prop_x_sum(const XTables& t, bool parallel) {
    const int n = static_cast<int>(t.r.size());
    const int m = n * n;
    std::vector<double> x1(m), x1b(m), wu(m), x2(m), x2b(m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            x1[i * n + j] = t.r[i] * t.r[j];
            x1b[i * n + j] = t.rb1[i] * t.rb1[j];
            x2[i * n + j] = t.r[i] * t.r[j];
            x2b[i * n + j] = t.rb2[i] * t.rb2[j];
            wu[i * n + j] = t.w[i] * t.w[j];
        }
    std::vector<double> partial(m);
#pragma omp parallel for schedule(static) if (parallel)
    for (int p = 0; p < m; ++p) {
        double acc = 0.0;
        for (int q = 0; q < m; ++q)
            acc += wu[q] * omega1_x_reduced(x1[p] * x2[q], x1b[p] * x2b[q]);
        partial[p] = wu[p] * acc;
    }
    return fold(partial);
}

// omega1 ^ omega1 ^ omega0 over the two 3-chains, divided by (b2-b1)^3;
// residual factor r2 r3 q2 q3 after jacobian cancellation.
double cor_x_sum(const XTables& t, bool parallel) {
    const int n = static_cast<int>(t.r.size());
    const int m = n * n;
    std::vector<double> x3(m), x3b(m), wa(m), x4(m), x4b(m), wb(m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double rr = t.r[i] * t.r[j];
            x3[i * n + j] = rr;
            x3b[i * n + j] = t.rb1[i] * t.rb1[j];
            wa[i * n + j] = t.w[i] * t.w[j] * rr;
            x4[i * n + j] = rr;
            x4b[i * n + j] = t.rb2[i] * t.rb2[j];
            wb[i * n + j] = t.w[i] * t.w[j] * rr;
        }
    // extension tables by the innermost axis (x1 = r1 * x3, x2 = q1 * x4)
    std::vector<double> xa(static_cast<size_t>(m) * n), xab(static_cast<size_t>(m) * n),
        ya(static_cast<size_t>(m) * n), yab(static_cast<size_t>(m) * n);
    for (int p = 0; p < m; ++p)
        for (int k = 0; k < n; ++k) {
            xa[static_cast<size_t>(p) * n + k] = x3[p] * t.r[k];
            xab[static_cast<size_t>(p) * n + k] = x3b[p] * t.rb1[k];
            ya[static_cast<size_t>(p) * n + k] = x4[p] * t.r[k];
            yab[static_cast<size_t>(p) * n + k] = x4b[p] * t.rb2[k];
        }
    std::vector<double> partial(m);
#pragma omp parallel for schedule(static) if (parallel)
    for (int p = 0; p < m; ++p) {
        const double* xap = &xa[static_cast<size_t>(p) * n];
        const double* xabp = &xab[static_cast<size_t>(p) * n];
        double acc = 0.0;
        for (int q = 0; q < m; ++q) {
            const double mid = omega1_x_reduced(x3[p] * x4[q], x3b[p] * x4b[q]);
            const double* yaq = &ya[static_cast<size_t>(q) * n];
            const double* yabq = &yab[static_cast<size_t>(q) * n];
            double inner = 0.0;
            for (int k = 0; k < n; ++k) {
                double xk = xap[k], xbk = xabp[k], wk = t.w[k];
                for (int l = 0; l < n; ++l)
                    inner += wk * t.w[l] * omega1_x_reduced(xk * yaq[l], xbk * yabq[l]);
            }
            acc += wb[q] * mid * inner;
        }
        partial[p] = wa[p] * acc;
    }
    return fold(partial);
}

// ---------------------------------------------------------------------------
// Classical simplex integrals (weight <= 3).
// ---------------------------------------------------------------------------

double classical_sum(const std::vector<int>& s, const XTables& t, bool parallel) {
    const int n = static_cast<int>(t.r.size());
    std::vector<double> partial(n);
    if (s == std::vector<int>{2}) {
#pragma omp parallel for schedule(static) if (parallel)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += t.w[j] / (1.0 - t.r[i] * t.r[j]);
            partial[i] = t.w[i] * acc;
        }
    } else if (s == std::vector<int>{3}) {
#pragma omp parallel for schedule(static) if (parallel)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    acc += t.w[j] * t.w[k] / (1.0 - t.r[i] * t.r[j] * t.r[k]);
            partial[i] = t.w[i] * acc;
        }
    } else if (s == std::vector<int>{1, 2}) {
#pragma omp parallel for schedule(static) if (parallel)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double rjk = t.r[j] * t.r[k];
                    acc += t.w[j] * t.w[k] * rjk / ((1.0 - t.r[i] * rjk) * (1.0 - rjk));
                }
            partial[i] = t.w[i] * acc;
        }
    } else {
        throw std::invalid_argument("classical_simplex_integral: s must be (2), (3) or (1,2)");
    }
    return fold(partial);
}

// ---------------------------------------------------------------------------
// Stratified Monte Carlo over the mapped unit cube (cross-check lane).
// ---------------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double u01(std::uint64_t& state) {
    state = splitmix64(state);
    return (static_cast<double>(state >> 11) + 0.5) * 0x1.0p-53;
}

struct McResult {
    double value;
    double stderr3;
    long long evaluations;
};

McResult mc_integrate(int dim, const std::function<double(const double*)>& f, long long samples,
                      std::uint64_t seed, bool parallel) {
    int k = dim <= 4 ? 6 : 3;  // strata per axis
    long long cells = 1;
    for (int i = 0; i < dim; ++i) cells *= k;
    long long per_cell = std::max<long long>(2, samples / cells);
    const double cell_vol = 1.0 / static_cast<double>(cells);

    std::vector<double> mean(static_cast<size_t>(cells)), var(static_cast<size_t>(cells));
#pragma omp parallel for schedule(static) if (parallel)
    for (long long c = 0; c < cells; ++c) {
        int digits[8];
        long long tmp = c;
        for (int i = 0; i < dim; ++i) {
            digits[i] = static_cast<int>(tmp % k);
            tmp /= k;
        }
        std::uint64_t state = splitmix64(seed ^ (0x5851f42d4c957f2dull * static_cast<std::uint64_t>(c + 1)));
        double s = 0.0, s2 = 0.0;
        double x[8];
        for (long long j = 0; j < per_cell; ++j) {
            for (int i = 0; i < dim; ++i) x[i] = (digits[i] + u01(state)) / k;
            double v = f(x);
            s += v;
            s2 += v * v;
        }
        double m = s / static_cast<double>(per_cell);
        mean[static_cast<size_t>(c)] = m;
        var[static_cast<size_t>(c)] =
            std::max(0.0, s2 / static_cast<double>(per_cell) - m * m) / std::max<long long>(1, per_cell - 1);
    }
    double value = 0.0, se2 = 0.0;
    for (long long c = 0; c < cells; ++c) {
        value += cell_vol * mean[static_cast<size_t>(c)];
        se2 += cell_vol * cell_vol * var[static_cast<size_t>(c)];
    }
    return {value, 3.0 * std::sqrt(se2), cells * per_cell};
}

// ---------------------------------------------------------------------------
// Shared driver: evaluate at full and coarse node counts, or hand off to MC.
// ---------------------------------------------------------------------------

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int resolve_nodes(const QuadratureSpec& spec, int dflt, int quick_dflt) {
    if (spec.nodesPerAxis > 0) return spec.nodesPerAxis;
    return spec.quick ? quick_dflt : dflt;
}

IntegralResult run_gl(int nodes, int dim, const std::function<double(int)>& eval_at,
                      double targetRelTol) {
    IntegralResult r;
    const int coarse = std::max(5, (2 * nodes) / 3);
    r.value = eval_at(nodes);
    const double v0 = eval_at(coarse);
    r.errorEstimate = std::abs(r.value - v0) + std::abs(r.value) * 1e-14;
    r.evaluations = ipow(nodes, dim) + ipow(coarse, dim);
    r.converged = r.errorEstimate <= targetRelTol * std::max(std::abs(r.value), 1e-300);
    return r;
}

IntegralResult run_mc(int dim, const std::function<double(const double*)>& f,
                      const QuadratureSpec& spec, double sign_factor) {
    long long samples = spec.mcSamples > 0 ? spec.mcSamples : (spec.quick ? 40'000 : 400'000);
    McResult m = mc_integrate(dim, f, samples, spec.seed, spec.parallel);
    IntegralResult r;
    r.value = sign_factor * m.value;
    r.errorEstimate = std::abs(sign_factor) * m.stderr3;
    r.evaluations = m.evaluations;
    r.converged = r.errorEstimate <= spec.targetRelTol * std::max(std::abs(r.value), 1e-300);
    return r;
}

double sigmoid_map(double s, int p, double* dm) {
    double sp = std::pow(s, p), cp = std::pow(1.0 - s, p);
    double den = sp + cp;
    *dm = p * std::pow(s * (1.0 - s), p - 1) / (den * den);
    return sp / den;
}

}  // namespace

double default_t_cutoff(const Cone& cone) {
    return 38.0 / (1.0 + std::min(1.0, cone.beta2_d()));
}

bool cutoff_certified(const Cone& cone, double tCutoff) {
    return std::exp(-(1.0 + std::min(1.0, cone.beta2_d())) * tCutoff) < 1e-16;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int n) {
    if (n < 2 || n > 256) throw std::invalid_argument("gauss_legendre01: n out of range");
    std::vector<double> x(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        x[static_cast<size_t>(i)] = 0.5 * (1.0 - z);
        x[static_cast<size_t>(n - 1 - i)] = 0.5 * (1.0 + z);
        double wi = 1.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<size_t>(i)] = wi;
        w[static_cast<size_t>(n - 1 - i)] = wi;
    }
    return {x, w};
}

IntegralResult integral_zeta2(const Cone& cone, const QuadratureSpec& spec) {
    const double b1 = cone.beta1_d(), b2 = cone.beta2_d();
    const double L = spec.tCutoff > 0 ? spec.tCutoff : default_t_cutoff(cone);
    if (spec.scheme == Scheme::MonteCarlo) {
        auto f = [&, L](const double* s) {
            double t[4], jac = 1.0;
            for (int i = 0; i < 4; ++i) {
                t[i] = L * s[i] * s[i] * s[i];
                jac *= L * 3.0 * s[i] * s[i];
            }
            return jac * f0_closed_d(t[0] + t[1], t[2] + t[3], b1, b2);
        };
        return run_mc(4, f, spec, 1.0);
    }
    const int nodes = resolve_nodes(spec, 32, 16);
    return run_gl(nodes, 4,
                  [&](int n) { return zeta2_t_sum(t_tables(t_axis(n, L), b1, b2), spec.parallel); },
                  spec.targetRelTol);
}

IntegralResult integral_zeta3(const Cone& cone, const QuadratureSpec& spec) {
    const double b1 = cone.beta1_d(), b2 = cone.beta2_d();
    const double L = spec.tCutoff > 0 ? spec.tCutoff : default_t_cutoff(cone);
    if (spec.scheme == Scheme::MonteCarlo) {
        auto f = [&, L](const double* s) {
            double t[6], jac = 1.0;
            for (int i = 0; i < 6; ++i) {
                t[i] = L * s[i] * s[i] * s[i];
                jac *= L * 3.0 * s[i] * s[i];
            }
            return jac * f0_closed_d(t[0] + t[1] + t[2], t[3] + t[4] + t[5], b1, b2);
        };
        return run_mc(6, f, spec, 1.0);
    }
    const int nodes = resolve_nodes(spec, 20, 12);
    return run_gl(nodes, 6,
                  [&](int n) { return zeta3_t_sum(t_tables(t_axis(n, L), b1, b2), spec.parallel); },
                  spec.targetRelTol);
}

IntegralResult integral_zeta12(const Cone& cone, const QuadratureSpec& spec) {
    const double b1 = cone.beta1_d(), b2 = cone.beta2_d();
    const double L = spec.tCutoff > 0 ? spec.tCutoff : default_t_cutoff(cone);
    if (spec.scheme == Scheme::MonteCarlo) {
        auto f = [&, L](const double* s) {
            double g[6], jac = 1.0;
            for (int i = 0; i < 6; ++i) {
                g[i] = L * s[i] * s[i] * s[i];
                jac *= L * 3.0 * s[i] * s[i];
            }
            const double u1 = g[0] + g[1], u2 = g[3] + g[4];
            return jac * f0_closed_d(u1 + g[2], u2 + g[5], b1, b2) * f0_closed_d(u1, u2, b1, b2);
        };
        return run_mc(6, f, spec, 1.0);
    }
    const int nodes = resolve_nodes(spec, 24, 14);
    return run_gl(nodes, 6,
                  [&](int n) {
                      return zeta12_t_sum(t_tables(t_axis(n, L), b1, b2), f0_from_products,
                                          spec.parallel);
                  },
                  spec.targetRelTol);
}

IntegralResult integral_proposition_x(const Cone& cone, const QuadratureSpec& spec) {
    const double b1 = cone.beta1_d(), b2 = cone.beta2_d();
    const double factor = (b2 - b1) * (b2 - b1);
    if (spec.scheme == Scheme::MonteCarlo) {
        auto f = [&](const double* s) {
            double r[4], jac = 1.0;
            for (int i = 0; i < 4; ++i) {
                double dm;
                r[i] = sigmoid_map(s[i], 2, &dm);
                jac *= dm;
            }
            const double x1 = r[0] * r[1], x2 = r[2] * r[3];
            return jac * omega1_x_reduced(x1 * x2, std::pow(x1, b1) * std::pow(x2, b2));
        };
        return run_mc(4, f, spec, factor);
    }
    const int nodes = resolve_nodes(spec, 32, 16);
    IntegralResult r = run_gl(
        nodes, 4, [&](int n) { return prop_x_sum(x_tables(x_axis(n, 2), b1, b2), spec.parallel); },
        spec.targetRelTol);
    r.value *= factor;
    r.errorEstimate *= std::abs(factor);
    return r;
}

IntegralResult integral_corollary_x(const Cone& cone, const QuadratureSpec& spec) {
    const double b1 = cone.beta1_d(), b2 = cone.beta2_d();
    const double d = b2 - b1;
    const double factor = d * d * d;  // negative under the sigma1 > 1 normalization
    if (spec.scheme == Scheme::MonteCarlo) {
        auto f = [&](const double* s) {
            double r[6], jac = 1.0;
            for (int i = 0; i < 6; ++i) {
                double dm;
                r[i] = sigmoid_map(s[i], 2, &dm);
                jac *= dm;
            }
            const double x3 = r[1] * r[2], x4 = r[4] * r[5];
            const double x1 = r[0] * x3, x2 = r[3] * x4;
            const double mid = omega1_x_reduced(x3 * x4, std::pow(x3, b1) * std::pow(x4, b2));
            const double in = omega1_x_reduced(x1 * x2, std::pow(x1, b1) * std::pow(x2, b2));
            return jac * x3 * x4 * mid * in;
        };
        return run_mc(6, f, spec, factor);
    }
    const int nodes = resolve_nodes(spec, 20, 12);
    IntegralResult r = run_gl(
        nodes, 6, [&](int n) { return cor_x_sum(x_tables(x_axis(n, 2), b1, b2), spec.parallel); },
        spec.targetRelTol);
    r.value *= factor;
    r.errorEstimate *= std::abs(factor);
    return r;
}

IntegralResult classical_simplex_integral(const ExponentVector& s, const QuadratureSpec& spec) {
    const int dim = s.weight();
    const int nodes = resolve_nodes(spec, 48, 24);
    if (spec.scheme == Scheme::MonteCarlo) {
        auto f = [&](const double* u) {
            double r[3], jac = 1.0;
            for (int i = 0; i < dim; ++i) {
                double dm;
                r[i] = sigmoid_map(u[i], 3, &dm);
                jac *= dm;
            }
            if (s.s == std::vector<int>{2}) return jac / (1.0 - r[0] * r[1]);
            if (s.s == std::vector<int>{3}) return jac / (1.0 - r[0] * r[1] * r[2]);
            double rjk = r[1] * r[2];
            return jac * rjk / ((1.0 - r[0] * rjk) * (1.0 - rjk));
        };
        if (!(s.s == std::vector<int>{2} || s.s == std::vector<int>{3} ||
              s.s == std::vector<int>{1, 2}))
            throw std::invalid_argument("classical_simplex_integral: s must be (2), (3) or (1,2)");
        return run_mc(dim, f, spec, 1.0);
    }
    return run_gl(nodes, dim,
                  [&](int n) { return classical_sum(s.s, x_tables(x_axis(n, 3), 1.0, 1.0), spec.parallel); },
                  spec.targetRelTol);
}

namespace detail {

IntegralResult integral_zeta12_single_term(const Cone& cone, const QuadratureSpec& spec) {
    const double b1 = cone.beta1_d(), b2 = cone.beta2_d();
    const double L = spec.tCutoff > 0 ? spec.tCutoff : default_t_cutoff(cone);
    const int nodes = resolve_nodes(spec, 24, 14);
    // gamma = 1 + beta contributes e^{-gamma1 t1 - gamma2 t2} = u * v in the
    // product coordinates.
    auto one_term = [](double u, double v) { return u * v; };
    return run_gl(nodes, 6,
                  [&](int n) {
                      return zeta12_t_sum(t_tables(t_axis(n, L), b1, b2), one_term, spec.parallel);
                  },
                  spec.targetRelTol);
}

}  // namespace detail

}  // namespace mdzeta
