#include "mdzeta/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdzeta {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;

double pow_int_inv(double q, int s) {
    double inv = 1.0 / q;
    double r = inv;
    for (int i = 1; i < s; ++i) r *= inv;
    return r;
}

// Neumaier-compensated fold; fixed order makes results independent of the
// thread count.
double compensated_sum(const double* v, size_t n) {
    double s = 0.0, c = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double t = s + v[i];
        if (std::abs(s) >= std::abs(v[i]))
            c += (s - t) + v[i];
        else
            c += (v[i] - t) + s;
        s = t;
    }
    return s + c;
}

struct BucketSums {
    // Cumulative partial sums at thresholds X/8, X/4, X/2, X.
    std::array<double, 4> at{};
    long long terms = 0;
};

int bucket_of(long long q, const std::array<long long, 4>& th) {
    if (q <= th[0]) return 0;
    if (q <= th[1]) return 1;
    if (q <= th[2]) return 2;
    return 3;
}

std::array<long long, 4> thresholds(long long x) {
    return {x / 8, x / 4, x / 2, x};
}

// Depth 1: sum over a,b >= 1 with Q(a,b) <= X of Q^-s. Parallel over a-rows
// with per-row partials folded in row order.
BucketSums depth1_sum(long long T, int s, long long X, bool parallel) {
    const auto th = thresholds(X);
    long long amax = 0;
    while ((amax + 1) * (amax + 1) + T * (amax + 1) + 1 <= X) ++amax;

    struct Row {
        std::array<double, 4> excl{};
        long long count = 0;
    };
    std::vector<Row> rows(static_cast<size_t>(std::max<long long>(amax, 0)));

#pragma omp parallel for schedule(static) if (parallel)
    for (long long a = 1; a <= amax; ++a) {
        Row& r = rows[static_cast<size_t>(a - 1)];
        const long long bmax = cone_b_max(T, a, X);
        for (long long b = 1; b <= bmax; ++b) {
            const long long q = a * a + T * a * b + b * b;
            r.excl[static_cast<size_t>(bucket_of(q, th))] += pow_int_inv(static_cast<double>(q), s);
            ++r.count;
        }
    }

    BucketSums out;
    for (int k = 0; k < 4; ++k) {
        std::vector<double> col(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) col[i] = rows[i].excl[static_cast<size_t>(k)];
        double excl = compensated_sum(col.data(), col.size());
        out.at[static_cast<size_t>(k)] = (k == 0 ? 0.0 : out.at[static_cast<size_t>(k - 1)]) + excl;
    }
    for (const auto& r : rows) out.terms += r.count;
    return out;
}

// Depth 2: stream sigma rows in increasing a, maintaining the cumulative
// prefix-in-b of Q(a1,b1)^-s1 over rows a1 <= a-1. Monotonicity of Q in each
// argument keeps every queried prefix entry inside the norm ball.
BucketSums depth2_sum(long long T, int s1, int s2, long long X) {
    const auto th = thresholds(X);
    const long long bmax_global = cone_b_max(T, 1, X);
    std::vector<double> rowpref(static_cast<size_t>(std::max<long long>(bmax_global, 1)) + 1, 0.0);

    BucketSums out;
    std::array<double, 4> comp{};  // Neumaier carries per bucket
    std::array<double, 4> acc{};
    auto add = [&](int k, double v) {
        double t = acc[static_cast<size_t>(k)] + v;
        if (std::abs(acc[static_cast<size_t>(k)]) >= std::abs(v))
            comp[static_cast<size_t>(k)] += (acc[static_cast<size_t>(k)] - t) + v;
        else
            comp[static_cast<size_t>(k)] += (v - t) + acc[static_cast<size_t>(k)];
        acc[static_cast<size_t>(k)] = t;
    };

    long long extended_to = 0;  // prefix covers rows a1 <= extended_to
    for (long long a = 2; a * a + 2 * T * a + 4 <= X; ++a) {
        const long long bmax = cone_b_max(T, a, X);
        while (extended_to < a - 1) {
            const long long a1 = ++extended_to;
            const long long rb = cone_b_max(T, a1, X);
            double cum = 0.0;
            long long b1 = 1;
            for (; b1 <= rb; ++b1) {
                cum += pow_int_inv(static_cast<double>(a1 * a1 + T * a1 * b1 + b1 * b1), s1);
                rowpref[static_cast<size_t>(b1)] += cum;
            }
            for (; b1 <= bmax_global; ++b1) rowpref[static_cast<size_t>(b1)] += cum;
        }
        for (long long b = 2; b <= bmax; ++b) {
            const long long q = a * a + T * a * b + b * b;
            const double term =
                pow_int_inv(static_cast<double>(q), s2) * rowpref[static_cast<size_t>(b - 1)];
            add(bucket_of(q, th), term);
            ++out.terms;
        }
    }
    for (int k = 0; k < 4; ++k) {
        double excl = acc[static_cast<size_t>(k)] + comp[static_cast<size_t>(k)];
        out.at[static_cast<size_t>(k)] = (k == 0 ? 0.0 : out.at[static_cast<size_t>(k - 1)]) + excl;
    }
    return out;
}

double zeta_d(int s) { return std::riemann_zeta(static_cast<double>(s)); }

// tail(Y) ~ c * Y^(1-s) / (s-1): one increment pins c, the observed lattice
// point density gives an independent second estimate.
void depth1_tail(const BucketSums& b, int s, long long X, long long T, double* est, double* bound) {
    const double d1 = b.at[3] - b.at[2];
    const double geom = std::pow(2.0, s - 1) - 1.0;
    const double from_inc = d1 / geom;
    const double density = X > 0 ? static_cast<double>(b.terms) / static_cast<double>(X) : 0.0;
    const double from_cnt = density * std::pow(static_cast<double>(X), 1.0 - s) / (s - 1);
    *est = from_inc > 0 ? from_inc : from_cnt;
    *bound = 2.0 * std::max(from_inc, from_cnt);
    if (*bound <= 0.0) {
        // Degenerate truncation; Q >= T a b gives a crude global bound.
        double g = zeta_d(s);
        *bound = g * g * std::pow(static_cast<double>(T), -s);
        *est = std::min(*est, *bound);
    }
}

// tail(Y) ~ (A + B ln Y + C ln^2 Y) Y^(1-s2), fitted to three dyadic
// increments; the log powers come from the inner depth-1 prefix.
void depth2_tail(const BucketSums& b, int s1, int s2, long long X, long long T, double* est,
                 double* bound) {
    const double d1 = b.at[3] - b.at[2];
    const double d2 = b.at[2] - b.at[1];
    const double d3 = b.at[1] - b.at[0];
    auto tau_row = [&](double y, double* r) {
        const double L = std::log(y);
        const double p = std::pow(y, 1.0 - s2);
        r[0] = p;
        r[1] = p * L;
        r[2] = p * L * L;
    };
    double fitted = -1.0;
    if (d1 > 0 && d2 > 0 && d3 > 0 && X >= 64) {
        double rX[3], r2[3], r4[3], r8[3];
        tau_row(static_cast<double>(X), rX);
        tau_row(static_cast<double>(X) / 2, r2);
        tau_row(static_cast<double>(X) / 4, r4);
        tau_row(static_cast<double>(X) / 8, r8);
        double M[3][3], y[3];
        for (int j = 0; j < 3; ++j) {
            M[0][j] = r2[j] - rX[j];
            M[1][j] = r4[j] - r2[j];
            M[2][j] = r8[j] - r4[j];
        }
        y[0] = d1;
        y[1] = d2;
        y[2] = d3;
        // 3x3 Gaussian elimination with partial pivoting
        int piv[3] = {0, 1, 2};
        bool ok = true;
        for (int c = 0; c < 3 && ok; ++c) {
            int p = c;
            for (int r = c + 1; r < 3; ++r)
                if (std::abs(M[piv[r]][c]) > std::abs(M[piv[p]][c])) p = r;
            std::swap(piv[c], piv[p]);
            if (M[piv[c]][c] == 0.0) {
                ok = false;
                break;
            }
            for (int r = c + 1; r < 3; ++r) {
                double f = M[piv[r]][c] / M[piv[c]][c];
                for (int cc = c; cc < 3; ++cc) M[piv[r]][cc] -= f * M[piv[c]][cc];
                y[piv[r]] -= f * y[piv[c]];
            }
        }
        if (ok) {
            double coef[3];
            for (int c = 2; c >= 0; --c) {
                double v = y[piv[c]];
                for (int cc = c + 1; cc < 3; ++cc) v -= M[piv[c]][cc] * coef[cc];
                coef[c] = v / M[piv[c]][c];
            }
            fitted = coef[0] * rX[0] + coef[1] * rX[1] + coef[2] * rX[2];
        }
    }
    const double geom = std::pow(2.0, s2 - 1) - 1.0;
    const double fallback = d1 / geom;
    *est = (std::isfinite(fitted) && fitted > 0) ? fitted : fallback;
    *bound = 2.0 * std::max(*est, d1);
    if (*bound <= 0.0) {
        const double Td = static_cast<double>(T);
        if (s1 >= 2) {
            *bound = zeta_d(s1) * zeta_d(s1) * zeta_d(s2) * zeta_d(s2) * std::pow(Td, -(s1 + s2));
        } else {
            const double lg = 1.0 + 0.5 * std::log(std::max<double>(static_cast<double>(X), 16.0 * Td * Td));
            *bound = 4.0 * lg * lg * zeta_d(s2) * zeta_d(s2) * std::pow(Td, -s2 - 1.0);
        }
        *est = std::min(*est, *bound);
    }
}

}  // namespace

ExponentVector ExponentVector::make(std::vector<int> s) {
    if (s.empty()) throw std::invalid_argument("ExponentVector: empty");
    for (int si : s)
        if (si < 1) throw std::invalid_argument("ExponentVector: all s_i must be >= 1");
    if (s.back() < 2) throw std::invalid_argument("ExponentVector: s_m must be >= 2");
    if (static_cast<int>(s.size()) > 8 || *std::max_element(s.begin(), s.end()) > 32)
        throw std::invalid_argument("ExponentVector: out of supported range");
    return ExponentVector{std::move(s)};
}

int ExponentVector::weight() const {
    int w = 0;
    for (int si : s) w += si;
    return w;
}

std::string ExponentVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

namespace {

void validate_exponents(const ExponentVector& s) {
    if (s.s.empty()) throw std::invalid_argument("exponent vector is empty");
    for (int si : s.s)
        if (si < 1) throw std::invalid_argument("all s_i must be >= 1");
    if (s.s.back() < 2) throw std::invalid_argument("s_m must be >= 2 (series diverges)");
}

}  // namespace

SeriesResult mdzv_series(const Cone& cone, const ExponentVector& s, long long maxNorm,
                         bool parallel) {
    validate_exponents(s);
    if (s.depth() > 2)
        throw std::invalid_argument("mdzv_series: depths > 2 are not supported");
    if (maxNorm < 1) throw std::invalid_argument("mdzv_series: maxNorm must be >= 1");
    if (maxNorm > 2'000'000'000'000LL)
        throw std::invalid_argument("mdzv_series: maxNorm budget exceeded");
    const long long T = cone.trace();

    SeriesResult r;
    r.maxNorm = maxNorm;
    if (s.depth() == 1) {
        BucketSums b = depth1_sum(T, s.s[0], maxNorm, parallel);
        r.value = b.at[3];
        r.termsUsed = b.terms;
        depth1_tail(b, s.s[0], maxNorm, T, &r.tailEstimate, &r.tailBound);
    } else {
        BucketSums b = depth2_sum(T, s.s[0], s.s[1], maxNorm);
        r.value = b.at[3];
        r.termsUsed = b.terms;
        depth2_tail(b, s.s[0], s.s[1], maxNorm, T, &r.tailEstimate, &r.tailBound);
    }
    return r;
}

SeriesResult classical_mzv_series(const ExponentVector& s, long long nMax) {
    validate_exponents(s);
    if (nMax < 2) throw std::invalid_argument("classical_mzv_series: nMax must be >= 2");
    if (nMax > 200'000'000) throw std::invalid_argument("classical_mzv_series: nMax budget exceeded");
    SeriesResult r;
    r.maxNorm = nMax;
    const double N = static_cast<double>(nMax);
    if (s.depth() == 1) {
        const int k = s.s[0];
        std::vector<double> terms(static_cast<size_t>(nMax));
        for (long long n = 1; n <= nMax; ++n)
            terms[static_cast<size_t>(n - 1)] = pow_int_inv(static_cast<double>(n), k);
        // sum ascending for accuracy
        std::reverse(terms.begin(), terms.end());
        r.value = compensated_sum(terms.data(), terms.size());
        r.termsUsed = nMax;
        // Euler-Maclaurin: sum_{n>N} n^-k = N^(1-k)/(k-1) - N^-k/2 + k N^(-k-1)/12 - ...
        r.tailEstimate = std::pow(N, 1.0 - k) / (k - 1) - std::pow(N, -static_cast<double>(k)) / 2 +
                         k * std::pow(N, -k - 1.0) / 12;
        r.tailBound = 2.0 * std::pow(N, 1.0 - k) / (k - 1);
    } else if (s.depth() == 2) {
        const int s1 = s.s[0], s2 = s.s[1];
        double prefix = 0.0;
        double acc = 0.0, comp = 0.0;
        for (long long m = 1; m <= nMax; ++m) {
            if (m >= 2) {
                const double term = pow_int_inv(static_cast<double>(m), s2) * prefix;
                double t = acc + term;
                comp += std::abs(acc) >= term ? (acc - t) + term : (term - t) + acc;
                acc = t;
            }
            prefix += pow_int_inv(static_cast<double>(m), s1);
        }
        r.value = acc + comp;
        r.termsUsed = nMax - 1;
        if (s1 == 1) {
            // inner prefix ~ ln m + gamma
            const double lead = (std::log(N) + kEulerGamma) / (s2 - 1) + 1.0 / ((s2 - 1.0) * (s2 - 1.0));
            r.tailEstimate = std::pow(N, 1.0 - s2) * lead - std::pow(N, -static_cast<double>(s2)) * (std::log(N) + kEulerGamma) / 2;
        } else {
            r.tailEstimate = zeta_d(s1) * std::pow(N, 1.0 - s2) / (s2 - 1) -
                             std::pow(N, 2.0 - s1 - s2) / ((s1 - 1.0) * (s1 + s2 - 2.0));
        }
        r.tailBound = 2.0 * std::abs(r.tailEstimate) + std::pow(N, -static_cast<double>(s2));
    } else {
        throw std::invalid_argument("classical_mzv_series: depths > 2 are not supported");
    }
    return r;
}

SeriesResult refine(const SeriesResult& previous, const Cone& cone, const ExponentVector& s,
                    long long largerMaxNorm) {
    if (largerMaxNorm <= previous.maxNorm)
        throw std::invalid_argument("refine: truncation must strictly increase");
    SeriesResult next = mdzv_series(cone, s, largerMaxNorm);
    if (std::abs(next.value - previous.value) > previous.tailBound)
        throw std::runtime_error("refine: previous tail bound violated");
    return next;
}

}  // namespace mdzeta
