#pragma once

#include "mdzeta/cone.hpp"
#include "mdzeta/series.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace mdzeta {

enum class Scheme { GaussLegendre, MonteCarlo };

/// Knobs for the membrane integrals. Zero-valued fields take per-operation
/// defaults; `quick` scales everything down to CI size.
struct QuadratureSpec {
    int nodesPerAxis = 0;
    Scheme scheme = Scheme::GaussLegendre;
    double tCutoff = 0;  // truncation of the unbounded t-domain
    std::uint64_t seed = 20240915ull;
    double targetRelTol = 1e-6;
    long long mcSamples = 0;
    bool quick = false;
    bool parallel = true;
};

struct IntegralResult {
    double value = 0;
    double errorEstimate = 0;  // two-level difference (GL) or 3x standard error (MC)
    long long evaluations = 0;
    bool converged = false;  // errorEstimate <= targetRelTol * |value|
};

/// Chain map t-cutoff with every exponential factor of f0 below 1e-16 at the
/// cutoff; the slowest decay ray has rate 1 + min(1, beta2).
double default_t_cutoff(const Cone& cone);
bool cutoff_certified(const Cone& cone, double tCutoff);

/// Gauss-Legendre nodes and weights on (0,1).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int n);

// Nested t-domain integrals of f0 (chains t > u (> v) > 0 per coordinate).
IntegralResult integral_zeta2(const Cone& cone, const QuadratureSpec& spec = {});
IntegralResult integral_zeta3(const Cone& cone, const QuadratureSpec& spec = {});
IntegralResult integral_zeta12(const Cone& cone, const QuadratureSpec& spec = {});

// x-coordinate integrals over simplex products, evaluated through the exact
// pullback coefficients (no e^{-t} substitution).
IntegralResult integral_proposition_x(const Cone& cone, const QuadratureSpec& spec = {});
IntegralResult integral_corollary_x(const Cone& cone, const QuadratureSpec& spec = {});

/// Simplex iterated integrals for s in {(2), (3), (1,2)}.
IntegralResult classical_simplex_integral(const ExponentVector& s,
                                          const QuadratureSpec& spec = {});

namespace detail {
/// Test support: both f0 factors of the zeta(1,2) chain integral replaced by
/// the single gamma = 1 + beta term; closed form 1/(N(gamma) N(2 gamma)^2).
IntegralResult integral_zeta12_single_term(const Cone& cone, const QuadratureSpec& spec = {});
}  // namespace detail

}  // namespace mdzeta
