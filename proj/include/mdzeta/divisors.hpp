#pragma once

#include "mdzeta/cone.hpp"
#include "mdzeta/membrane.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mdzeta {

// Coordinates of the ambient chart: indices 0..5 are x1..x6, 6..11 are y1..y6.
// Odd x-indices (x1,x3,x5) ride path gamma1, even ones gamma2; same for y.
constexpr int kAmbientDim = 12;

enum class DivFamily { A, B };
enum class DivKind { Listed, Exceptional, TangentialCodim2 };

enum class DivEq {
    None,        // exceptional placeholders
    ProductOne,  // c_i * c_j = 1
    CoordZero,   // c_i = 0
    CoordOne,    // c_i = 1
    CoordEq,     // c_i = c_j
    CoordInf,    // c_i = infinity
};

struct DivisorComponent {
    std::string label;
    DivFamily family;
    DivKind kind;
    DivEq eq = DivEq::None;
    int i = -1, j = -1;  // ambient coordinate indices
    std::optional<ProjectivePoint> tangentialPoint;
    std::string note;
};

/// Pole divisor of Omega_A = omega1(x1,x2) ^ omega1(x3,x4) ^ omega0(x5,x6):
/// 20 listed components (4 product hypersurfaces, 4 coordinate zeros, 12 at
/// infinity) plus an exceptional placeholder.
std::vector<DivisorComponent> catalog_A();

/// Boundary divisor of the integration cycle: 16 listed codimension-1
/// components, 4 tangential codimension-2 components (with their projective
/// points, which need beta), plus an exceptional placeholder.
std::vector<DivisorComponent> catalog_B(const Cone& cone);

enum class PoleVerdict { Diverges, Finite, Skipped };

struct PoleCheckResult {
    PoleVerdict verdict = PoleVerdict::Skipped;
    double slope = 0;    // d log|Omega_A factor| / d log eps along the approach
    double growth = 0;   // max/min of |factor| over the sequence
    int resamples = 0;   // base points rejected for landing near a second component
    std::vector<double> values;
};

/// Samples the scalar pole factor of Omega_A along a geometric approach
/// eps = 2^-k, k in [kMin, kMax], at `samples` generic base points.
/// Components at infinity and exceptional placeholders are skipped.
PoleCheckResult pole_check(const DivisorComponent& comp, const Cone& cone, int samples = 5,
                           int kMin = 4, int kMax = 20, std::uint64_t seed = 987654321ull);

/// |Omega_A| scalar factor at an ambient point (all 12 coordinates free).
double omega_a_factor(const double* c);

}  // namespace mdzeta
