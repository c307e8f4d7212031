#pragma once

#include "mdzeta/cone.hpp"

#include <vector>

namespace mdzeta {

/// Exponent tuple (s_1,...,s_m); all s_i >= 1 and s_m >= 2 (convergence).
struct ExponentVector {
    std::vector<int> s;

    static ExponentVector make(std::vector<int> s);
    int depth() const { return static_cast<int>(s.size()); }
    int weight() const;
    std::string str() const;
};

struct SeriesResult {
    double value = 0;         // truncated partial sum
    double tailBound = 0;     // certified-in-tests upper bound on the truncation error
    double tailEstimate = 0;  // best estimate of the truncation error (<= tailBound)
    long long termsUsed = 0;
    long long maxNorm = 0;
};

/// Nested sum over cone tuples whose every partial sum has norm <= maxNorm.
/// Depth 1: sum Q(a,b)^-s. Depth 2: sum over sigma = gamma + delta of
/// N(sigma)^-s2 * (prefix sum of N(gamma)^-s1 over the box below sigma).
/// Depths > 2 are not supported.
SeriesResult mdzv_series(const Cone& cone, const ExponentVector& s, long long maxNorm,
                         bool parallel = true);

/// Euler's multiple zeta series truncated at nMax, with Euler-Maclaurin tail
/// estimates. Depths 1 and 2.
SeriesResult classical_mzv_series(const ExponentVector& s, long long nMax);

/// Recompute at a strictly larger truncation; throws if the previous tail
/// bound is violated by the refinement.
SeriesResult refine(const SeriesResult& previous, const Cone& cone, const ExponentVector& s,
                    long long largerMaxNorm);

}  // namespace mdzeta
