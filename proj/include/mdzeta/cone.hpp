#pragma once

#include "mdzeta/quadfield.hpp"

#include <vector>

namespace mdzeta {

/// The cone C = {a + b*beta : a, b >= 1} for a totally positive unit beta
/// normalized so that sigma1(beta) > 1. Norms of cone elements are values of
/// the binary form Q(a,b) = a^2 + Tr(beta) ab + b^2 (N(beta) = 1).
class Cone {
public:
    /// Default beta: the smallest totally positive unit > 1 of O_K.
    static Cone make(const FieldPtr& f);

    /// Custom beta, validated (unit, totally positive, != 1) and normalized
    /// to sigma1 > 1 by conjugating if necessary.
    static Cone make(const FieldPtr& f, FieldElement beta);

    const FieldPtr& field() const { return field_; }
    const FieldElement& beta() const { return beta_; }
    long long trace() const { return trace_; }  // Tr(beta), a rational integer >= 3

    const Real& beta1() const { return beta1_; }
    const Real& beta2() const { return beta2_; }
    double beta1_d() const { return beta1_dbl_; }
    double beta2_d() const { return beta2_dbl_; }

    /// Q(a,b), valid while a,b and the result stay within long long.
    long long norm_of(long long a, long long b) const {
        return a * a + trace_ * a * b + b * b;
    }

private:
    Cone(FieldPtr field, FieldElement beta);

    FieldPtr field_;
    FieldElement beta_;
    long long trace_;
    Real beta1_, beta2_;
    double beta1_dbl_, beta2_dbl_;
};

struct ConeElement {
    long long a, b;
    long long norm;
    FieldElement value;  // a + b*beta exactly
};

/// Exact coefficients (1, Tr(beta), N(beta)) of the norm form.
struct NormForm {
    Rational a2, ab, b2;
};

ConeElement cone_element(const Cone& cone, long long a, long long b);
NormForm norm_form(const Cone& cone);

/// All (a,b) with a,b >= 1 and Q(a,b) <= max_norm, sorted by (norm, a).
std::vector<ConeElement> enumerate_cone(const Cone& cone, long long max_norm);

/// Largest b >= 0 with Q(a,b) <= max_norm (0 if none); helper shared with the
/// series kernels.
long long cone_b_max(long long trace, long long a, long long max_norm);

}  // namespace mdzeta
