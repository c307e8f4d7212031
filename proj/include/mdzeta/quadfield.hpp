#pragma once

#include "mdzeta/real.hpp"

#include <memory>
#include <string>
#include <utility>

namespace mdzeta {

// Integral basis of the ring of integers O_K in K = Q(sqrt(D)):
//   D = 2,3 (mod 4):  {1, sqrt(D)}
//   D = 1   (mod 4):  {1, (1+sqrt(D))/2}
enum class RingBasis { Integer, HalfInteger };

class QuadraticField;
using FieldPtr = std::shared_ptr<const QuadraticField>;

/// A real quadratic field Q(sqrt(D)), D squarefree and > 1.
class QuadraticField {
public:
    long long d() const { return d_; }
    const Real& sqrt_d() const { return sqrt_d_; }
    RingBasis ring_basis() const { return basis_; }
    int precision() const { return precision_; }
    long long discriminant() const {
        return basis_ == RingBasis::HalfInteger ? d_ : 4 * d_;
    }

    friend FieldPtr make_field(long long d, int precision);

private:
    QuadraticField(long long d, int precision);

    long long d_;
    int precision_;
    RingBasis basis_;
    Real sqrt_d_;
};

/// Validates D (rejects D <= 1, non-squarefree D) and builds the field.
/// `precision` is the number of decimal digits the caller relies on; the
/// internal representation always carries kMaxPrecisionDigits digits.
FieldPtr make_field(long long d, int precision = 50);

/// An element a + b*sqrt(D) with exact rational coordinates.
class FieldElement {
public:
    FieldElement(Rational a, Rational b, FieldPtr field);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const FieldPtr& field() const { return field_; }

    Rational norm() const;   // a^2 - b^2 D
    Rational trace() const;  // 2a

    // (sigma1, sigma2) = (a + b sqrt D, a - b sqrt D); sigma1 uses +sqrt(D).
    std::pair<Real, Real> embed() const;
    Real sigma1() const;
    Real sigma2() const;

    FieldElement conjugate() const;
    FieldElement inverse() const;  // throws for zero

    // Exact sign of a + b sqrt(D); no floating comparisons.
    int sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_totally_positive() const;
    bool is_algebraic_integer() const;
    bool is_unit() const;  // algebraic integer with |norm| = 1

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rational& c) const;
    bool operator==(const FieldElement& o) const;

    std::string str() const;

private:
    void check_same_field(const FieldElement& o) const;

    Rational a_, b_;
    FieldPtr field_;
};

FieldElement element(const FieldPtr& f, Rational a, Rational b);

/// Smallest unit > 1 of O_K, via the continued fraction of sqrt(D)
/// (resp. (1+sqrt(D))/2 for D = 1 mod 4).
FieldElement fundamental_unit(const FieldPtr& f);

/// Oracle: direct search over the Pell equations a^2 - D b^2 = +-1
/// (+-4 on the half-integer lattice). Must agree with fundamental_unit.
FieldElement fundamental_unit_bruteforce(const FieldPtr& f, long long b_limit = 50'000'000);

/// beta = eps if N(eps) = +1, else eps^2; always sigma1(beta) > 1 > sigma2(beta) > 0.
FieldElement totally_positive_unit(const FieldPtr& f);

bool is_totally_positive(const FieldElement& x);

}  // namespace mdzeta
