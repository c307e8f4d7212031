#include "mdzeta/quadfield.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mdzeta {

namespace {

bool is_squarefree(long long d) {
    if (d % 4 == 0) return false;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace

QuadraticField::QuadraticField(long long d, int precision)
    : d_(d), precision_(precision), basis_(d % 4 == 1 ? RingBasis::HalfInteger : RingBasis::Integer) {
    sqrt_d_ = sqrt(Real(d));
}

FieldPtr make_field(long long d, int precision) {
    if (d <= 1) throw std::invalid_argument("make_field: D must be > 1");
    if (d > 1'000'000'000'000LL) throw std::invalid_argument("make_field: D too large");
    if (precision < 1 || precision > kMaxPrecisionDigits)
        throw std::invalid_argument("make_field: precision must be in [1, 100] digits");
    if (!is_squarefree(d)) throw std::invalid_argument("make_field: D not squarefree");
    return FieldPtr(new QuadraticField(d, precision));
}

FieldElement::FieldElement(Rational a, Rational b, FieldPtr field)
    : a_(std::move(a)), b_(std::move(b)), field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("FieldElement: null field");
}

FieldElement element(const FieldPtr& f, Rational a, Rational b) {
    return FieldElement(std::move(a), std::move(b), f);
}

Rational FieldElement::norm() const { return a_ * a_ - b_ * b_ * field_->d(); }

Rational FieldElement::trace() const { return 2 * a_; }

std::pair<Real, Real> FieldElement::embed() const {
    Real bs = to_real(b_) * field_->sqrt_d();
    Real ar = to_real(a_);
    return {ar + bs, ar - bs};
}

Real FieldElement::sigma1() const { return to_real(a_) + to_real(b_) * field_->sqrt_d(); }
Real FieldElement::sigma2() const { return to_real(a_) - to_real(b_) * field_->sqrt_d(); }

FieldElement FieldElement::conjugate() const { return FieldElement(a_, -b_, field_); }

FieldElement FieldElement::inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("FieldElement::inverse: zero element");
    return FieldElement(a_ / n, -b_ / n, field_);
}

int FieldElement::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b| sqrt(D), decided by a^2 vs b^2 D.
    Rational diff = a_ * a_ - b_ * b_ * field_->d();
    int sd = diff.sign();  // never 0: D is not a perfect square
    return sa > 0 ? sd : -sd;
}

bool FieldElement::is_totally_positive() const {
    return sign() > 0 && conjugate().sign() > 0;
}

bool is_totally_positive(const FieldElement& x) { return x.is_totally_positive(); }

bool FieldElement::is_algebraic_integer() const {
    if (field_->ring_basis() == RingBasis::Integer)
        return denominator(a_) == 1 && denominator(b_) == 1;
    // Half-integer lattice: 2a, 2b in Z with 2a = 2b (mod 2).
    Rational p = 2 * a_, q = 2 * b_;
    if (denominator(p) != 1 || denominator(q) != 1) return false;
    return (numerator(p) - numerator(q)) % 2 == 0;
}

bool FieldElement::is_unit() const {
    if (!is_algebraic_integer()) return false;
    Rational n = norm();
    return n == 1 || n == -1;
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_->d() != o.field_->d())
        throw std::invalid_argument("FieldElement: mixed fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(a_ + o.a_, b_ + o.b_, field_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(a_ - o.a_, b_ - o.b_, field_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(a_ * o.a_ + b_ * o.b_ * field_->d(), a_ * o.b_ + b_ * o.a_, field_);
}

FieldElement FieldElement::operator*(const Rational& c) const {
    return FieldElement(a_ * c, b_ * c, field_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_->d() == o.field_->d() && a_ == o.a_ && b_ == o.b_;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    if (denominator(a_) == 2 && denominator(b_) == 2) {
        os << "(" << numerator(a_) << " + " << numerator(b_) << "*sqrt(" << field_->d() << "))/2";
    } else {
        os << a_ << " + " << b_ << "*sqrt(" << field_->d() << ")";
    }
    return os.str();
}

namespace {

long long isqrt_ll(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// One perfect-square probe for the Pell search.
bool probe_square(const BigInt& v, BigInt& root) {
    if (v < 0) return false;
    root = sqrt(v);
    return root * root == v;
}

}  // namespace

FieldElement fundamental_unit_bruteforce(const FieldPtr& f, long long b_limit) {
    const long long D = f->d();
    if (f->ring_basis() == RingBasis::HalfInteger) {
        // u = (p + q sqrt D)/2, p^2 - D q^2 = +-4, p = q (mod 2).
        for (BigInt q = 1; q <= b_limit; ++q) {
            BigInt base = D * q * q;
            for (int pm : {-4, +4}) {
                BigInt p;
                if (probe_square(base + pm, p) && (p - q) % 2 == 0) {
                    return FieldElement(Rational(p, 2), Rational(q, 2), f);
                }
            }
        }
    } else {
        for (BigInt q = 1; q <= b_limit; ++q) {
            BigInt base = D * q * q;
            for (int pm : {-1, +1}) {
                BigInt p;
                if (probe_square(base + pm, p)) {
                    return FieldElement(Rational(p), Rational(q), f);
                }
            }
        }
    }
    throw std::runtime_error("fundamental_unit_bruteforce: search bound exceeded");
}

FieldElement fundamental_unit(const FieldPtr& f) {
    // Continued fraction of alpha0 = (P0 + sqrt D)/Q0 with exact integer states.
    // When the state (P,Q) first revisits an earlier state, the digit word of
    // one cycle yields the unit u = q1*alpha_j + q0 (an eigenvalue of the
    // integer cycle matrix, hence an algebraic integer of norm +-1).
    const long long D = f->d();
    const long long s = isqrt_ll(D);
    long long P = 0, Q = 1;
    if (f->ring_basis() == RingBasis::HalfInteger) {
        P = 1;
        Q = 2;
    }

    std::map<std::pair<long long, long long>, int> seen;
    std::vector<long long> digits;
    int cycle_start = -1;
    for (int step = 0; step < 200000; ++step) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            cycle_start = it->second;
            break;
        }
        seen.emplace(state, step);
        long long a = (P + s) / Q;  // floor((P + sqrt D)/Q), Q > 0
        digits.push_back(a);
        long long Pn = a * Q - P;
        long long Qn = (D - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
        if (Q <= 0) throw std::runtime_error("fundamental_unit: continued fraction state corrupt");
    }
    if (cycle_start < 0) throw std::runtime_error("fundamental_unit: period not found");

    // alpha_j for the revisited state; (P,Q) currently hold it.
    const long long Pj = P, Qj = Q;

    // Convergent denominators of the cycle word digits[cycle_start..end).
    BigInt q1 = 0, q0 = 1;  // q_{-1}, q_{-2}
    for (size_t i = cycle_start; i < digits.size(); ++i) {
        BigInt t = digits[i] * q1 + q0;
        q0 = q1;
        q1 = t;
    }
    // u = q1 * (Pj + sqrt D)/Qj + q0
    FieldElement u(Rational(q1 * Pj + q0 * Qj, Qj), Rational(q1, Qj), f);

    Rational n = u.norm();
    if (!(n == 1 || n == -1) || !u.is_algebraic_integer())
        throw std::runtime_error("fundamental_unit: cycle product is not a unit of O_K");
    if (u.sign() <= 0 || (u - element(f, 1, 0)).sign() <= 0)
        throw std::runtime_error("fundamental_unit: normalization failed");
    return u;
}

FieldElement totally_positive_unit(const FieldPtr& f) {
    FieldElement eps = fundamental_unit(f);
    FieldElement beta = eps.norm() == 1 ? eps : eps * eps;
    if (!beta.is_totally_positive() || beta.norm() != 1 || beta.is_one())
        throw std::runtime_error("totally_positive_unit: postcondition failed");
    // eps > 1 already, so sigma1(beta) > 1 holds for both branches.
    return beta;
}

}  // namespace mdzeta
