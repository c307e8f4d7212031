#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace mdzeta {

// Working high-precision type: 100 decimal digits, plain (non-expression-template)
// number semantics. Hot numeric kernels use double; Real is for exact-identity
// checks, embeddings and verification paths.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                           boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Highest precision a caller may request through the public API.
inline constexpr int kMaxPrecisionDigits = 100;

inline Real to_real(const Rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

inline double to_double(const Real& x) { return static_cast<double>(x); }

// Fixed-significant-digit decimal string, no trailing garbage beyond `digits`.
inline std::string real_str(const Real& x, int digits) {
    return x.str(digits, std::ios_base::fmtflags(0));
}

}  // namespace mdzeta
