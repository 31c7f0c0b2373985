#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace perturbcc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 100 decimal digits; used where double's 15-16 digits cannot resolve the
// quantities involved (tiny perturbation deltas, long error-decay logs).
using BigFloat = boost::multiprecision::cpp_bin_float_100;

// base^exp for exp >= 0.
inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1u) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

// Conversion goes through BigFloat so that numerator/denominator sizes far
// beyond double's range still divide to a representable quotient.
template <class Real>
Real to_real(const Rational& r) {
    BigFloat num(boost::multiprecision::numerator(r));
    BigFloat den(boost::multiprecision::denominator(r));
    return static_cast<Real>(num / den);
}

inline double to_double(const Rational& r) { return to_real<double>(r); }

}  // namespace perturbcc
