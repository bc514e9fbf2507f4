#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bigraph {

// Exact arithmetic only; no floating point is used anywhere in the library.
using BigNat = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigNat factorial(int p) {
    BigNat f = 1;
    for (int i = 2; i <= p; ++i) f *= i;
    return f;
}

inline BigNat binomial(int top, int k) {
    if (k < 0 || k > top) return 0;
    if (k > top - k) k = top - k;
    BigNat r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= top - k + i;
        r /= i;  // exact: r is a binomial prefix
    }
    return r;
}

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigNat denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "num/den" with the denominator always present, e.g. "0/1", "3/2".
inline std::string fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace bigraph
