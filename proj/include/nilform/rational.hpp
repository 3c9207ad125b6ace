#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nilform/error.hpp"

namespace nilform {

// Exact scalars. cpp_rational keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw error("rational with zero denominator");
    // Division normalizes sign and reduces; the two-argument constructor
    // rejects negative denominators.
    return Rational(num) / Rational(den);
}

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline Rational factorial(unsigned k) {
    Integer acc = 1;
    for (unsigned i = 2; i <= k; ++i)
        acc *= i;
    return Rational(acc);
}

inline std::string to_string(const Rational& r) {
    if (rat_den(r) == 1)
        return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

} // namespace nilform
