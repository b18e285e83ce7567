// Arbitrary-precision integers and rationals plus small exact helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace spinsh {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// n! as an exact big integer. Negative n throws.
inline BigInt factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (std::int64_t k = 2; k <= n; ++k) r *= k;
    return r;
}

/// Sign of a rational as -1, 0 or +1.
inline int sign_of(const BigRational& q) {
    if (q == 0) return 0;
    return q < 0 ? -1 : 1;
}

/// If q >= 0 is the square of a rational, store that square root in `root`
/// and return true; otherwise return false and leave `root` untouched.
inline bool exact_sqrt(const BigRational& q, BigRational& root) {
    if (q < 0) return false;
    if (q == 0) {
        root = 0;
        return true;
    }
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const BigInt rn = boost::multiprecision::sqrt(num);
    if (rn * rn != num) return false;
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rd * rd != den) return false;
    root = BigRational(rn, rd);
    return true;
}

/// Rational -> double. Uses the library conversion, which handles operands
/// far outside double range by forming the quotient first.
inline double to_double(const BigRational& q) {
    return q.convert_to<double>();
}

} // namespace spinsh
