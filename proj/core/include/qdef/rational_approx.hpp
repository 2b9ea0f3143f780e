#pragma once

#include <cmath>
#include <vector>

#include "qdef/scalar.hpp"

namespace qdef {

/// Continued-fraction convergents of x with denominator at most max_den,
/// smallest denominator first. Exact candidates for values that look like
/// simple rationals in floating point.
inline std::vector<Rational> cf_approximants(double x, long long max_den = 1'000'000'000'000LL) {
    std::vector<Rational> out;
    if (!std::isfinite(x)) return out;
    using boost::multiprecision::cpp_int;
    cpp_int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int i = 0; i < 64; ++i) {
        const double fl = std::floor(frac);
        if (std::fabs(fl) > 9e18) break;
        const cpp_int ai = static_cast<long long>(fl);
        const cpp_int p2 = ai * p1 + p0;
        const cpp_int q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        out.emplace_back(p2, q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
        if (!std::isfinite(frac)) break;
    }
    return out;
}

} // namespace qdef
