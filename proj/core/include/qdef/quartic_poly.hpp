#pragma once

#include <utility>

#include "qdef/scalar.hpp"

namespace qdef {

/// Coefficients of P(t) = a t^4 + b t^3 + c t^2 + d t + e. Immutable after
/// construction; constructors reject non-finite values.
template <class R>
struct QuarticPoly {
    R a, b, c, d, e;

    QuarticPoly(R a_, R b_, R c_, R d_, R e_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), e(std::move(e_)) {
        require_finite(a, "QuarticPoly.a");
        require_finite(b, "QuarticPoly.b");
        require_finite(c, "QuarticPoly.c");
        require_finite(d, "QuarticPoly.d");
        require_finite(e, "QuarticPoly.e");
    }

    R operator()(const R& t) const { return (((a * t + b) * t + c) * t + d) * t + e; }

    R derivative_at(const R& t) const { return ((4 * a * t + 3 * b) * t + 2 * c) * t + d; }

    /// t^4 P(1/t): swaps the roles of the leading and trailing coefficients.
    QuarticPoly reversed() const { return QuarticPoly(e, d, c, b, a); }
};

template <class R>
QuarticPoly<double> to_double_poly(const QuarticPoly<R>& p) {
    return QuarticPoly<double>(to_double(p.a), to_double(p.b), to_double(p.c), to_double(p.d),
                               to_double(p.e));
}

} // namespace qdef
