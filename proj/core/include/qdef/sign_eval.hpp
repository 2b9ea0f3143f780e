#pragma once

#include <cmath>

#include "qdef/scalar.hpp"

namespace qdef {

/// Relative comparison band for the floating-point realization. Values whose
/// magnitude is below rel_band times the scale of the compared terms are
/// treated as zero and the verdict is flagged as a boundary case.
struct Tolerance {
    double rel_band = 1e-9;
};

/// Three-valued sign backend shared by all closed-form tests. The sign of
/// expressions of the form A + B*sqrt(q) (q >= 0) is everything the quartic
/// criteria need; the rational specialization decides it exactly, without
/// ever forming a square root.
template <class R>
class SignEval;

template <>
class SignEval<double> {
public:
    explicit SignEval(const Tolerance& tol = {}) : eps_(tol.rel_band) {}

    int sign(double value, double magnitude) {
        if (value == 0.0 && magnitude == 0.0) return 0;
        if (std::fabs(value) <= eps_ * magnitude) {
            boundary_ = true;
            return 0;
        }
        return value > 0.0 ? 1 : -1;
    }

    /// sign of A + B*sqrt(q)
    int sign_sqrt(double a, double b, double q) {
        const double s = q > 0.0 ? std::sqrt(q) : 0.0;
        return sign(a + b * s, std::fabs(a) + std::fabs(b) * s);
    }

    /// sign of b*sqrt(e) - d*sqrt(a) with a, e >= 0
    int sign_sqrt_diff(double b, double e, double d, double a) {
        const double lhs = b * std::sqrt(e);
        const double rhs = d * std::sqrt(a);
        return sign(lhs - rhs, std::fabs(lhs) + std::fabs(rhs));
    }

    bool boundary() const { return boundary_; }

private:
    double eps_;
    bool boundary_ = false;
};

template <>
class SignEval<Rational> {
public:
    explicit SignEval(const Tolerance& = {}) {}

    int sign(const Rational& value, const Rational&) { return value.sign(); }

    int sign_sqrt(const Rational& a, const Rational& b, const Rational& q) {
        if (q == 0 || b == 0) return a.sign();
        const int sa = a.sign();
        const int sb = b.sign();
        if (sa >= 0 && sb > 0) return 1;
        if (sa <= 0 && sb < 0) return -1;
        // strict opposite signs: compare a^2 against b^2 q
        const Rational lhs = a * a;
        const Rational rhs = b * b * q;
        const int cmp = (lhs > rhs) - (lhs < rhs);
        return sa > 0 ? cmp : -cmp;
    }

    int sign_sqrt_diff(const Rational& b, const Rational& e, const Rational& d, const Rational& a) {
        const int sl = e == 0 ? 0 : b.sign();
        const int sr = a == 0 ? 0 : d.sign();
        if (sl >= 0 && sr <= 0) return (sl == 0 && sr == 0) ? 0 : 1;
        if (sl <= 0 && sr >= 0) return (sl == 0 && sr == 0) ? 0 : -1;
        // both strictly positive or both strictly negative
        const Rational lhs = b * b * e;
        const Rational rhs = d * d * a;
        const int cmp = (lhs > rhs) - (lhs < rhs);
        return sl > 0 ? cmp : -cmp;
    }

    bool boundary() const { return false; }
};

} // namespace qdef
