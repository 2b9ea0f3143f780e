#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "qdef/definiteness2.hpp"
#include "qdef/errors.hpp"
#include "qdef/oracle.hpp"
#include "qdef/tensors.hpp"

namespace qdef {

/// Sign class of the portal quadratic M(p1, p2) via its 2x2 coefficient
/// matrix. A 2x2 form is negative definite iff the leading coefficient is
/// negative and the determinant positive; the determinant-negative case is
/// indefinite.
enum class MFormClass {
    Zero,
    PositiveDefinite,
    PositiveSemidefinite,
    NegativeDefinite,
    NegativeSemidefinite,
    Indefinite,
};

/// M(p) >= 0 everywhere: the regime where the plain quartic couplings decide.
inline bool m_form_nonneg(MFormClass m) {
    return m == MFormClass::Zero || m == MFormClass::PositiveDefinite ||
           m == MFormClass::PositiveSemidefinite;
}

/// M(p) < 0 for every p != 0: the regime the primed couplings decide.
inline bool m_form_negdef(MFormClass m) { return m == MFormClass::NegativeDefinite; }

std::string m_form_class_name(MFormClass m);

template <class R>
R eval_M(const Couplings3<R>& c, const R& p1, const R& p2) {
    return c.lH20 * p1 * p1 + c.lH11 * p1 * p2 + c.lH02 * p2 * p2;
}

template <class R>
MFormClass classify_M(const Couplings3<R>& c) {
    const R& p = c.lH20;
    const R& h = c.lH11;
    const R& q = c.lH02;
    if (p == 0 && h == 0 && q == 0) return MFormClass::Zero;
    const int sdet = sign_of(4 * p * q - h * h);
    if (sdet > 0)
        return sign_of(p) > 0 ? MFormClass::PositiveDefinite : MFormClass::NegativeDefinite;
    if (sdet < 0) return MFormClass::Indefinite;
    const int st = sign_of(p + q);
    if (st > 0) return MFormClass::PositiveSemidefinite;
    if (st < 0) return MFormClass::NegativeSemidefinite;
    return MFormClass::Indefinite; // unreachable: det = 0 and trace = 0 force the zero form
}

/// Couplings of V' = 4 lH Vbar - M^2, plus its discriminant.
template <class R>
struct PrimedCouplings {
    R l40p, l31p, l22p, l13p, l04p, delta_p;
};

template <class R>
PrimedCouplings<R> primed_couplings(const Couplings3<R>& c) {
    PrimedCouplings<R> r{
        4 * c.quartic2.l40 * c.lH - c.lH20 * c.lH20,
        4 * c.lH * c.quartic2.l31 - 2 * c.lH20 * c.lH11,
        4 * c.lH * c.quartic2.l22 - 2 * c.lH20 * c.lH02 - c.lH11 * c.lH11,
        4 * c.lH * c.quartic2.l13 - 2 * c.lH02 * c.lH11,
        4 * c.quartic2.l04 * c.lH - c.lH02 * c.lH02,
        R(0),
    };
    r.delta_p = quartic_discriminant(QuarticPoly<R>(r.l40p, r.l31p, r.l22p, r.l13p, r.l04p));
    return r;
}

template <class R>
Couplings2<R> primed_as_couplings2(const PrimedCouplings<R>& p) {
    return Couplings2<R>(p.l40p, p.l31p, p.l22p, p.l13p, p.l04p);
}

/// Fixing the field direction, the potential is lH t^2 + M t + Vbar in
/// t = h^2; positivity over h is the half-line test on that quadratic.
template <class R>
bool pointwise_reduction(const Couplings3<R>& c, const R& p1, const R& p2, bool strict,
                         const Tolerance& tol = {}) {
    if (!(sign_of(c.lH) > 0)) throw NonPositiveLambdaH("pointwise_reduction: lambda_H must be > 0");
    return quadratic_on_halfline(c.lH, eval_M(c, p1, p2), eval_couplings2(c.quartic2, p1, p2),
                                 strict, tol);
}

enum class Confidence { Analytic, NumericOracle };

enum class Verdict3Class {
    PositiveDefinite,
    PositiveSemidefiniteOnly,
    Indefinite,
    AnalyticInconclusive,
};

struct Verdict3 {
    Verdict3Class cls;
    std::string certificate;
    Confidence confidence = Confidence::Analytic;
    std::optional<std::array<double, 3>> witness; // present iff Indefinite; h >= 0
    bool boundary = false;
    MFormClass m_class;
};

/// Certificate for a verdict lifted from the binary classifier; primed_route
/// selects the negative-M wording.
std::string lift3_certificate(bool primed_route, DecisionBranch b);

namespace detail {

// Same power-of-two rescaling as the binary classifier; the primed-coupling
// arithmetic is quadratic in the inputs, so extreme magnitudes overflow even
// sooner. Verdict class is invariant under c -> s c.
inline Couplings3<double> normalize_range3(Couplings3<double> c) {
    const double m = std::max({std::fabs(c.lH), std::fabs(c.lH20), std::fabs(c.lH11),
                               std::fabs(c.lH02), std::fabs(c.quartic2.l40),
                               std::fabs(c.quartic2.l31), std::fabs(c.quartic2.l22),
                               std::fabs(c.quartic2.l13), std::fabs(c.quartic2.l04)});
    if (m == 0.0 || (m < 1e40 && m > 1e-40)) return c;
    const double s = std::ldexp(1.0, -std::ilogb(m));
    return Couplings3<double>(s * c.lH, s * c.lH20, s * c.lH11, s * c.lH02,
                              Couplings2<double>(s * c.quartic2.l40, s * c.quartic2.l31,
                                                 s * c.quartic2.l22, s * c.quartic2.l13,
                                                 s * c.quartic2.l04));
}
template <class R>
Couplings3<R> normalize_range3(Couplings3<R> c) {
    return c;
}

inline std::array<double, 3> normalize_maxnorm3(std::array<double, 3> w) {
    const double m = std::max({std::fabs(w[0]), std::fabs(w[1]), std::fabs(w[2])});
    if (m > 0.0)
        for (double& x : w) x /= m;
    return w;
}

// lH == 0 and M not PSD: pick u with M(u) < 0, then h large enough that
// M(u) h^2 + Vbar(u) <= -1.
template <class R>
std::array<double, 3> sinking_direction_lh0(const Couplings3<R>& c) {
    const double p = to_double(c.lH20), h = to_double(c.lH11), q = to_double(c.lH02);
    double u1, u2;
    if (p < 0.0) {
        u1 = 1.0;
        u2 = 0.0;
    } else if (q < 0.0) {
        u1 = 0.0;
        u2 = 1.0;
    } else if (p > 0.0) {
        u1 = -h / (2.0 * p); // vertex of M(t, 1); negative because det < 0
        u2 = 1.0;
    } else {
        u1 = -(q + 1.0) / h; // p == 0 forces h != 0 here
        u2 = 1.0;
    }
    const double m = p * u1 * u1 + h * u1 * u2 + q * u2 * u2;
    const double vb = eval_couplings2(to_double_couplings(c.quartic2), u1, u2);
    const double hw = std::sqrt((std::fabs(vb) + 1.0) / std::max(-m, 1e-300));
    return normalize_maxnorm3({u1, u2, hw});
}

template <class R>
Verdict3 classify_lambda_h_zero(const Couplings3<R>& c, const Tolerance& tol, MFormClass mc) {
    // V = M h^2 + Vbar: unbounded below unless M is PSD, never strictly
    // positive at (0, 0, 1). PSD iff M PSD and Vbar PSD.
    Verdict3 v;
    v.m_class = mc;
    const Verdict2 inner = classify_couplings2(c.quartic2, tol);
    v.boundary = inner.boundary;
    if (m_form_nonneg(mc) && inner.cls != Verdict2Class::Indefinite) {
        v.cls = Verdict3Class::PositiveSemidefiniteOnly;
        v.certificate = "edge-lambdaH-zero";
        return v;
    }
    v.cls = Verdict3Class::Indefinite;
    v.certificate = "edge-lambdaH-zero-violated";
    if (inner.cls == Verdict2Class::Indefinite && inner.witness)
        v.witness = std::array<double, 3>{(*inner.witness)[0], (*inner.witness)[1], 0.0};
    else
        v.witness = sinking_direction_lh0(c);
    return v;
}

} // namespace detail

/// Decision procedure for the three-field potential. The two theorem-covered
/// regimes (M PSD, M ND) lift the binary-quartic verdict analytically; the
/// mixed-sign regime uses a sufficient test and otherwise defers to the
/// numeric sphere minimizer, reported as such.
template <class R>
Verdict3 classify_couplings3(const Couplings3<R>& raw, const Tolerance& tol = {},
                             const SphereScanOptions& oracle_opt = {}) {
    const Couplings3<R> c = detail::normalize_range3(raw);
    Verdict3 v;
    v.m_class = classify_M(c);
    const int sh = sign_of(c.lH);

    if (sh < 0) {
        v.cls = Verdict3Class::Indefinite;
        v.certificate = "neg-lambdaH";
        v.witness = std::array<double, 3>{0.0, 0.0, 1.0};
        return v;
    }
    if (sh == 0) return detail::classify_lambda_h_zero(c, tol, v.m_class);

    if (m_form_nonneg(v.m_class)) {
        const Verdict2 inner = classify_couplings2(c.quartic2, tol);
        v.boundary = inner.boundary;
        if (inner.cls == Verdict2Class::Indefinite) {
            v.cls = Verdict3Class::Indefinite;
            v.certificate = "Thm3.6-(1)-violated";
            if (inner.witness)
                v.witness = std::array<double, 3>{(*inner.witness)[0], (*inner.witness)[1], 0.0};
        } else {
            v.cls = inner.cls == Verdict2Class::PositiveDefinite
                        ? Verdict3Class::PositiveDefinite
                        : Verdict3Class::PositiveSemidefiniteOnly;
            v.certificate = lift3_certificate(false, inner.branch);
        }
        return v;
    }

    if (m_form_negdef(v.m_class)) {
        const PrimedCouplings<R> pr = primed_couplings(c);
        const Verdict2 inner = classify_couplings2(primed_as_couplings2(pr), tol);
        v.boundary = inner.boundary;
        if (inner.cls == Verdict2Class::Indefinite) {
            v.cls = Verdict3Class::Indefinite;
            v.certificate = "Thm3.6-(2)-violated";
            if (inner.witness) {
                // V(p, h) = V'(p) / (4 lH) at the minimizing h^2 = -M(p)/(2 lH)
                const double w1 = (*inner.witness)[0], w2 = (*inner.witness)[1];
                const double m = to_double(c.lH20) * w1 * w1 + to_double(c.lH11) * w1 * w2 +
                                 to_double(c.lH02) * w2 * w2;
                const double hw = std::sqrt(std::max(0.0, -m / (2.0 * to_double(c.lH))));
                v.witness = detail::normalize_maxnorm3({w1, w2, hw});
            }
        } else {
            v.cls = inner.cls == Verdict2Class::PositiveDefinite
                        ? Verdict3Class::PositiveDefinite
                        : Verdict3Class::PositiveSemidefiniteOnly;
            v.certificate = lift3_certificate(true, inner.branch);
        }
        return v;
    }

    // Mixed-sign M: Vbar and V' both positive definite is sufficient for
    // positive definiteness (each pointwise branch of the h-reduction holds).
    const Verdict2 base = classify_couplings2(c.quartic2, tol);
    const Verdict2 primed = classify_couplings2(primed_as_couplings2(primed_couplings(c)), tol);
    v.boundary = base.boundary || primed.boundary;
    if (base.cls == Verdict2Class::PositiveDefinite &&
        primed.cls == Verdict2Class::PositiveDefinite) {
        v.cls = Verdict3Class::PositiveDefinite;
        v.certificate = "Thm3.4-sufficient";
        return v;
    }

    const Couplings3<double> cd = to_double_couplings(c);
    const MinResult mr = min_potential3(cd, oracle_opt);
    const double scale = std::max({std::fabs(cd.lH), std::fabs(cd.lH20), std::fabs(cd.lH11),
                                   std::fabs(cd.lH02), std::fabs(cd.quartic2.l40),
                                   std::fabs(cd.quartic2.l31), std::fabs(cd.quartic2.l22),
                                   std::fabs(cd.quartic2.l13), std::fabs(cd.quartic2.l04)});
    const double band = tol.rel_band * scale;
    v.confidence = Confidence::NumericOracle;
    if (mr.min_value > band) {
        v.cls = Verdict3Class::PositiveDefinite;
        v.certificate = "oracle-positive";
    } else if (mr.min_value < -band) {
        v.cls = Verdict3Class::Indefinite;
        v.certificate = "oracle-negative";
        v.witness = detail::normalize_maxnorm3({mr.argmin[0], mr.argmin[1], mr.argmin[2]});
    } else {
        v.cls = Verdict3Class::AnalyticInconclusive;
        v.certificate = "oracle-inconclusive";
    }
    return v;
}

} // namespace qdef
