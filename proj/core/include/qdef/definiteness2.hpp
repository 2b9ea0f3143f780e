#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "qdef/errors.hpp"
#include "qdef/oracle.hpp"
#include "qdef/quartic_poly.hpp"
#include "qdef/rational_approx.hpp"
#include "qdef/sign_eval.hpp"
#include "qdef/tensors.hpp"

namespace qdef {

enum class Verdict2Class { PositiveDefinite, PositiveSemidefiniteOnly, Indefinite };

/// Which part of the decision tree settled an instance. Stable identifiers;
/// certificate strings are derived from these per surface.
enum class DecisionBranch {
    ZeroForm,
    NegLeading,
    NegTrailing,
    PdCase1,
    PdCase2i,
    PdCase2ii,
    PsdBranchI,
    PsdBranchII,
    LemmaViolated,
    EdgeLeadOdd,
    EdgeTrailOdd,
    EdgeLeadQuadPsd,
    EdgeTrailQuadPsd,
    EdgeLeadQuadIndef,
    EdgeTrailQuadIndef,
};

std::string tensor2_certificate(DecisionBranch b);
std::string couplings2_certificate(DecisionBranch b);

struct Verdict2 {
    Verdict2Class cls;
    std::string certificate;
    std::optional<std::array<double, 2>> witness; // present iff Indefinite
    bool boundary = false;
    DecisionBranch branch;
};

/// Classical invariants of the binary quartic; delta = 6912 (I^3 - 27 J^2).
template <class R>
struct DiscriminantReport {
    R delta, I, J;
};

template <class R>
R quartic_discriminant(const QuarticPoly<R>& p) {
    const R p3 = 12 * p.a * p.e - 3 * p.b * p.d + p.c * p.c;
    const R q2 = 72 * p.a * p.c * p.e + 9 * p.b * p.c * p.d - 2 * p.c * p.c * p.c -
                 27 * p.a * p.d * p.d - 27 * p.b * p.b * p.e;
    return 4 * p3 * p3 * p3 - q2 * q2;
}

template <class R>
DiscriminantReport<R> discriminant_report(const Sym4Tensor2<R>& t) {
    DiscriminantReport<R> r{quartic_discriminant(restrict_to_line(t)), R(0), R(0)};
    r.I = t.v1111 * t.v2222 - 4 * t.v1112 * t.v1222 + 3 * t.v1122 * t.v1122;
    r.J = t.v1111 * t.v1122 * t.v2222 + 2 * t.v1112 * t.v1122 * t.v1222 -
          t.v1122 * t.v1122 * t.v1122 - t.v1111 * t.v1222 * t.v1222 -
          t.v1112 * t.v1112 * t.v2222;
    return r;
}

/// a t^2 + b t + c > 0 (>= 0) for all t >= 0, a > 0. Two branches: b >= 0
/// reduces to the value at t = 0; b < 0 needs the vertex, i.e. 4ac - b^2.
template <class R>
bool quadratic_on_halfline(const R& a, const R& b, const R& c, bool strict,
                           const Tolerance& tol = {}, bool* boundary = nullptr) {
    if (!(sign_of(a) > 0))
        throw NonPositiveLeadingCoefficient("quadratic_on_halfline: a must be > 0");
    SignEval<R> ev(tol);
    const R mag = abs_of(a) + abs_of(b) + abs_of(c);
    bool ok;
    if (ev.sign(b, mag) >= 0) {
        const int sc = ev.sign(c, mag);
        ok = strict ? sc > 0 : sc >= 0;
    } else {
        const int sv = ev.sign(4 * a * c - b * b, abs_of(4 * a * c) + b * b);
        ok = strict ? sv > 0 : sv >= 0;
    }
    if (boundary) *boundary = ev.boundary();
    return ok;
}

namespace detail {

// The discriminant arithmetic is degree six in the coefficients; rescale by
// a power of two (lossless for doubles, class-invariant by homogeneity) so
// extreme magnitudes stay inside the exponent range. Exact modes need none.
inline void normalize_range(double& a, double& b, double& c, double& d, double& e) {
    const double m = std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d),
                               std::fabs(e)});
    if (m == 0.0 || (m < 1e40 && m > 1e-40)) return;
    const double s = std::ldexp(1.0, -std::ilogb(m));
    a *= s;
    b *= s;
    c *= s;
    d *= s;
    e *= s;
}
template <class R>
void normalize_range(R&, R&, R&, R&, R&) {}

// ---------------------------------------------------------------------------
// Quartic positivity conditions for a > 0, e > 0. All square roots are
// eliminated by squaring with sign tracking, so each test is the sign of an
// expression A + B*sqrt(ae) and both scalar realizations share this code.
// ---------------------------------------------------------------------------

struct Lemma23Result {
    int delta_sign = 0;
    bool shared = false; // mixed-coefficient bound plus branch (i) or (ii)
    bool via_ii = false;
    bool case1 = false;

    bool nonneg() const { return delta_sign >= 0 && shared; }
    bool positive() const { return case1 || (delta_sign > 0 && shared); }
};

template <class R>
Lemma23Result eval_lemma23(const R& a, const R& b, const R& c, const R& d, const R& e,
                           SignEval<R>& ev) {
    Lemma23Result out;
    const R q = a * e;

    const R p3 = 12 * a * e - 3 * b * d + c * c;
    const R q2 = 72 * a * c * e + 9 * b * c * d - 2 * c * c * c - 27 * a * d * d - 27 * b * b * e;
    out.delta_sign =
        ev.sign(4 * p3 * p3 * p3 - q2 * q2, 4 * abs_of(p3) * abs_of(p3) * abs_of(p3) + q2 * q2);

    // |b√e - d√a| <= 4 sqrt(ace + 2ae√(ae)), squared
    const R bound_lhs = b * b * e + a * d * d - 16 * a * c * e;
    const bool bound_minus = ev.sign_sqrt(bound_lhs, -(2 * b * d + 32 * q), q) <= 0;

    const bool in_i = ev.sign_sqrt(c, R(2), q) >= 0 && ev.sign_sqrt(-c, R(6), q) >= 0;
    if (in_i) {
        out.shared = bound_minus;
    } else if (ev.sign_sqrt(c, R(-6), q) > 0) {
        // c > 6√(ae): also |b√e + d√a| <= 4 sqrt(ace - 2ae√(ae))
        const bool rad_ok = ev.sign_sqrt(a * c * e, -2 * q, q) >= 0;
        const bool bound_plus = ev.sign_sqrt(bound_lhs, 2 * b * d + 32 * q, q) <= 0;
        out.shared = bound_minus && rad_ok && bound_plus;
        out.via_ii = out.shared;
    }

    // strict-positivity knife edge: delta = 0, b√e = d√a,
    // b^2 + 8a√(ae) = 4ac < 24a√(ae)
    out.case1 = out.delta_sign == 0 && ev.sign_sqrt_diff(b, e, d, a) == 0 &&
                ev.sign_sqrt(b * b - 4 * a * c, 8 * a, q) == 0 &&
                ev.sign_sqrt(4 * a * c, -24 * a, q) < 0;
    return out;
}

template <class R>
R eval_form(const R& a, const R& b, const R& c, const R& d, const R& e, const R& x, const R& y) {
    const R xs = x * x, ys = y * y;
    return a * xs * xs + b * xs * x * y + c * xs * ys + d * x * ys * y + e * ys * ys;
}

inline std::array<double, 2> normalize_maxnorm(std::array<double, 2> w) {
    const double m = std::max(std::fabs(w[0]), std::fabs(w[1]));
    if (m > 0.0) {
        w[0] /= m;
        w[1] /= m;
    }
    return w;
}

// Search candidates around t_hint (plus a global dyadic sweep) for a point
// where eval(t) <= 0, evaluated in exact arithmetic for rational instances.
template <class R, class Eval>
std::optional<double> find_nonpositive_t(Eval&& eval, double t_hint) {
    auto ok = [&](double t) {
        return std::isfinite(t) && sign_of(eval(scalar_from_double<R>(t))) <= 0;
    };
    if (ok(t_hint)) return t_hint;
    for (const Rational& r : cf_approximants(t_hint)) {
        const double t = to_double(r);
        if (ok(t)) return t;
    }
    const double scale = std::max(1.0, std::fabs(t_hint));
    for (int k = 0; k <= 60; ++k)
        for (int s : {1, -1}) {
            const double t = t_hint + s * std::ldexp(scale, -k);
            if (ok(t)) return t;
        }
    for (int k = 0; k <= 63; ++k)
        for (int s : {1, -1}) {
            const double t = s * std::ldexp(1.0, k);
            if (ok(t)) return t;
        }
    return std::nullopt;
}

struct FormOutcome {
    Verdict2Class cls;
    DecisionBranch branch;
    bool boundary = false;
    std::optional<std::array<double, 2>> witness;
};

// Witness for the main-path Indefinite verdict: start from the independent
// sphere minimizer, then certify a line direction by direct evaluation.
template <class R>
std::array<double, 2> lemma_witness(const R& a, const R& b, const R& c, const R& d, const R& e) {
    const Sym4Tensor2<double> td(to_double(a), to_double(b) / 4.0, to_double(c) / 6.0,
                                 to_double(d) / 4.0, to_double(e));
    const MinResult mr = min_form2_on_sphere(td);
    const double x = mr.argmin[0], y = mr.argmin[1];
    const double hint = std::fabs(y) > 1e-14 ? x / y : (x >= 0.0 ? 1.0 : -1.0) * 1e15;
    auto p = [&](const R& t) { return eval_form(a, b, c, d, e, t, R(1)); };
    if (auto t = find_nonpositive_t<R>(p, hint)) return normalize_maxnorm({*t, 1.0});
    return normalize_maxnorm({x, y});
}

// a == 0 and b != 0: the form changes sign next to the (1, 0) axis.
template <class R>
std::array<double, 2> odd_edge_witness(const R& a, const R& b, const R& c, const R& d, const R& e) {
    const int sb = sign_of(b);
    for (int k = 2; k <= 200; ++k)
        for (int s : {-sb, sb}) {
            const double y = s * std::ldexp(1.0, -k);
            if (sign_of(eval_form(a, b, c, d, e, R(1), scalar_from_double<R>(y))) < 0)
                return {1.0, y};
        }
    return {1.0, -sb * 1e-8};
}

// Residual quadratic c x^2 + d x + e (at y = 1) is not PSD; e >= 0 here.
template <class R>
std::array<double, 2> quad_edge_witness(const R& c, const R& d, const R& e) {
    double hint = 0.0;
    if (sign_of(c) > 0) hint = to_double(-d / (2 * c));
    else if (sign_of(c) == 0) hint = to_double(-(e + 1) / d);
    else hint = to_double((abs_of(d) + abs_of(e) + 1) / abs_of(c)) + 1.0;
    auto quad = [&](const R& t) { return c * t * t + d * t + e; };
    if (auto t = find_nonpositive_t<R>(quad, hint)) return normalize_maxnorm({*t, 1.0});
    return normalize_maxnorm({hint, 1.0});
}

template <class R>
FormOutcome edge_lead(const R& a, const R& b, const R& c, const R& d, const R& e, bool reversed) {
    FormOutcome out;
    if (sign_of(b) != 0) {
        out.cls = Verdict2Class::Indefinite;
        out.branch = DecisionBranch::EdgeLeadOdd;
        out.witness = odd_edge_witness(a, b, c, d, e);
    } else {
        const R det4 = 4 * c * e - d * d;
        if (sign_of(c) >= 0 && sign_of(e) >= 0 && sign_of(det4) >= 0) {
            out.cls = Verdict2Class::PositiveSemidefiniteOnly;
            out.branch = DecisionBranch::EdgeLeadQuadPsd;
        } else {
            out.cls = Verdict2Class::Indefinite;
            out.branch = DecisionBranch::EdgeLeadQuadIndef;
            out.witness = quad_edge_witness(c, d, e);
        }
    }
    if (reversed) {
        switch (out.branch) {
        case DecisionBranch::EdgeLeadOdd: out.branch = DecisionBranch::EdgeTrailOdd; break;
        case DecisionBranch::EdgeLeadQuadPsd: out.branch = DecisionBranch::EdgeTrailQuadPsd; break;
        case DecisionBranch::EdgeLeadQuadIndef:
            out.branch = DecisionBranch::EdgeTrailQuadIndef;
            break;
        default: break;
        }
        if (out.witness) out.witness = std::array<double, 2>{(*out.witness)[1], (*out.witness)[0]};
    }
    return out;
}

// Total classification of the binary quartic form
//   F(x, y) = a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4.
// Structural dispatch uses exact coefficient signs; only the closed-form
// inequality tests run through the banded comparison backend.
template <class R>
FormOutcome classify_form(R a, R b, R c, R d, R e, const Tolerance& tol) {
    normalize_range(a, b, c, d, e);
    if (a == 0 && b == 0 && c == 0 && d == 0 && e == 0)
        return {Verdict2Class::PositiveSemidefiniteOnly, DecisionBranch::ZeroForm, false, {}};
    if (sign_of(a) < 0)
        return {Verdict2Class::Indefinite, DecisionBranch::NegLeading, false,
                std::array<double, 2>{1.0, 0.0}};
    if (sign_of(e) < 0)
        return {Verdict2Class::Indefinite, DecisionBranch::NegTrailing, false,
                std::array<double, 2>{0.0, 1.0}};
    if (sign_of(a) == 0) return edge_lead(a, b, c, d, e, false);
    if (sign_of(e) == 0) return edge_lead(e, d, c, b, a, true);

    SignEval<R> ev(tol);
    const Lemma23Result lem = eval_lemma23(a, b, c, d, e, ev);
    FormOutcome out;
    out.boundary = ev.boundary();
    if (lem.positive()) {
        out.cls = Verdict2Class::PositiveDefinite;
        out.branch = lem.case1 ? DecisionBranch::PdCase1
                               : (lem.via_ii ? DecisionBranch::PdCase2ii : DecisionBranch::PdCase2i);
    } else if (lem.nonneg()) {
        out.cls = Verdict2Class::PositiveSemidefiniteOnly;
        out.branch = lem.via_ii ? DecisionBranch::PsdBranchII : DecisionBranch::PsdBranchI;
    } else {
        out.cls = Verdict2Class::Indefinite;
        out.branch = DecisionBranch::LemmaViolated;
        out.witness = lemma_witness(a, b, c, d, e);
    }
    return out;
}

// A t^2 + B t + C >= 0 for all real t.
template <class R>
bool quad_nonneg_all(const R& A, const R& B, const R& C) {
    const int sa = sign_of(A);
    if (sa < 0) return false;
    if (sa == 0) return sign_of(B) == 0 && sign_of(C) >= 0;
    return sign_of(4 * A * C - B * B) >= 0;
}

template <class R>
bool quad_positive_all(const R& A, const R& B, const R& C) {
    const int sa = sign_of(A);
    if (sa < 0) return false;
    if (sa == 0) return sign_of(B) == 0 && sign_of(C) > 0;
    return sign_of(4 * A * C - B * B) > 0;
}

} // namespace detail

/// True iff P(t) >= 0 for every real t. Total: negative leading or trailing
/// coefficients yield false directly, zero ones reduce to a quadratic.
template <class R>
bool quartic_nonneg(const QuarticPoly<R>& p, const Tolerance& tol = {}, bool* boundary = nullptr) {
    if (boundary) *boundary = false;
    R a = p.a, b = p.b, c = p.c, d = p.d, e = p.e;
    detail::normalize_range(a, b, c, d, e);
    const int sa = sign_of(a), se = sign_of(e);
    if (sa < 0 || se < 0) return false;
    if (sa == 0) {
        if (sign_of(b) != 0) return false;
        return detail::quad_nonneg_all(c, d, e);
    }
    if (se == 0) {
        if (sign_of(d) != 0) return false;
        return detail::quad_nonneg_all(a, b, c);
    }
    SignEval<R> ev(tol);
    const auto lem = detail::eval_lemma23(a, b, c, d, e, ev);
    if (boundary) *boundary = ev.boundary();
    return lem.nonneg();
}

/// True iff P(t) > 0 for every real t.
template <class R>
bool quartic_positive(const QuarticPoly<R>& p, const Tolerance& tol = {},
                      bool* boundary = nullptr) {
    if (boundary) *boundary = false;
    R a = p.a, b = p.b, c = p.c, d = p.d, e = p.e;
    detail::normalize_range(a, b, c, d, e);
    const int sa = sign_of(a), se = sign_of(e);
    if (sa < 0 || se <= 0) return false; // P(0) = e must be positive
    if (sa == 0) {
        if (sign_of(b) != 0) return false;
        return detail::quad_positive_all(c, d, e);
    }
    SignEval<R> ev(tol);
    const auto lem = detail::eval_lemma23(a, b, c, d, e, ev);
    if (boundary) *boundary = ev.boundary();
    return lem.positive();
}

template <class R>
Verdict2 classify_tensor2(const Sym4Tensor2<R>& t, const Tolerance& tol = {}) {
    const QuarticPoly<R> p = restrict_to_line(t);
    auto out = detail::classify_form(p.a, p.b, p.c, p.d, p.e, tol);
    return Verdict2{out.cls, tensor2_certificate(out.branch), out.witness, out.boundary,
                    out.branch};
}

template <class R>
Verdict2 classify_couplings2(const Couplings2<R>& c, const Tolerance& tol = {}) {
    auto out = detail::classify_form(c.l40, c.l31, c.l22, c.l13, c.l04, tol);
    return Verdict2{out.cls, couplings2_certificate(out.branch), out.witness, out.boundary,
                    out.branch};
}

} // namespace qdef
