#include "qdef/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdef/errors.hpp"
#include "qdef/polyroots.hpp"
#include "qdef/rational_approx.hpp"

namespace qdef {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

std::vector<double> critical_points(const QuarticPoly<double>& p) {
    double r[3];
    const int n = roots::real_roots_cubic(4.0 * p.a, 3.0 * p.b, 2.0 * p.c, p.d, r);
    return {r, r + n};
}

// --- inner closed-form slice for the 3-D sweep -------------------------------

struct SliceMin {
    double value;
    double s; // h^2 on the unit sphere, in [0, 1]
};

// V restricted to the sphere along direction (cos th, sin th) in the field
// plane is a quadratic in s = h^2:  A s^2 + B s + C.
SliceMin slice_min(const Couplings3<double>& c, double cth, double sth) {
    const double m = c.lH20 * cth * cth + c.lH11 * cth * sth + c.lH02 * sth * sth;
    const double vb = eval_couplings2(c.quartic2, cth, sth);
    const double A = c.lH - m + vb;
    const double B = m - 2.0 * vb;

    SliceMin best{vb, 0.0}; // s = 0
    if (c.lH < best.value) best = {c.lH, 1.0};
    if (A > 0.0) {
        const double sv = -B / (2.0 * A);
        if (sv > 0.0 && sv < 1.0) {
            const double val = vb - B * B / (4.0 * A);
            if (val < best.value) best = {val, sv};
        }
    }
    return best;
}

template <class F>
double golden_min(F f, double lo, double hi, double tol, double* arg) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (lo + hi);
    const double fm = f(xm);
    if (fm <= f1 && fm <= f2) { *arg = xm; return fm; }
    if (f1 <= f2) { *arg = x1; return f1; }
    *arg = x2; return f2;
}

} // namespace

MinResult min_quartic_exact(const QuarticPoly<double>& p) {
    if (!(p.a > 0.0))
        throw NonPositiveLeadingCoefficient("min_quartic_exact: leading coefficient must be > 0");
    double best_t = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (double t : critical_points(p)) {
        const double v = p(t);
        if (v < best) { best = v; best_t = t; }
    }
    if (!std::isfinite(best)) { best = p(0.0); best_t = 0.0; } // cubic solver cannot fail, but stay total
    return MinResult{best, {best_t}, MinMethod::ExactCriticalPoints};
}

RationalMinResult min_quartic_exact(const QuarticPoly<Rational>& p) {
    if (!(p.a > 0))
        throw NonPositiveLeadingCoefficient("min_quartic_exact: leading coefficient must be > 0");

    // derivative cubic A t^3 + B t^2 + C t + D over Q
    const Rational A = 4 * p.a, B = 3 * p.b, C = 2 * p.c, D = p.d;
    const Rational disc3 = 18 * A * B * C * D - 4 * B * B * B * D + B * B * C * C -
                           4 * A * C * C * C - 27 * A * A * D * D;

    std::vector<Rational> crit;
    bool exact = true;
    if (disc3 == 0) {
        const Rational h = B * B - 3 * A * C;
        if (h == 0) {
            crit.push_back(-B / (3 * A)); // triple root
        } else {
            const Rational rd = (9 * A * D - B * C) / (2 * h); // double root
            const Rational rs = -B / A - 2 * rd;               // simple root
            crit.push_back(rd);
            crit.push_back(rs);
        }
        for (const Rational& r : crit)
            if (p.derivative_at(r) != 0) { exact = false; break; }
    } else {
        const int expected = disc3 > 0 ? 3 : 1;
        const auto float_roots = critical_points(to_double_poly(p));
        for (double fr : float_roots) {
            bool found = false;
            auto cands = cf_approximants(fr);
            cands.emplace_back(fr); // exact value of the double itself
            for (const Rational& cand : cands) {
                if (p.derivative_at(cand) == 0) {
                    crit.push_back(cand);
                    found = true;
                    break;
                }
            }
            if (!found) exact = false;
        }
        if (static_cast<int>(crit.size()) != expected) exact = false;
    }

    if (exact && !crit.empty()) {
        Rational best = p(crit.front());
        Rational best_t = crit.front();
        for (const Rational& t : crit) {
            const Rational v = p(t);
            if (v < best) { best = v; best_t = t; }
        }
        return RationalMinResult{best, {to_double(best_t)}, MinMethod::ExactCriticalPoints, true};
    }

    // fall back: evaluate exactly at the float argmin (true upper bound)
    const MinResult fd = min_quartic_exact(to_double_poly(p));
    const Rational t_hat(fd.argmin[0]);
    return RationalMinResult{p(t_hat), {fd.argmin[0]}, MinMethod::ExactCriticalPoints, false};
}

MinResult min_form2_on_sphere(const Sym4Tensor2<double>& t) {
    const QuarticPoly<double> p = restrict_to_line(t);
    const double a = p.a, b = p.b, c = p.c, d = p.d, e = p.e;

    auto g = [&](double x) {
        const double w = 1.0 + x * x;
        return p(x) / (w * w);
    };

    // candidates: zeros of the critical equation (1+t^2) P'(t) - 4 t P(t) = 0
    std::vector<double> cand;
    {
        double r[4];
        const int n = roots::real_roots_quartic(-b, 4.0 * a - 2.0 * c, 3.0 * (b - d),
                                                2.0 * c - 4.0 * e, d, r);
        cand.assign(r, r + n);
    }
    // coarse angular grid as a backstop against missed roots
    constexpr int kGrid = 509;
    int best_cell = 0;
    double best_cell_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        const double th = -1.5707 + 3.1414 * (i + 0.5) / kGrid;
        const double x = std::tan(th);
        const double v = g(x);
        if (v < best_cell_val) { best_cell_val = v; best_cell = i; }
    }
    {
        const double lo = std::tan(-1.5707 + 3.1414 * best_cell / kGrid);
        const double hi = std::tan(-1.5707 + 3.1414 * (best_cell + 1.0) / kGrid);
        double arg = 0.0;
        golden_min(g, lo, hi, 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi)), &arg);
        cand.push_back(arg);
    }

    // endpoint (1, 0): the t -> +/-inf limit of the rescaled restriction
    double best = a;
    double bx = 1.0, by = 0.0;
    for (double x : cand) {
        const double v = g(x);
        if (v < best) {
            best = v;
            const double n = std::sqrt(1.0 + x * x);
            bx = x / n;
            by = 1.0 / n;
        }
    }
    return MinResult{best, {bx, by}, MinMethod::ExactCriticalPoints};
}

MinResult min_potential3(const Couplings3<double>& c, const SphereScanOptions& opt) {
    const int n = std::max(opt.outer_samples, 8);
    const double step = kTwoPi / n;

    std::vector<double> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = slice_min(c, std::cos(i * step), std::sin(i * step)).value;

    // indices of the best cells, deterministic under value ties
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    const int seeds = std::min(std::max(opt.refine_seeds, 1), n);
    std::partial_sort(idx.begin(), idx.begin() + seeds, idx.end(), [&](int x, int y) {
        if (vals[static_cast<size_t>(x)] != vals[static_cast<size_t>(y)]) return vals[static_cast<size_t>(x)] < vals[static_cast<size_t>(y)];
        return x < y;
    });

    auto m = [&](double th) { return slice_min(c, std::cos(th), std::sin(th)).value; };

    double best_theta = idx[0] * step;
    double best_val = vals[static_cast<size_t>(idx[0])];
    for (int k = 0; k < seeds; ++k) {
        const double center = idx[static_cast<size_t>(k)] * step;
        double arg = center;
        const double v = golden_min(m, center - step, center + step, 1e-10, &arg);
        if (v < best_val) { best_val = v; best_theta = arg; }
    }

    const SliceMin sm = slice_min(c, std::cos(best_theta), std::sin(best_theta));
    const double s = std::clamp(sm.s, 0.0, 1.0);
    const double r = std::sqrt(std::max(0.0, 1.0 - s));
    return MinResult{sm.value,
                     {r * std::cos(best_theta), r * std::sin(best_theta), std::sqrt(s)},
                     MinMethod::GridRefine};
}

} // namespace qdef
