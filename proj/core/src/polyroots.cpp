#include "qdef/polyroots.hpp"

#include <algorithm>
#include <cmath>

namespace qdef::roots {
namespace {

constexpr double kPi = 3.14159265358979323846;

double horner4(double a, double b, double c, double d, double e, double t) {
    return (((a * t + b) * t + c) * t + d) * t + e;
}

double horner3(double a, double b, double c, double d, double t) {
    return ((a * t + b) * t + c) * t + d;
}

// Newton polish that never accepts a step increasing |f|.
template <class F, class DF>
double polish(F f, DF df, double t) {
    double ft = std::fabs(f(t));
    for (int i = 0; i < 20; ++i) {
        const double g = df(t);
        if (g == 0.0 || !std::isfinite(g)) break;
        const double step = f(t) / g;
        const double cand = t - step;
        if (!std::isfinite(cand)) break;
        const double fc = std::fabs(f(cand));
        if (fc >= ft) break;
        t = cand;
        ft = fc;
        if (std::fabs(step) <= 1e-16 * (1.0 + std::fabs(t))) break;
    }
    return t;
}

int sort_dedupe(double* r, int n) {
    std::sort(r, r + n);
    int m = 0;
    for (int i = 0; i < n; ++i) {
        if (m > 0 && std::fabs(r[i] - r[m - 1]) <= 1e-11 * (1.0 + std::fabs(r[i]))) continue;
        r[m++] = r[i];
    }
    return m;
}

} // namespace

int real_roots_quadratic(double a, double b, double c, double out[2]) {
    const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c)});
    if (scale == 0.0) return 0;
    if (std::fabs(a) <= 1e-14 * scale) {
        if (std::fabs(b) <= 1e-14 * scale) return 0;
        out[0] = -c / b;
        return 1;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return 0;
    const double s = std::sqrt(disc);
    // stable: avoid cancellation in -b +/- s
    const double q = -0.5 * (b + (b >= 0.0 ? s : -s));
    int n = 0;
    out[n++] = q / a;
    if (q != 0.0) out[n++] = c / q;
    else out[n++] = 0.0;
    return sort_dedupe(out, n);
}

int real_roots_cubic(double a, double b, double c, double d, double out[3]) {
    const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)});
    if (scale == 0.0) return 0;
    if (std::fabs(a) <= 1e-14 * scale) return real_roots_quadratic(b, c, d, out);

    const double bn = b / a, cn = c / a, dn = d / a;
    // depressed cubic u^3 + p u + q, t = u - bn/3
    const double shift = -bn / 3.0;
    const double p = cn - bn * bn / 3.0;
    const double q = 2.0 * bn * bn * bn / 27.0 - bn * cn / 3.0 + dn;
    const double disc = q * q / 4.0 + p * p * p / 27.0;
    const double disc_scale = q * q / 4.0 + std::fabs(p * p * p) / 27.0;

    int n = 0;
    if (std::fabs(disc) <= 1e-13 * disc_scale) {
        // multiple real root
        if (std::fabs(p) <= 1e-13 * (std::fabs(p) + std::fabs(q)) || p == 0.0) {
            out[n++] = shift; // triple
        } else {
            out[n++] = 3.0 * q / p + shift;          // simple
            out[n++] = -3.0 * q / (2.0 * p) + shift; // double
        }
    } else if (disc > 0.0) {
        const double s = std::sqrt(disc);
        double alpha;
        if (q <= 0.0) alpha = std::cbrt(-q / 2.0 + s);
        else alpha = -std::cbrt(q / 2.0 + s);
        const double beta = alpha != 0.0 ? -p / (3.0 * alpha) : 0.0;
        out[n++] = alpha + beta + shift;
    } else {
        // three distinct real roots
        const double r = std::sqrt(-p / 3.0);
        const double arg = std::clamp(-q / (2.0 * r * r * r), -1.0, 1.0);
        const double theta = std::acos(arg);
        for (int k = 0; k < 3; ++k)
            out[n++] = 2.0 * r * std::cos((theta - 2.0 * kPi * k) / 3.0) + shift;
    }

    auto f = [&](double t) { return horner3(a, b, c, d, t); };
    auto df = [&](double t) { return (3.0 * a * t + 2.0 * b) * t + c; };
    for (int i = 0; i < n; ++i) out[i] = polish(f, df, out[i]);
    return sort_dedupe(out, n);
}

int real_roots_quartic(double a, double b, double c, double d, double e, double out[4]) {
    const double scale =
        std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d), std::fabs(e)});
    if (scale == 0.0) return 0;
    if (std::fabs(a) <= 1e-14 * scale) return real_roots_cubic(b, c, d, e, out);

    const double bn = b / a, cn = c / a, dn = d / a, en = e / a;
    // depressed quartic y^4 + al y^2 + be y + ga, t = y - bn/4
    const double shift = -bn / 4.0;
    const double bn2 = bn * bn;
    const double al = cn - 3.0 * bn2 / 8.0;
    const double be = dn - bn * cn / 2.0 + bn2 * bn / 8.0;
    const double ga = en - bn * dn / 4.0 + bn2 * cn / 16.0 - 3.0 * bn2 * bn2 / 256.0;

    int n = 0;
    const double be_scale = std::fabs(al) + std::fabs(be) + std::fabs(ga) + 1.0;
    if (std::fabs(be) <= 1e-14 * be_scale) {
        // biquadratic: y^2 = z
        double z[2];
        const int nz = real_roots_quadratic(1.0, al, ga, z);
        for (int i = 0; i < nz; ++i) {
            if (z[i] < 0.0) {
                // absorb a tiny negative from rounding of a double root at y = 0
                if (z[i] >= -1e-12 * (1.0 + std::fabs(al) + std::fabs(ga))) z[i] = 0.0;
                else continue;
            }
            const double y = std::sqrt(z[i]);
            out[n++] = y + shift;
            if (y > 0.0) out[n++] = -y + shift;
        }
    } else {
        // resolvent cubic in z = u^2 for the factorization
        // (y^2 + u y + v)(y^2 - u y + w)
        double z[3];
        const int nz = real_roots_cubic(1.0, 2.0 * al, al * al - 4.0 * ga, -be * be, z);
        double z0 = -1.0;
        for (int i = 0; i < nz; ++i) z0 = std::max(z0, z[i]);
        if (z0 > 0.0) {
            const double u = std::sqrt(z0);
            const double v = (al + z0 - be / u) / 2.0;
            const double w = (al + z0 + be / u) / 2.0;
            double r2[2];
            int m = real_roots_quadratic(1.0, u, v, r2);
            for (int i = 0; i < m; ++i) out[n++] = r2[i] + shift;
            m = real_roots_quadratic(1.0, -u, w, r2);
            for (int i = 0; i < m; ++i) out[n++] = r2[i] + shift;
        }
        // z0 <= 0 means no real factorization root was found; the quartic has
        // no real roots in that case.
    }

    auto f = [&](double t) { return horner4(a, b, c, d, e, t); };
    auto df = [&](double t) { return horner3(4.0 * a, 3.0 * b, 2.0 * c, d, t); };
    for (int i = 0; i < n; ++i) out[i] = polish(f, df, out[i]);
    return sort_dedupe(out, n);
}

} // namespace qdef::roots
