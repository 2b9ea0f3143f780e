#pragma once

#include <cmath>
#include <random>

#include <qdef/qdef.hpp>

namespace qtest {

using qdef::Couplings2;
using qdef::Couplings3;
using qdef::Rational;
using qdef::Sym4Tensor2;
using qdef::Sym4Tensor3;

using Rng = std::mt19937_64;

inline double rand_in(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, int num_max = 40, int den_max = 8) {
    std::uniform_int_distribution<int> num(-num_max, num_max);
    std::uniform_int_distribution<int> den(1, den_max);
    return Rational(num(rng), den(rng));
}

inline Couplings2<double> rand_couplings2_f(Rng& rng, double lo = -5.0, double hi = 5.0) {
    return {rand_in(rng, lo, hi), rand_in(rng, lo, hi), rand_in(rng, lo, hi), rand_in(rng, lo, hi),
            rand_in(rng, lo, hi)};
}

inline Couplings2<Rational> rand_couplings2_q(Rng& rng) {
    return {rand_rational(rng), rand_rational(rng), rand_rational(rng), rand_rational(rng),
            rand_rational(rng)};
}

inline Couplings3<double> rand_couplings3_f(Rng& rng, double lo = -5.0, double hi = 5.0) {
    return {rand_in(rng, lo, hi), rand_in(rng, lo, hi), rand_in(rng, lo, hi), rand_in(rng, lo, hi),
            rand_couplings2_f(rng, lo, hi)};
}

inline Couplings3<Rational> rand_couplings3_q(Rng& rng) {
    return {rand_rational(rng), rand_rational(rng), rand_rational(rng), rand_rational(rng),
            rand_couplings2_q(rng)};
}

inline Sym4Tensor2<double> rand_tensor2_f(Rng& rng, double lo = -5.0, double hi = 5.0) {
    return {rand_in(rng, lo, hi), rand_in(rng, lo, hi), rand_in(rng, lo, hi), rand_in(rng, lo, hi),
            rand_in(rng, lo, hi)};
}

inline Sym4Tensor2<Rational> rand_tensor2_q(Rng& rng) {
    return {rand_rational(rng), rand_rational(rng), rand_rational(rng), rand_rational(rng),
            rand_rational(rng)};
}

// ---------------------------------------------------------------------------
// Dense oracles: fully-indexed symmetric sums, independent of the collapsed
// evaluation under test.
// ---------------------------------------------------------------------------

template <class R>
R naive_eval2(const Sym4Tensor2<R>& t, const R& x1, const R& x2) {
    auto entry = [&](int ones) -> const R& {
        switch (ones) {
        case 4: return t.v1111;
        case 3: return t.v1112;
        case 2: return t.v1122;
        case 1: return t.v1222;
        default: return t.v2222;
        }
    };
    const R x[2] = {x1, x2};
    R sum(0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    const int ones = (i == 0) + (j == 0) + (k == 0) + (l == 0);
                    sum += entry(ones) * x[i] * x[j] * x[k] * x[l];
                }
    return sum;
}

template <class R>
const R& tensor3_entry(const Sym4Tensor3<R>& t, int n1, int n2, int n3) {
    if (n1 == 4) return t.v1111;
    if (n2 == 4) return t.v2222;
    if (n3 == 4) return t.v3333;
    if (n1 == 3) return n2 == 1 ? t.v1112 : t.v1113;
    if (n2 == 3) return n1 == 1 ? t.v1222 : t.v2223;
    if (n3 == 3) return n1 == 1 ? t.v1333 : t.v2333;
    if (n1 == 2 && n2 == 2) return t.v1122;
    if (n1 == 2 && n3 == 2) return t.v1133;
    if (n2 == 2 && n3 == 2) return t.v2233;
    if (n1 == 2) return t.v1123;
    if (n2 == 2) return t.v1223;
    return t.v1233;
}

template <class R>
R naive_eval3(const Sym4Tensor3<R>& t, const R& x1, const R& x2, const R& x3) {
    const R x[3] = {x1, x2, x3};
    R sum(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    int n[3] = {0, 0, 0};
                    ++n[i];
                    ++n[j];
                    ++n[k];
                    ++n[l];
                    sum += tensor3_entry(t, n[0], n[1], n[2]) * x[i] * x[j] * x[k] * x[l];
                }
    return sum;
}

inline bool close_rel(double a, double b, double rel, double floor_scale = 1.0) {
    return std::fabs(a - b) <= rel * std::max({std::fabs(a), std::fabs(b), floor_scale});
}

} // namespace qtest
