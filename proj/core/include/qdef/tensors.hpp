#pragma once

#include <utility>

#include "qdef/quartic_poly.hpp"
#include "qdef/scalar.hpp"

namespace qdef {

/// Binary quartic potential in coupling form:
///   Vbar(p1, p2) = l40 p1^4 + l31 p1^3 p2 + l22 p1^2 p2^2 + l13 p1 p2^3 + l04 p2^4
template <class R>
struct Couplings2 {
    R l40, l31, l22, l13, l04;

    Couplings2(R l40_, R l31_, R l22_, R l13_, R l04_)
        : l40(std::move(l40_)), l31(std::move(l31_)), l22(std::move(l22_)), l13(std::move(l13_)),
          l04(std::move(l04_)) {
        require_finite(l40, "Couplings2.l40");
        require_finite(l31, "Couplings2.l31");
        require_finite(l22, "Couplings2.l22");
        require_finite(l13, "Couplings2.l13");
        require_finite(l04, "Couplings2.l04");
    }
};

/// Symmetric 4th-order tensor in 2 dimensions, stored as its 5 independent
/// entries. The full 16-entry sum collapses with multiplicities 1,4,6,4,1.
template <class R>
struct Sym4Tensor2 {
    R v1111, v1112, v1122, v1222, v2222;

    Sym4Tensor2(R a, R b, R c, R d, R e)
        : v1111(std::move(a)), v1112(std::move(b)), v1122(std::move(c)), v1222(std::move(d)),
          v2222(std::move(e)) {
        require_finite(v1111, "Sym4Tensor2.v1111");
        require_finite(v1112, "Sym4Tensor2.v1112");
        require_finite(v1122, "Sym4Tensor2.v1122");
        require_finite(v1222, "Sym4Tensor2.v1222");
        require_finite(v2222, "Sym4Tensor2.v2222");
    }
};

/// Couplings of the two-singlets-plus-Higgs potential:
///   V(p1, p2, h) = lH h^4 + (lH20 p1^2 + lH11 p1 p2 + lH02 p2^2) h^2 + Vbar(p1, p2)
template <class R>
struct Couplings3 {
    R lH, lH20, lH11, lH02;
    Couplings2<R> quartic2;

    Couplings3(R lH_, R lH20_, R lH11_, R lH02_, Couplings2<R> q2)
        : lH(std::move(lH_)), lH20(std::move(lH20_)), lH11(std::move(lH11_)),
          lH02(std::move(lH02_)), quartic2(std::move(q2)) {
        require_finite(lH, "Couplings3.lH");
        require_finite(lH20, "Couplings3.lH20");
        require_finite(lH11, "Couplings3.lH11");
        require_finite(lH02, "Couplings3.lH02");
    }
};

/// Symmetric 4th-order tensor in 3 dimensions: 15 independent entries.
/// The 81-entry sum collapses with multinomial multiplicities 1, 4, 6, 12.
template <class R>
struct Sym4Tensor3 {
    R v1111, v2222, v3333, v1222, v1333, v1112, v1113, v2333, v2223, v1122, v1133, v2233, v1223,
        v1123, v1233;

    Sym4Tensor3(R v1111_, R v2222_, R v3333_, R v1222_, R v1333_, R v1112_, R v1113_, R v2333_,
                R v2223_, R v1122_, R v1133_, R v2233_, R v1223_, R v1123_, R v1233_)
        : v1111(std::move(v1111_)), v2222(std::move(v2222_)), v3333(std::move(v3333_)),
          v1222(std::move(v1222_)), v1333(std::move(v1333_)), v1112(std::move(v1112_)),
          v1113(std::move(v1113_)), v2333(std::move(v2333_)), v2223(std::move(v2223_)),
          v1122(std::move(v1122_)), v1133(std::move(v1133_)), v2233(std::move(v2233_)),
          v1223(std::move(v1223_)), v1123(std::move(v1123_)), v1233(std::move(v1233_)) {
        for (const R* v : {&v1111, &v2222, &v3333, &v1222, &v1333, &v1112, &v1113, &v2333, &v2223,
                           &v1122, &v1133, &v2233, &v1223, &v1123, &v1233})
            require_finite(*v, "Sym4Tensor3 entry");
    }

    static Sym4Tensor3 zero() {
        return Sym4Tensor3(R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(0), R(0),
                           R(0), R(0), R(0));
    }
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

template <class R>
R eval_tensor2(const Sym4Tensor2<R>& t, const R& x1, const R& x2) {
    require_finite(x1, "eval_tensor2.x1");
    require_finite(x2, "eval_tensor2.x2");
    const R x1s = x1 * x1, x2s = x2 * x2;
    return t.v1111 * x1s * x1s + 4 * t.v1112 * x1s * x1 * x2 + 6 * t.v1122 * x1s * x2s +
           4 * t.v1222 * x1 * x2s * x2 + t.v2222 * x2s * x2s;
}

template <class R>
R eval_tensor3(const Sym4Tensor3<R>& t, const R& x1, const R& x2, const R& x3) {
    require_finite(x1, "eval_tensor3.x1");
    require_finite(x2, "eval_tensor3.x2");
    require_finite(x3, "eval_tensor3.x3");
    const R x1s = x1 * x1, x2s = x2 * x2, x3s = x3 * x3;
    R acc = t.v1111 * x1s * x1s + t.v2222 * x2s * x2s + t.v3333 * x3s * x3s;
    acc += 4 * (t.v1112 * x1s * x1 * x2 + t.v1113 * x1s * x1 * x3 + t.v1222 * x1 * x2s * x2 +
                t.v2223 * x2s * x2 * x3 + t.v1333 * x1 * x3s * x3 + t.v2333 * x2 * x3s * x3);
    acc += 6 * (t.v1122 * x1s * x2s + t.v1133 * x1s * x3s + t.v2233 * x2s * x3s);
    acc += 12 * (t.v1123 * x1s * x2 * x3 + t.v1223 * x1 * x2s * x3 + t.v1233 * x1 * x2 * x3s);
    return acc;
}

/// Direct coupling-form evaluation of the binary quartic.
template <class R>
R eval_couplings2(const Couplings2<R>& c, const R& p1, const R& p2) {
    const R p1s = p1 * p1, p2s = p2 * p2;
    return c.l40 * p1s * p1s + c.l31 * p1s * p1 * p2 + c.l22 * p1s * p2s + c.l13 * p1 * p2s * p2 +
           c.l04 * p2s * p2s;
}

/// Direct coupling-form evaluation of the full three-field potential.
template <class R>
R eval_potential3(const Couplings3<R>& c, const R& p1, const R& p2, const R& h) {
    const R hs = h * h;
    const R m = c.lH20 * p1 * p1 + c.lH11 * p1 * p2 + c.lH02 * p2 * p2;
    return c.lH * hs * hs + m * hs + eval_couplings2(c.quartic2, p1, p2);
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

template <class R>
Sym4Tensor2<R> couplings2_to_tensor(const Couplings2<R>& c) {
    return Sym4Tensor2<R>(c.l40, c.l31 / R(4), c.l22 / R(6), c.l13 / R(4), c.l04);
}

template <class R>
Couplings2<R> tensor_to_couplings2(const Sym4Tensor2<R>& t) {
    return Couplings2<R>(t.v1111, 4 * t.v1112, 6 * t.v1122, 4 * t.v1222, t.v2222);
}

template <class R>
Sym4Tensor3<R> couplings3_to_tensor(const Couplings3<R>& c) {
    auto t = Sym4Tensor3<R>::zero();
    t.v1111 = c.quartic2.l40;
    t.v2222 = c.quartic2.l04;
    t.v3333 = c.lH;
    t.v1112 = c.quartic2.l31 / R(4);
    t.v1222 = c.quartic2.l13 / R(4);
    t.v1122 = c.quartic2.l22 / R(6);
    t.v1133 = c.lH20 / R(6);
    t.v2233 = c.lH02 / R(6);
    t.v1233 = c.lH11 / R(12);
    return t;
}

/// P(t) = eval_tensor2(T, (t, 1)); the quartic the closed-form criteria act on.
template <class R>
QuarticPoly<R> restrict_to_line(const Sym4Tensor2<R>& t) {
    return QuarticPoly<R>(t.v1111, 4 * t.v1112, 6 * t.v1122, 4 * t.v1222, t.v2222);
}

// ---------------------------------------------------------------------------
// Linear structure (handy for property tests)
// ---------------------------------------------------------------------------

template <class R>
Sym4Tensor2<R> operator+(const Sym4Tensor2<R>& a, const Sym4Tensor2<R>& b) {
    return Sym4Tensor2<R>(a.v1111 + b.v1111, a.v1112 + b.v1112, a.v1122 + b.v1122,
                          a.v1222 + b.v1222, a.v2222 + b.v2222);
}

template <class R>
Sym4Tensor3<R> operator+(const Sym4Tensor3<R>& a, const Sym4Tensor3<R>& b) {
    return Sym4Tensor3<R>(a.v1111 + b.v1111, a.v2222 + b.v2222, a.v3333 + b.v3333,
                          a.v1222 + b.v1222, a.v1333 + b.v1333, a.v1112 + b.v1112,
                          a.v1113 + b.v1113, a.v2333 + b.v2333, a.v2223 + b.v2223,
                          a.v1122 + b.v1122, a.v1133 + b.v1133, a.v2233 + b.v2233,
                          a.v1223 + b.v1223, a.v1123 + b.v1123, a.v1233 + b.v1233);
}

template <class R>
Couplings2<double> to_double_couplings(const Couplings2<R>& c) {
    return Couplings2<double>(to_double(c.l40), to_double(c.l31), to_double(c.l22),
                              to_double(c.l13), to_double(c.l04));
}

template <class R>
Couplings3<double> to_double_couplings(const Couplings3<R>& c) {
    return Couplings3<double>(to_double(c.lH), to_double(c.lH20), to_double(c.lH11),
                              to_double(c.lH02), to_double_couplings(c.quartic2));
}

template <class R>
Sym4Tensor2<double> to_double_tensor(const Sym4Tensor2<R>& t) {
    return Sym4Tensor2<double>(to_double(t.v1111), to_double(t.v1112), to_double(t.v1122),
                               to_double(t.v1222), to_double(t.v2222));
}

} // namespace qdef
