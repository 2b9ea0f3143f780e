#include <doctest.h>

#include <qdef/qdef.hpp>

#include "helpers.hpp"

using namespace qdef;
using qtest::Rng;

namespace {

const Couplings2<double> kDiag(1, 0, 0, 0, 1);
const Couplings2<double> kZero2(0, 0, 0, 0, 0);

double coupling_scale(const Couplings3<double>& c) {
    return std::max({std::fabs(c.lH), std::fabs(c.lH20), std::fabs(c.lH11), std::fabs(c.lH02),
                     std::fabs(c.quartic2.l40), std::fabs(c.quartic2.l31),
                     std::fabs(c.quartic2.l22), std::fabs(c.quartic2.l13),
                     std::fabs(c.quartic2.l04)});
}

double witness_eval(const Couplings3<double>& c, const Verdict3& v) {
    REQUIRE(v.witness.has_value());
    return eval_potential3(c, (*v.witness)[0], (*v.witness)[1], (*v.witness)[2]);
}

} // namespace

TEST_CASE("eval_M examples") {
    CHECK(eval_M(Couplings3<double>(1, 1, 0, 1, kZero2), 1.0, 1.0) == 2.0);
    CHECK(eval_M(Couplings3<double>(1, -1, 0, -1, kZero2), 0.0, 1.0) == -1.0);
    CHECK(eval_M(Couplings3<double>(1, 1, -2, 1, kZero2), 1.0, 1.0) == 0.0);
}

TEST_CASE("classify_M sign lattice") {
    auto mk = [](double p, double h, double q) { return Couplings3<double>(1, p, h, q, kZero2); };
    CHECK(classify_M(mk(1, 0, 1)) == MFormClass::PositiveDefinite);
    CHECK(classify_M(mk(-1, 0, -1)) == MFormClass::NegativeDefinite);
    CHECK(classify_M(mk(1, 0, -1)) == MFormClass::Indefinite);
    CHECK(classify_M(mk(1, -2, 1)) == MFormClass::PositiveSemidefinite); // (p1 - p2)^2
    CHECK(classify_M(mk(-1, 2, -1)) == MFormClass::NegativeSemidefinite);
    CHECK(classify_M(mk(0, 0, 0)) == MFormClass::Zero);
    CHECK(classify_M(mk(0, 1, 0)) == MFormClass::Indefinite); // p1 p2
    CHECK(m_form_nonneg(classify_M(mk(1, -2, 1))));
    CHECK_FALSE(m_form_nonneg(classify_M(mk(-1, 0, -1))));
    CHECK(m_form_negdef(classify_M(mk(-2, 1, -1))));
}

TEST_CASE("classify_M matches the sampled sign of M") {
    // The negative-definite test uses the standard determinant criterion
    // (leading < 0, 4 p q - h^2 > 0); validate it behaviorally.
    Rng rng(1234);
    for (int i = 0; i < 2000; ++i) {
        const Couplings3<double> c(1, qtest::rand_in(rng, -3, 3), qtest::rand_in(rng, -3, 3),
                                   qtest::rand_in(rng, -3, 3), kZero2);
        const auto mc = classify_M(c);
        bool saw_pos = false, saw_neg = false;
        for (int k = 0; k < 64; ++k) {
            const double th = 6.2831853 * k / 64.0;
            const double m = eval_M(c, std::cos(th), std::sin(th));
            if (m > 1e-12) saw_pos = true;
            if (m < -1e-12) saw_neg = true;
        }
        if (mc == MFormClass::NegativeDefinite) {
            CHECK_FALSE(saw_pos);
            CHECK(saw_neg);
        }
        if (m_form_nonneg(mc)) CHECK_FALSE(saw_neg);
        if (mc == MFormClass::Indefinite) {
            // strictly mixed signs somewhere on the circle
            CHECK(saw_pos);
            CHECK(saw_neg);
        }
    }
}

TEST_CASE("primed couplings examples") {
    const auto pr = primed_couplings(Couplings3<double>(1, -1, 0, -1, kDiag));
    CHECK(pr.l40p == 3.0);
    CHECK(pr.l31p == 0.0);
    CHECK(pr.l22p == -2.0);
    CHECK(pr.l13p == 0.0);
    CHECK(pr.l04p == 3.0);
    CHECK(pr.delta_p == 3981312.0);

    // portal-free: primed couplings are 4 lH times the originals
    const Couplings2<double> q2(1, 2, 3, 4, 5);
    const auto pf = primed_couplings(Couplings3<double>(1, 0, 0, 0, q2));
    CHECK(pf.l40p == 4.0);
    CHECK(pf.l31p == 8.0);
    CHECK(pf.l22p == 12.0);
    CHECK(pf.l13p == 16.0);
    CHECK(pf.l04p == 20.0);
}

TEST_CASE("primed polynomial identity: V' = 4 lH Vbar - M^2") {
    Rng rng(2345);
    for (int i = 0; i < 300; ++i) {
        const auto c = qtest::rand_couplings3_f(rng);
        const auto pr = primed_couplings(c);
        const Couplings2<double> vp = primed_as_couplings2(pr);
        for (int k = 0; k < 20; ++k) {
            const double p1 = qtest::rand_in(rng, -2, 2), p2 = qtest::rand_in(rng, -2, 2);
            const double lhs = eval_couplings2(vp, p1, p2);
            const double m = eval_M(c, p1, p2);
            const double rhs = 4.0 * c.lH * eval_couplings2(c.quartic2, p1, p2) - m * m;
            CHECK(qtest::close_rel(lhs, rhs, 1e-12, 10.0));
        }
    }
    // exact, coefficient-wise, in rational arithmetic
    for (int i = 0; i < 200; ++i) {
        const auto cq = qtest::rand_couplings3_q(rng);
        const auto pr = primed_couplings(cq);
        const Couplings2<Rational> vp = primed_as_couplings2(pr);
        for (int k = 0; k < 5; ++k) {
            const Rational p1 = qtest::rand_rational(rng, 7, 4);
            const Rational p2 = qtest::rand_rational(rng, 7, 4);
            const Rational m = eval_M(cq, p1, p2);
            CHECK(eval_couplings2(vp, p1, p2) ==
                  4 * cq.lH * eval_couplings2(cq.quartic2, p1, p2) - m * m);
        }
    }
}

TEST_CASE("pointwise_reduction examples") {
    CHECK(pointwise_reduction(Couplings3<double>(1, 0, 0, 0, kDiag), 1.0, 0.0, true));
    CHECK(pointwise_reduction(Couplings3<double>(1, -1, 0, -1, kDiag), 1.0, 0.0, true));
    CHECK_FALSE(pointwise_reduction(Couplings3<double>(1, -3, 0, 0, kDiag), 1.0, 0.0, true));
    CHECK_THROWS_AS(pointwise_reduction(Couplings3<double>(0, 0, 0, 0, kDiag), 1.0, 0.0, true),
                    NonPositiveLambdaH);
    CHECK_THROWS_AS(pointwise_reduction(Couplings3<double>(-1, 0, 0, 0, kDiag), 1.0, 0.0, false),
                    NonPositiveLambdaH);
}

TEST_CASE("reduction soundness against closed-form half-line minimum") {
    Rng rng(3456);
    for (int i = 0; i < 10000; ++i) {
        const Couplings3<double> c(qtest::rand_in(rng, 0.1, 5), qtest::rand_in(rng, -5, 5),
                                   qtest::rand_in(rng, -5, 5), qtest::rand_in(rng, -5, 5),
                                   qtest::rand_couplings2_f(rng));
        const double p1 = qtest::rand_in(rng, -2, 2), p2 = qtest::rand_in(rng, -2, 2);
        const double m = eval_M(c, p1, p2);
        const double vb = eval_couplings2(c.quartic2, p1, p2);
        // min over t >= 0 of lH t^2 + m t + vb
        const double minval = m >= 0.0 ? vb : vb - m * m / (4.0 * c.lH);
        const double scale = std::fabs(c.lH) + std::fabs(m) + std::fabs(vb);
        if (std::fabs(minval) <= 1e-9 * scale) continue; // knife edge
        CHECK(pointwise_reduction(c, p1, p2, true) == (minval > 0.0));
        CHECK(pointwise_reduction(c, p1, p2, false) == (minval >= 0.0));
    }
}

TEST_CASE("classify_couplings3 examples") {
    const auto v1 = classify_couplings3(Couplings3<double>(1, 1, 0, 1, kDiag));
    CHECK(v1.cls == Verdict3Class::PositiveDefinite);
    CHECK(v1.certificate == "Thm3.6-(1)-②(i)");
    CHECK(v1.confidence == Confidence::Analytic);

    const auto v2 = classify_couplings3(Couplings3<double>(1, -1, 0, -1, kDiag));
    CHECK(v2.cls == Verdict3Class::PositiveDefinite);
    CHECK(v2.certificate == "Thm3.6-(2)-④(i)");
    CHECK(v2.confidence == Confidence::Analytic);

    const Couplings3<double> sink(1, -3, 0, 0, kDiag);
    const auto v3 = classify_couplings3(sink);
    CHECK(v3.cls == Verdict3Class::Indefinite);
    REQUIRE(v3.witness.has_value());
    CHECK(witness_eval(sink, v3) < 0.0);
    CHECK((*v3.witness)[2] >= 0.0);
}

TEST_CASE("negative or zero lambda_H boundaries") {
    const auto vneg = classify_couplings3(Couplings3<double>(-1, 0, 0, 0, kDiag));
    CHECK(vneg.cls == Verdict3Class::Indefinite);
    CHECK(vneg.certificate == "neg-lambdaH");
    CHECK(witness_eval(Couplings3<double>(-1, 0, 0, 0, kDiag), vneg) < 0.0);

    // lH = 0 with M PSD and Vbar PD: nonnegative but vanishes at (0,0,1)
    const auto vz = classify_couplings3(Couplings3<double>(0, 1, 0, 1, kDiag));
    CHECK(vz.cls == Verdict3Class::PositiveSemidefiniteOnly);
    CHECK(vz.certificate == "edge-lambdaH-zero");

    // lH = 0 with M not PSD sinks even though Vbar is PD
    const Couplings3<double> bad(0, -1, 0, 0, kDiag);
    const auto vb = classify_couplings3(bad);
    CHECK(vb.cls == Verdict3Class::Indefinite);
    CHECK(witness_eval(bad, vb) < 0.0);

    // lH = 0, M PSD, Vbar indefinite
    const Couplings3<double> bad2(0, 1, 0, 1, Couplings2<double>(1, 0, -4, 0, 1));
    const auto vb2 = classify_couplings3(bad2);
    CHECK(vb2.cls == Verdict3Class::Indefinite);
    CHECK(witness_eval(bad2, vb2) <= 0.0);

    // all-zero potential is nonnegative with zeros everywhere
    const auto vzz = classify_couplings3(Couplings3<double>(0, 0, 0, 0, kZero2));
    CHECK(vzz.cls == Verdict3Class::PositiveSemidefiniteOnly);
}

TEST_CASE("M PSD route lifts the binary verdict") {
    // M PSD, Vbar indefinite: witness lies in the h = 0 plane
    const Couplings3<double> c(1, 1, 0, 1, Couplings2<double>(1, 0, -4, 0, 1));
    const auto v = classify_couplings3(c);
    CHECK(v.cls == Verdict3Class::Indefinite);
    CHECK(v.certificate == "Thm3.6-(1)-violated");
    REQUIRE(v.witness.has_value());
    CHECK((*v.witness)[2] == 0.0);
    CHECK(witness_eval(c, v) <= 1e-9);

    // M PSD, Vbar PSD-only
    const Couplings3<double> c2(1, 1, 0, 1, Couplings2<double>(1, 0, -2, 0, 1));
    const auto v2 = classify_couplings3(c2);
    CHECK(v2.cls == Verdict3Class::PositiveSemidefiniteOnly);
    CHECK(v2.certificate == "Thm3.7-(1)-(i)");
}

TEST_CASE("M ND route lifts the primed verdict") {
    // primed couplings collapse to -8 p1^2 p2^2: indefinite
    const Couplings3<double> c(1, -2, 0, -2, kDiag);
    const auto v = classify_couplings3(c);
    CHECK(v.m_class == MFormClass::NegativeDefinite);
    CHECK(v.cls == Verdict3Class::Indefinite);
    CHECK(witness_eval(c, v) <= 1e-9);

    const Couplings3<double> c2(1, -3, 0, -3, kDiag); // l40' = -5 < 0
    const auto v2 = classify_couplings3(c2);
    CHECK(v2.cls == Verdict3Class::Indefinite);
    CHECK(v2.certificate == "Thm3.6-(2)-violated");
    REQUIRE(v2.witness.has_value());
    CHECK(witness_eval(c2, v2) <= 1e-9 * coupling_scale(c2));
}

TEST_CASE("portal-free consistency with the binary classifier") {
    Rng rng(4567);
    for (int i = 0; i < 1000; ++i) {
        const auto q2 = qtest::rand_couplings2_f(rng);
        const Couplings3<double> c(qtest::rand_in(rng, 0.1, 5), 0, 0, 0, q2);
        const auto v3 = classify_couplings3(c);
        const auto v2 = classify_couplings2(q2);
        switch (v2.cls) {
        case Verdict2Class::PositiveDefinite:
            CHECK(v3.cls == Verdict3Class::PositiveDefinite);
            break;
        case Verdict2Class::PositiveSemidefiniteOnly:
            CHECK(v3.cls == Verdict3Class::PositiveSemidefiniteOnly);
            break;
        case Verdict2Class::Indefinite:
            CHECK(v3.cls == Verdict3Class::Indefinite);
            break;
        }
    }
}

TEST_CASE("positive-definite verdicts pass the pointwise reduction") {
    Rng rng(5678);
    int pd_seen = 0;
    for (int i = 0; i < 3000 && pd_seen < 60; ++i) {
        const auto c = qtest::rand_couplings3_f(rng);
        if (sign_of(c.lH) <= 0) continue;
        const auto v = classify_couplings3(c);
        if (v.cls != Verdict3Class::PositiveDefinite) continue;
        ++pd_seen;
        for (int k = 0; k < 1000; ++k) {
            const double th = qtest::rand_in(rng, 0, 6.2831853);
            CHECK(pointwise_reduction(c, std::cos(th), std::sin(th), false));
        }
    }
    CHECK(pd_seen >= 30);
}

TEST_CASE("analytic routes agree with the sphere minimizer") {
    Rng rng(6789);
    int checked = 0;
    for (int i = 0; i < 4000 && checked < 1000; ++i) {
        Couplings3<double> c = qtest::rand_couplings3_f(rng);
        c.lH = qtest::rand_in(rng, 0.1, 5.0);
        const auto mc = classify_M(c);
        if (!m_form_nonneg(mc) && !m_form_negdef(mc)) continue;
        const auto v = classify_couplings3(c);
        const auto mr = min_potential3(c);
        const double scale = coupling_scale(c);
        if (std::fabs(mr.min_value) <= 1e-6 * scale) continue;
        ++checked;
        if (mr.min_value > 0.0) CHECK(v.cls == Verdict3Class::PositiveDefinite);
        else CHECK(v.cls == Verdict3Class::Indefinite);
    }
    CHECK(checked >= 500);
}

TEST_CASE("mixed-sign M never yields unsound analytic positives") {
    Rng rng(7890);
    int seen = 0;
    for (int i = 0; i < 1500 && seen < 300; ++i) {
        Couplings3<double> c = qtest::rand_couplings3_f(rng);
        c.lH = qtest::rand_in(rng, 0.1, 5.0);
        if (classify_M(c) != MFormClass::Indefinite) continue;
        ++seen;
        const auto v = classify_couplings3(c);
        if (v.cls == Verdict3Class::PositiveDefinite && v.confidence == Confidence::Analytic) {
            CHECK(v.certificate == "Thm3.4-sufficient");
            const auto mr = min_potential3(c);
            CHECK(mr.min_value >= -1e-9 * coupling_scale(c));
        }
    }
    CHECK(seen >= 100);
}

TEST_CASE("inconclusive knife edge through the oracle fallback") {
    // V = (h^2 - p1 p2)^2: M indefinite, exact minimum zero
    const Couplings3<double> c(1, 0, -2, 0, Couplings2<double>(0, 0, 1, 0, 0));
    const auto v = classify_couplings3(c);
    CHECK(v.m_class == MFormClass::Indefinite);
    CHECK(v.cls == Verdict3Class::AnalyticInconclusive);
    CHECK(v.confidence == Confidence::NumericOracle);
    CHECK(v.certificate == "oracle-inconclusive");
}

TEST_CASE("extreme coupling magnitudes classify like their rescalings") {
    Rng rng(5353);
    for (int i = 0; i < 100; ++i) {
        Couplings3<double> c = qtest::rand_couplings3_f(rng);
        c.lH = qtest::rand_in(rng, 0.1, 5.0);
        const auto base = classify_couplings3(c).cls;
        const double s = 1e120;
        const Couplings3<double> big(s * c.lH, s * c.lH20, s * c.lH11, s * c.lH02,
                                     Couplings2<double>(s * c.quartic2.l40, s * c.quartic2.l31,
                                                        s * c.quartic2.l22, s * c.quartic2.l13,
                                                        s * c.quartic2.l04));
        CHECK(classify_couplings3(big).cls == base);
    }
}

TEST_CASE("rational-mode ternary classification is exact on knife edges") {
    // M ND with primed delta exactly zero: (3, 0, -2, 0, 3) has delta' > 0,
    // so build the primed knife edge instead from the PSD route.
    const Couplings3<Rational> c(Rational(1), Rational(1), Rational(0), Rational(1),
                                 Couplings2<Rational>(Rational(1), Rational(0), Rational(2),
                                                      Rational(0), Rational(1)));
    const auto v = classify_couplings3(c);
    CHECK(v.cls == Verdict3Class::PositiveDefinite);
    CHECK(v.certificate == "Thm3.6-(1)-①");
    CHECK_FALSE(v.boundary);
}
