#pragma once

// Independent transcriptions of the printed expressions for Im P and its rewrites.
// These are data: nothing here is derived, so a slip in print shows up as a diff
// against derivation.hpp rather than being silently reproduced.

#include "xi_audit/symbolic/rational_poly.hpp"
#include "xi_audit/symbolic/trig_hyp.hpp"

namespace xi_audit::symbolic::printed {

namespace detail {

inline RationalPoly t1() { return var(Var::t1); }
inline RationalPoly t2() { return var(Var::t2); }
inline RationalPoly al() { return var(Var::alpha); }
inline RationalPoly sg() { return var(Var::sigma); }
inline RationalPoly ie() { return var(Var::inv_eps); }
inline RationalPoly x() {
    RationalPoly r = var(Var::b);
    r *= Rational(1, 2);
    return r;
}
inline RationalPoly tt() { return t1() * t1() + t2() * t2(); }
inline RationalPoly u() { return al() * al() + RationalPoly(1); }
inline RationalPoly sq(const RationalPoly& p) { return p * p; }
inline RationalPoly k(long n) { return RationalPoly(n); }

// Basis products at the half argument; full-argument sin(2T), sh(2H) separately.
struct Basis {
    ArgForm form;
    TrigHypExpr Cs() const { return TrigHypExpr::basis(Hyp::ch, 1, Trig::sin, 1, form); }
    TrigHypExpr Cc() const { return TrigHypExpr::basis(Hyp::ch, 1, Trig::cos, 1, form); }
    TrigHypExpr Ss() const { return TrigHypExpr::basis(Hyp::sh, 1, Trig::sin, 1, form); }
    TrigHypExpr Sc() const { return TrigHypExpr::basis(Hyp::sh, 1, Trig::cos, 1, form); }
    TrigHypExpr sin2T() const { return TrigHypExpr::basis(Hyp::one, 0, Trig::sin, 2, form); }
    TrigHypExpr sh2H() const { return TrigHypExpr::basis(Hyp::sh, 2, Trig::one, 0, form); }
};

}  // namespace detail

/// Im P with t written as t1 + i t2, over the denominator (t1² + t2²)³.
inline TrigHypExpr im_p_t1_t2() {
    using namespace detail;
    const Basis e{ArgForm::t1_t2};
    const RationalPoly d = t1() * t1() - t2() * t2();
    const RationalPoly m = k(2) * t1() * t2();
    const RationalPoly A = sq(d) - sq(m);
    const RationalPoly B = k(2) * d * m;
    const RationalPoly A5 = t1() * A - t2() * B;
    const RationalPoly B5 = t1() * B + t2() * A;
    const RationalPoly A6 = d * A - k(2) * d * sq(m);
    const RationalPoly B6 = m * (k(3) * sq(d) - sq(m));
    const RationalPoly T = tt();

    TrigHypExpr s = (-ie() * x() * x()) * (A * -e.Cs() + B * e.Sc()) * (T * T);
    s = s + (k(2) * ie() * x()) * (A5 * -e.Ss() + B5 * e.Cc()) * T;
    s = s + (-k(2) * ie()) * (A6 * -e.Cs() + B6 * e.Sc());
    s = s + (k(2) * ie()) * (d * -e.Cs() + m * e.Sc()) * (T * T);
    s = s + -(t1() * e.sin2T() + t2() * e.sh2H()) * (T * T * T);
    s = s + (-k(2) * ie() * x()) * (t1() * -e.Ss() + t2() * e.Cc()) * (T * T * T);
    s = s + (-ie() * x() * x() * T) * e.Cs() * (T * T * T);
    return s.divided_by(T * T * T);
}

/// Im P after t1 = α t2, term by term before simplification, over (α² + 1)³.
inline TrigHypExpr im_p_alpha_expanded() {
    using namespace detail;
    const Basis e{ArgForm::alpha_t2};
    const RationalPoly a = al();
    const RationalPoly am1 = a * a - k(1);
    const RationalPoly U = u();
    const RationalPoly w = sq(am1) - k(4) * a * a;

    TrigHypExpr s = (-ie() * x() * x()) *
                    ((sq(am1) * t2() * t2() - k(4) * a * a * t2() * t2()) * -e.Cs() +
                     k(2) * am1 * k(2) * a * t2() * t2() * e.Sc()) *
                    (U * U);
    s = s + (k(2) * ie() * x()) *
                ((a * t2() * w - t2() * k(2) * am1 * k(2) * a) * -e.Ss() +
                 (a * t2() * k(2) * am1 * k(2) * a + t2() * w) * e.Cc()) *
                U;
    s = s + (-k(2) * ie()) * ((am1 * w - k(2) * am1 * k(4) * a * a) * -e.Cs() +
                              k(2) * a * (k(3) * sq(am1) - k(4) * a * a) * e.Sc());
    s = s + (k(2) * ie()) * (am1 * -e.Cs() + k(2) * a * e.Sc()) * (U * U);
    s = s + -(a * t2() * e.sin2T() + t2() * e.sh2H()) * (U * U * U);
    s = s + (-k(2) * ie() * x()) * (a * t2() * -e.Ss() + t2() * e.Cc()) * (U * U * U);
    s = s + (-ie() * x() * x() * U * t2() * t2()) * e.Cs() * (U * U * U);
    return s.divided_by(U * U * U);
}

/// Im P after t1 = α t2 with the polynomial coefficients collected, over (α² + 1)³.
inline TrigHypExpr im_p_alpha_simplified() {
    using namespace detail;
    const Basis e{ArgForm::alpha_t2};
    const RationalPoly a = al();
    const RationalPoly a2 = a * a;
    const RationalPoly am1 = a2 - k(1);
    const RationalPoly U = u();
    const RationalPoly q4 = a2 * a2 - k(6) * a2 + k(1);

    TrigHypExpr s = (ie() * x() * x() * t2() * t2()) * (q4 * e.Cs() - k(4) * a * am1 * e.Sc()) * (U * U);
    s = s + (k(2) * ie() * x() * t2()) *
                ((a2 * a2 * a - k(10) * a2 * a + k(5) * a) * -e.Ss() + (k(5) * a2 * a2 - k(10) * a2 + k(1)) * e.Cc()) *
                U;
    s = s + (k(2) * ie()) * ((am1 * q4 - k(8) * a2 * am1) * e.Cs() - k(2) * a * (k(3) * sq(am1) - k(4) * a2) * e.Sc());
    s = s + (k(2) * ie()) * (am1 * -e.Cs() + k(2) * a * e.Sc()) * (U * U);
    s = s + -(a * t2() * e.sin2T() + t2() * e.sh2H()) * (U * U * U);
    s = s + (k(2) * ie() * x() * t2()) * (a * e.Ss() - e.Cc()) * (U * U * U);
    s = s + (-ie() * x() * x() * U * t2() * t2()) * e.Cs() * (U * U * U);
    return s.divided_by(U * U * U);
}

/// The merged form: first and seventh, second and sixth, third and fourth terms combined.
inline TrigHypExpr im_p_merged() {
    using namespace detail;
    const Basis e{ArgForm::alpha_t2};
    const RationalPoly a = al();
    const RationalPoly a2 = a * a;
    const RationalPoly am1 = a2 - k(1);
    const RationalPoly U = u();

    TrigHypExpr s = (ie() * x() * x() * t2() * t2()) *
                    ((a2 * a2 - k(6) * a2 + k(1)) * e.Cs() - k(4) * a * am1 * e.Sc() - (U * U) * e.Cs()) * (U * U);
    s = s + (k(2) * ie() * x() * t2()) *
                ((-a2 * a2 * a + k(10) * a2 * a - k(5) * a) * e.Ss() + (k(5) * a2 * a2 - k(10) * a2 + k(1)) * e.Cc() +
                 (a * U * U) * e.Ss() - (U * U) * e.Cc()) *
                U;
    s = s + (k(2) * ie()) * ((am1 * (a2 * a2 - k(14) * a2 + k(1))) * e.Cs() -
                             k(2) * a * (k(3) * sq(am1) - k(4) * a2) * e.Sc() - (am1 * U * U) * e.Cs() +
                             (k(2) * a * U * U) * e.Sc());
    s = s + -(a * t2() * e.sin2T() + t2() * e.sh2H()) * (U * U * U);
    return s.divided_by(U * U * U);
}

/// Q(b), the coefficient with Im P = (2/ε) Q - [α t2 sin(t2 b) + t2 sh(α t2 b)], over (α² + 1)³.
inline TrigHypExpr q_bracket_form() {
    using namespace detail;
    const Basis e{ArgForm::alpha_t2};
    const RationalPoly a = al();
    const RationalPoly a2 = a * a;
    const RationalPoly U = u();

    TrigHypExpr s = (x() * x() * t2() * t2()) * ((-k(4) * a2) * e.Cs() + (-k(2) * a2 * a + k(2) * a) * e.Sc()) * (U * U);
    s = s + (x() * t2()) * ((k(12) * a2 * a - k(4) * a) * e.Ss() + (k(4) * a2 * a2 - k(12) * a2) * e.Cc()) * U;
    s = s + ((-k(16) * a2 * a2 + k(16) * a2) * e.Cs() + (-k(4) * a2 * a2 * a + k(24) * a2 * a - k(4) * a) * e.Sc());
    return s.divided_by(U * U * U);
}

/// The remainder α t2 sin(t2 b) + t2 sh(α t2 b) subtracted from (2/ε) Q.
inline TrigHypExpr q_remainder() {
    using namespace detail;
    const Basis e{ArgForm::alpha_t2};
    return al() * t2() * e.sin2T() + t2() * e.sh2H();
}

/// Q after b = 2σ/t2, over (α² + 1)³.
inline TrigHypExpr q_sigma_form() {
    using namespace detail;
    const Basis e{ArgForm::alpha_sigma};
    const RationalPoly a = al();
    const RationalPoly a2 = a * a;
    const RationalPoly s2 = sg() * sg();
    const RationalPoly U = u();

    TrigHypExpr s = ((-k(4) * a2 * s2) * e.Cs() + ((-k(2) * a2 * a + k(2) * a) * s2) * e.Sc()) * (U * U);
    s = s + (((k(12) * a2 * a - k(4) * a) * sg()) * e.Ss() + ((k(4) * a2 * a2 - k(12) * a2) * sg()) * e.Cc()) * U;
    s = s + ((-k(16) * a2 * a2 + k(16) * a2) * e.Cs() + (-k(4) * a2 * a2 * a + k(24) * a2 * a - k(4) * a) * e.Sc());
    return s.divided_by(U * U * U);
}

/// g1..g4 as printed; Q = [e^{ασ}(g1 sin σ + g2 cos σ) + e^{-ασ}(g3 sin σ + g4 cos σ)] / (2(α² + 1)³).
struct GPolynomials {
    RationalPoly g1, g2, g3, g4;
};

inline GPolynomials g_polynomials() {
    using namespace detail;
    const RationalPoly a = al();
    const RationalPoly a2 = a * a;
    const RationalPoly s = sg();
    const RationalPoly U = u();
    const RationalPoly U2s2 = U * U * s * s;
    const RationalPoly Us = U * s;
    return {
        -k(4) * a2 * U2s2 + (k(12) * a2 * a - k(4) * a) * Us + (-k(16) * a2 * a2 + k(16) * a2),
        (-k(2) * a2 * a + k(2) * a) * U2s2 + (k(4) * a2 * a2 - k(12) * a2) * Us +
            (-k(4) * a2 * a2 * a + k(24) * a2 * a - k(4) * a),
        -k(4) * a2 * U2s2 + (-k(12) * a2 * a + k(4) * a) * Us + (-k(16) * a2 * a2 + k(16) * a2),
        (k(2) * a2 * a - k(2) * a) * U2s2 + (k(4) * a2 * a2 - k(12) * a2) * Us + (k(4) * a2 * a2 * a - k(24) * a2 * a + k(4) * a),
    };
}

/// Left side of the printed discriminant inequality for g1 (claimed negative).
inline RationalPoly g1_discriminant() {
    using namespace detail;
    const RationalPoly a = al();
    const RationalPoly a2 = a * a;
    const RationalPoly U = u();
    return sq(k(12) * a2 * a - k(4) * a) * U * U - k(4) * (-k(4) * a2 * U * U) * (-k(16) * a2 * a2 + k(16) * a2);
}

/// Printed real/imaginary parts of t², t⁴, t⁵, t⁶ for t = t1 + i t2.
inline ComplexPoly complex_power(int n) {
    using namespace detail;
    const RationalPoly d = t1() * t1() - t2() * t2();
    const RationalPoly m = k(2) * t1() * t2();
    const RationalPoly A = sq(d) - sq(m);
    const RationalPoly B = k(2) * d * m;
    switch (n) {
        case 2: return {d, m};
        case 4: return {A, B};
        case 5: return {t1() * A - t2() * B, t1() * B + t2() * A};
        case 6: return {d * A - k(2) * d * sq(m), m * (k(3) * sq(d) - sq(m))};
        default: throw DomainError("printed complex powers exist for n in {2, 4, 5, 6}");
    }
}

/// ch(t̄ b/2) sh(t b/2) = ½[sh(t1 b) + i sin(t2 b)].
inline ComplexTrigHyp ch_conj_sh_product() {
    const detail::Basis e{ArgForm::t1_t2};
    const RationalPoly half = RationalPoly(Rational(1, 2));
    return {half * e.sh2H(), half * e.sin2T()};
}

}  // namespace xi_audit::symbolic::printed
