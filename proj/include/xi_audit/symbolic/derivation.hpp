#pragma once

#include "xi_audit/core/error.hpp"
#include "xi_audit/symbolic/rational_poly.hpp"
#include "xi_audit/symbolic/trig_hyp.hpp"

#include <array>
#include <string>
#include <vector>

namespace xi_audit::symbolic {

/// Real and imaginary parts of (t1 + i t2)^n by repeated exact multiplication.
inline ComplexPoly expand_complex_powers(int n) {
    if (n < 0) {
        throw DomainError("expand_complex_powers needs n >= 0");
    }
    const ComplexPoly t{var(Var::t1), var(Var::t2)};
    ComplexPoly r{RationalPoly(1), RationalPoly()};
    for (int k = 0; k < n; ++k) {
        r = r * t;
    }
    return r;
}

namespace detail {

inline RationalPoly half_b() {
    RationalPoly x = var(Var::b);
    x *= Rational(1, 2);
    return x;
}

inline RationalPoly t1t2_norm() { return var(Var::t1, 2) + var(Var::t2, 2); }
inline RationalPoly alpha_norm() { return var(Var::alpha, 2) + RationalPoly(1); }

inline TrigHypExpr basis_of(const BasisKey& k, ArgForm form) {
    return TrigHypExpr::basis(k.hyp, k.hyp_mult, k.trig, k.trig_mult, form);
}

/// The part of e whose coefficients carry inv_eps^power, with inv_eps removed.
inline TrigHypExpr inv_eps_part(const TrigHypExpr& e, int power) {
    TrigHypExpr out(e.form());
    for (const auto& [k, c] : e.numerators()) {
        const auto parts = c.collect(Var::inv_eps);
        auto it = parts.find(power);
        if (it != parts.end()) {
            out = out + it->second * basis_of(k, e.form());
        }
    }
    return out.divided_by(e.denominator());
}

}  // namespace detail

/// sh and ch of t b/2 and conj(t) b/2 written with H = t1 b/2, T = t2 b/2.
struct ComplexHyperbolicBasis {
    ComplexTrigHyp sh_t;
    ComplexTrigHyp ch_t;
    ComplexTrigHyp sh_tbar;
    ComplexTrigHyp ch_tbar;
};

inline ComplexHyperbolicBasis complex_hyperbolic_basis() {
    const ArgForm f = ArgForm::t1_t2;
    const auto Sc = TrigHypExpr::basis(Hyp::sh, 1, Trig::cos, 1, f);
    const auto Cs = TrigHypExpr::basis(Hyp::ch, 1, Trig::sin, 1, f);
    const auto Cc = TrigHypExpr::basis(Hyp::ch, 1, Trig::cos, 1, f);
    const auto Ss = TrigHypExpr::basis(Hyp::sh, 1, Trig::sin, 1, f);
    // sh(H ± iT) = sh H cos T ± i ch H sin T, ch(H ± iT) = ch H cos T ± i sh H sin T
    return {{Sc, Cs}, {Cc, Ss}, {Sc, -Cs}, {Cc, -Ss}};
}

/// Im P from its seven summands, over (t1² + t2²)³; coefficients are polynomials in t1, t2, b, inv_eps.
inline TrigHypExpr derive_im_P() {
    const auto hb = complex_hyperbolic_basis();
    const RationalPoly x = detail::half_b();
    const RationalPoly ie = var(Var::inv_eps);
    const RationalPoly T = detail::t1t2_norm();
    const ComplexPoly t = expand_complex_powers(1);
    const ComplexPoly t2 = expand_complex_powers(2);
    const ComplexPoly t4 = expand_complex_powers(4);
    const ComplexPoly t5 = expand_complex_powers(5);
    const ComplexPoly t6 = expand_complex_powers(6);
    const ComplexTrigHyp ch_bar_sh = hb.ch_tbar * hb.sh_t;

    // Each summand scaled by (t1² + t2²)³ to share one denominator.
    ComplexTrigHyp sum = (t4 * (-ie * x * x * T * T)) * hb.sh_tbar;
    sum = sum + (t5 * (RationalPoly(2) * ie * x * T)) * hb.ch_tbar;
    sum = sum + (t6 * (RationalPoly(-2) * ie)) * hb.sh_tbar;
    sum = sum + (t2 * (RationalPoly(2) * ie * T * T)) * hb.sh_tbar;
    sum = sum + (t * (RationalPoly(-2) * T * T * T)) * ch_bar_sh;
    sum = sum + (t * (RationalPoly(-2) * ie * x * T * T * T)) * hb.ch_tbar;
    sum = sum + ComplexPoly{-ie * x * x * T * T * T * T, RationalPoly()} * hb.sh_t;
    return sum.im.divided_by(T * T * T);
}

/// t1 -> α t2, with the denominator rewritten as (α² + 1)³.
inline TrigHypExpr substitute_alpha(const TrigHypExpr& e) {
    if (e.form() != ArgForm::t1_t2) {
        throw DomainError("substitute_alpha expects the t1,t2 argument form");
    }
    const RationalPoly u = detail::alpha_norm();
    return e.substitute(Var::t1, var(Var::alpha) * var(Var::t2), ArgForm::alpha_t2).with_denominator(u * u * u);
}

/// Im P = (2/ε) Q - remainder, regrouped by the power of 1/ε.
struct MergeResult {
    TrigHypExpr merged;     ///< (2/ε) Q - remainder, reassembled
    TrigHypExpr Q;          ///< half the 1/ε coefficient
    TrigHypExpr remainder;  ///< minus the ε-free part
    bool conserved = false; ///< merged ≡ input exactly
    bool single_inverse_power = false;  ///< no powers of 1/ε other than 0 and 1
};

inline MergeResult merge_terms(const TrigHypExpr& e) {
    MergeResult r;
    r.single_inverse_power = true;
    for (const auto& [k, c] : e.numerators()) {
        if (c.min_degree(Var::inv_eps) < 0 || c.max_degree(Var::inv_eps) > 1) {
            r.single_inverse_power = false;
        }
    }
    r.Q = detail::inv_eps_part(e, 1) * RationalPoly(Rational(1, 2));
    r.remainder = -detail::inv_eps_part(e, 0);
    r.merged = r.Q * (RationalPoly(2) * var(Var::inv_eps)) - r.remainder;
    r.conserved = r.merged.equivalent(e);
    return r;
}

/// g1..g4 with Q = [e^{ασ}(g1 sin σ + g2 cos σ) + e^{-ασ}(g3 sin σ + g4 cos σ)] / (2(α² + 1)³).
struct GPolySet {
    RationalPoly g1, g2, g3, g4;
    RationalPoly denominator;  ///< (α² + 1)³

    const RationalPoly& operator[](int i) const {
        switch (i) {
            case 0: return g1;
            case 1: return g2;
            case 2: return g3;
            default: return g4;
        }
    }
};

/// b -> 2σ/t2; the result must be free of t2.
inline TrigHypExpr q_sigma(const TrigHypExpr& Q) {
    if (Q.form() != ArgForm::alpha_t2) {
        throw DomainError("q_sigma expects the alpha,t2 argument form");
    }
    Monomial m;
    m[Var::sigma] = 1;
    m[Var::t2] = -1;
    const RationalPoly u = detail::alpha_norm();
    TrigHypExpr s = Q.substitute(Var::b, RationalPoly::monomial(m, 2), ArgForm::alpha_sigma).with_denominator(u * u * u);
    for (const auto& [k, c] : s.numerators()) {
        if (c.depends_on(Var::t2)) {
            throw InvariantViolation("Q in sigma still depends on t2 through " + k.to_string(ArgForm::alpha_sigma));
        }
    }
    return s;
}

inline GPolySet q_in_sigma(const TrigHypExpr& Q) {
    const TrigHypExpr s = q_sigma(Q);
    const BasisKey Cs{Hyp::ch, 1, Trig::sin, 1};
    const BasisKey Ss{Hyp::sh, 1, Trig::sin, 1};
    const BasisKey Cc{Hyp::ch, 1, Trig::cos, 1};
    const BasisKey Sc{Hyp::sh, 1, Trig::cos, 1};
    for (const auto& [k, c] : s.numerators()) {
        if (!(k == Cs || k == Ss || k == Cc || k == Sc)) {
            throw InvariantViolation("Q in sigma has a term outside {sh, ch} x {sin, cos}: " +
                                     k.to_string(ArgForm::alpha_sigma));
        }
    }
    // ch = (e + e⁻)/2, sh = (e - e⁻)/2
    return {s.coefficient(Cs) + s.coefficient(Ss), s.coefficient(Cc) + s.coefficient(Sc),
            s.coefficient(Cs) - s.coefficient(Ss), s.coefficient(Cc) - s.coefficient(Sc), s.denominator()};
}

/// Exact sign data of one g as a quadratic A σ² + B σ + C in σ at a rational α.
struct GSignReport {
    std::string name;
    RationalPoly A, B, C;  ///< polynomials in α
    RationalPoly discriminant;
    FactoredPoly discriminant_factored;
    Rational alpha;
    Rational A_value, B_value, C_value, discriminant_value;
    int leading_sign = 0;
    int discriminant_sign = 0;
    int positive_roots = 0;
    int uniform_sign = 0;  ///< sign on all σ > 0, 0 when g changes sign or vanishes there
    int claimed_sign = 0;
    bool claim_holds = false;
    // Numeric sweep σ = kπ/50, k = 1..500.
    int sweep_points = 0;
    int sweep_violations = 0;
    double sweep_extreme = 0;  ///< the sample closest to violating the claimed sign
    bool sweep_consistent = false;
};

namespace detail {

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline Rational at_alpha(const RationalPoly& p, const Rational& alpha) {
    std::array<Rational, var_count> values{};
    values[static_cast<int>(Var::alpha)] = alpha;
    return p.evaluate_exact(values);
}

/// Number of roots in (0, ∞) of A σ² + B σ + C, from the exact discriminant and Vieta.
inline int positive_root_count(const Rational& A, const Rational& B, const Rational& C, const Rational& disc) {
    if (A == 0) {
        if (B == 0) return 0;
        return sign_of(-C / B) > 0 ? 1 : 0;
    }
    if (disc < 0) return 0;
    const Rational sum = -B / A;
    const Rational product = C / A;
    if (disc == 0) return sum > 0 ? 1 : 0;
    if (product < 0) return 1;
    if (product == 0) return sum > 0 ? 1 : 0;
    return sum > 0 ? 2 : 0;
}

}  // namespace detail

inline GSignReport g_sign_analysis(const RationalPoly& g, const std::string& name, const Rational& alpha,
                                   int claimed_sign) {
    GSignReport r;
    r.name = name;
    r.alpha = alpha;
    r.claimed_sign = claimed_sign;
    const auto parts = g.collect(Var::sigma);
    for (const auto& [k, c] : parts) {
        if (k < 0 || k > 2) {
            throw InvariantViolation(name + " is not quadratic in sigma");
        }
    }
    auto part = [&](int k) {
        auto it = parts.find(k);
        return it == parts.end() ? RationalPoly() : it->second;
    };
    r.A = part(2);
    r.B = part(1);
    r.C = part(0);
    r.discriminant = r.B * r.B - RationalPoly(4) * r.A * r.C;
    r.discriminant_factored = factor_univariate(r.discriminant, Var::alpha, {detail::alpha_norm()});
    r.A_value = detail::at_alpha(r.A, alpha);
    r.B_value = detail::at_alpha(r.B, alpha);
    r.C_value = detail::at_alpha(r.C, alpha);
    r.discriminant_value = r.B_value * r.B_value - 4 * r.A_value * r.C_value;
    r.leading_sign = detail::sign_of(r.A_value);
    r.discriminant_sign = detail::sign_of(r.discriminant_value);
    r.positive_roots = detail::positive_root_count(r.A_value, r.B_value, r.C_value, r.discriminant_value);
    if (r.positive_roots == 0) {
        // Constant sign on (0, ∞): the sign just right of σ = 0.
        r.uniform_sign = r.C_value != 0 ? detail::sign_of(r.C_value)
                                        : (r.B_value != 0 ? detail::sign_of(r.B_value) : detail::sign_of(r.A_value));
    }
    r.claim_holds = r.uniform_sign == claimed_sign && claimed_sign != 0;

    const double a = r.A_value.convert_to<double>();
    const double b = r.B_value.convert_to<double>();
    const double c = r.C_value.convert_to<double>();
    const double pi = 3.141592653589793238462643383279502884;
    r.sweep_points = 500;
    r.sweep_extreme = 0;
    bool first = true;
    for (int k = 1; k <= r.sweep_points; ++k) {
        const double s = k * pi / 50;
        const double v = (a * s + b) * s + c;
        if (!(v * claimed_sign > 0)) {
            ++r.sweep_violations;
        }
        if (first || v * claimed_sign < r.sweep_extreme * claimed_sign) {
            r.sweep_extreme = v;
            first = false;
        }
    }
    r.sweep_consistent = (r.sweep_violations == 0) == r.claim_holds;
    return r;
}

/// The claimed signs: g1, g2, g3 negative and g4 positive for every σ > 0.
inline std::array<int, 4> claimed_g_signs() { return {-1, -1, -1, 1}; }

inline std::array<GSignReport, 4> g_sign_analysis(const GPolySet& g, const Rational& alpha) {
    const auto claims = claimed_g_signs();
    std::array<GSignReport, 4> out;
    for (int i = 0; i < 4; ++i) {
        out[i] = g_sign_analysis(g[i], "g" + std::to_string(i + 1), alpha, claims[i]);
    }
    return out;
}

}  // namespace xi_audit::symbolic
