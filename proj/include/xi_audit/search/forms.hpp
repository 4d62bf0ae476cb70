#pragma once

// Numeric evaluation of f = Im P, its ε-leading part Q, and the h = F + G/ε split.
// The expressions are typed in directly from their printed shape; nothing here goes
// through the symbolic engine, which keeps the two routes independent.

#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/quadrature.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/identity/fg_terms.hpp"

#include <cmath>
#include <utility>

namespace xi_audit {

/// A value together with Σ|summands|, the magnitude that roundoff scales with.
template <class Real>
struct ScaledValue {
    Real value{0};
    Real scale{0};
};

namespace detail {

template <class Real>
struct HalfArgumentBasis {
    Real S, C, s, c;  ///< sh H, ch H, sin T, cos T
    Real sin2T, sh2H;

    HalfArgumentBasis(const Real& H, const Real& T) {
        using std::cos;
        using std::cosh;
        using std::sin;
        using std::sinh;
        S = sinh(H);
        C = cosh(H);
        s = sin(T);
        c = cos(T);
        sin2T = sin(2 * T);
        sh2H = sinh(2 * H);
    }
};

template <class Real>
void accumulate(ScaledValue<Real>& acc, const Real& term) {
    using std::abs;
    acc.value += term;
    acc.scale += abs(term);
}

}  // namespace detail

/// Im P in its expanded t1, t2 form (seven summands).
template <class Real>
ScaledValue<Real> f_expanded(const Real& b, const Real& eps, const Real& t1, const Real& t2) {
    const Real x = b / 2;
    const Real ie = 1 / eps;
    const detail::HalfArgumentBasis<Real> e(t1 * x, t2 * x);
    const Real tt = t1 * t1 + t2 * t2;
    const Real d = t1 * t1 - t2 * t2;
    const Real m = 2 * t1 * t2;
    const Real A = d * d - m * m;
    const Real B = 2 * d * m;
    const Real A5 = t1 * A - t2 * B;
    const Real B5 = t1 * B + t2 * A;
    const Real A6 = d * A - 2 * d * m * m;
    const Real B6 = m * (3 * d * d - m * m);

    ScaledValue<Real> f;
    detail::accumulate(f, Real(-ie * x * x / tt * (A * -(e.C * e.s) + B * e.S * e.c)));
    detail::accumulate(f, Real(2 * ie * x / (tt * tt) * (A5 * -(e.S * e.s) + B5 * e.C * e.c)));
    detail::accumulate(f, Real(-2 * ie / (tt * tt * tt) * (A6 * -(e.C * e.s) + B6 * e.S * e.c)));
    detail::accumulate(f, Real(2 * ie / tt * (d * -(e.C * e.s) + m * e.S * e.c)));
    detail::accumulate(f, Real(-(t1 * e.sin2T + t2 * e.sh2H)));
    detail::accumulate(f, Real(-2 * ie * x * (t1 * -(e.S * e.s) + t2 * e.C * e.c)));
    detail::accumulate(f, Real(-ie * x * x * tt * e.C * e.s));
    return f;
}

/// Q(b), written in t1, t2 (the α-form multiplied through by powers of t2).
template <class Real>
ScaledValue<Real> q_value(const Real& b, const Real& t1, const Real& t2) {
    const Real x = b / 2;
    const detail::HalfArgumentBasis<Real> e(t1 * x, t2 * x);
    const Real tt = t1 * t1 + t2 * t2;
    const Real p1 = t1 * t2;
    const Real a2 = t1 * t1;
    const Real b2 = t2 * t2;
    ScaledValue<Real> q;
    detail::accumulate(q, Real(x * x / tt * (-4 * a2 * b2 * e.C * e.s + (-2 * a2 + 2 * b2) * p1 * e.S * e.c)));
    detail::accumulate(q, Real(x / (tt * tt) * ((12 * a2 - 4 * b2) * p1 * t2 * e.S * e.s + (4 * a2 - 12 * b2) * p1 * t1 * e.C * e.c)));
    detail::accumulate(q, Real(1 / (tt * tt * tt) *
                               ((-16 * a2 + 16 * b2) * p1 * p1 * e.C * e.s +
                                (-4 * a2 * a2 + 24 * a2 * b2 - 4 * b2 * b2) * p1 * e.S * e.c)));
    return q;
}

/// α t2 sin(t2 b) + t2 sh(α t2 b) with α t2 = t1; the part of f free of 1/ε, with its sign flipped.
template <class Real>
Real remainder_value(const Real& b, const Real& t1, const Real& t2) {
    using std::sin;
    using std::sinh;
    return t1 * sin(t2 * b) + t2 * sinh(t1 * b);
}

/// |α t2 sin(t2 b)| + |t2 sh(α t2 b)|.
template <class Real>
Real remainder_bound(const Real& b, const Real& t1, const Real& t2) {
    using std::abs;
    using std::sin;
    using std::sinh;
    return abs(t1 * sin(t2 * b)) + abs(t2 * sinh(t1 * b));
}

/// (2/ε) Q(b) - remainder.
template <class Real>
ScaledValue<Real> f_split(const Real& b, const Real& eps, const Real& t1, const Real& t2) {
    const auto q = q_value(b, t1, t2);
    ScaledValue<Real> f;
    f.value = 2 * q.value / eps - remainder_value(b, t1, t2);
    f.scale = 2 * q.scale / eps + remainder_bound(b, t1, t2);
    return f;
}

/// Both forms of f at one point and their disagreement.
template <class Real>
struct FEvaluation {
    Real expanded{0};
    Real split{0};
    Real scale{0};
    Real difference{0};
};

template <class Real>
FEvaluation<Real> f_both(const Real& b, const Real& eps, const Real& t1, const Real& t2) {
    using std::abs;
    using std::max;
    if (b < 0) {
        throw DomainError("f needs b >= 0");
    }
    if (!(eps > 0)) {
        throw DomainError("f needs eps > 0");
    }
    const auto a = f_expanded(b, eps, t1, t2);
    const auto s = f_split(b, eps, t1, t2);
    return {a.value, s.value, max(a.scale, s.scale), abs(a.value - s.value)};
}

/// f(b; ε) from the expanded form, checked against (2/ε)Q - remainder.
/// FormMismatch when they differ by more than rel_tol·scale + abs_tol.
template <class Real>
Real f_eval(const Real& b, const Real& eps, const Real& t1, const Real& t2, const PrecisionContext& ctx = {}) {
    const auto r = f_both(b, eps, t1, t2);
    if (r.difference > Real(ctx.rel_tol) * r.scale + Real(ctx.abs_tol)) {
        throw FormMismatch("expanded and split forms of f disagree: " + format_significant(to_double(r.expanded)) +
                           " vs " + format_significant(to_double(r.split)));
    }
    return r.expanded;
}

/// mantissa · e^{log_scale}; the sign lives in the mantissa.
template <class Real>
struct ExpScaled {
    Real mantissa{0};
    Real log_scale{0};

    int sign() const { return mantissa > 0 ? 1 : (mantissa < 0 ? -1 : 0); }
    Real value() const {
        using std::exp;
        return mantissa * exp(log_scale);
    }
};

/// The four coefficient polynomials of Q in σ at fixed α.
template <class Real>
struct GValues {
    Real g1, g2, g3, g4;
};

template <class Real>
GValues<Real> g_values(const Real& sigma, const Real& alpha) {
    const Real a = alpha;
    const Real a2 = a * a;
    const Real u = a2 + 1;
    const Real s2 = u * u * sigma * sigma;
    const Real s1 = u * sigma;
    return {
        -4 * a2 * s2 + (12 * a2 * a - 4 * a) * s1 + (-16 * a2 * a2 + 16 * a2),
        (-2 * a2 * a + 2 * a) * s2 + (4 * a2 * a2 - 12 * a2) * s1 + (-4 * a2 * a2 * a + 24 * a2 * a - 4 * a),
        -4 * a2 * s2 + (-12 * a2 * a + 4 * a) * s1 + (-16 * a2 * a2 + 16 * a2),
        (2 * a2 * a - 2 * a) * s2 + (4 * a2 * a2 - 12 * a2) * s1 + (4 * a2 * a2 * a - 24 * a2 * a + 4 * a),
    };
}

/// Q at b = 2σ/t2 as [e^{ασ}(g1 sin σ + g2 cos σ) + e^{-ασ}(g3 sin σ + g4 cos σ)] / (2(α² + 1)³),
/// returned with e^{ασ} factored out.
template <class Real>
ExpScaled<Real> q_eval(const Real& sigma, const Real& alpha) {
    using std::cos;
    using std::exp;
    using std::sin;
    if (!(sigma > 0)) {
        throw DomainError("q_eval needs sigma > 0");
    }
    const auto g = g_values(sigma, alpha);
    const Real s = sin(sigma);
    const Real c = cos(sigma);
    const Real u = alpha * alpha + 1;
    const Real den = 2 * u * u * u;
    const Real decay = exp(-2 * alpha * sigma);
    return {((g.g1 * s + g.g2 * c) + decay * (g.g3 * s + g.g4 * c)) / den, alpha * sigma};
}

/// q_eval in binary64, or in Extended when α σ exceeds the binary64 exponent switch.
inline ExpScaled<double> q_eval_auto(double sigma, double alpha) {
    if (!PrecisionContext::needs_extended(alpha * sigma)) {
        return q_eval(sigma, alpha);
    }
    const auto r = q_eval(from_double<Extended>(sigma), from_double<Extended>(alpha));
    return {to_double(r.mantissa), to_double(r.log_scale)};
}

/// (3π/t2, 5π/t2): σ = 3π/2 and σ = 5π/2 mapped back through b = 2σ/t2.
inline std::pair<double, double> b1_b2(double t2, const PrecisionContext& ctx = {}) {
    if (!(t2 > ctx.abs_tol)) {
        throw DegenerateT2("b1 and b2 need t2 > 0, got t2 = " + format_double(t2));
    }
    const double pi = pi_v<double>();
    return {3 * pi / t2, 5 * pi / t2};
}

template <class Real>
std::pair<Real, Real> b1_b2_real(const Real& t2) {
    if (!(t2 > 0)) {
        throw DegenerateT2("b1 and b2 need t2 > 0");
    }
    const Real pi = pi_v<Real>();
    return {3 * pi / t2, 5 * pi / t2};
}

/// F(b) with t1 = α t2.
template <class Real>
Real F_eval(const Real& b, const Real& t2, const Real& alpha) {
    return F_closed(b, Real(alpha * t2), t2);
}

/// ¼(b - 1/t2), the lower bound F exceeds once b t2 ≥ 3π.
template <class Real>
Real F_lower_bound(const Real& b, const Real& t2) {
    return (b - 1 / t2) / 4;
}

/// G(b) by quadrature of its defining integrals.
template <class Real>
Real G_eval(const Real& b, const Real& t1, const Real& t2, const QuadratureSpec& quad) {
    if (!(b > 0)) {
        throw DomainError("G needs b > 0");
    }
    return G_quadrature(b, t1, t2, quad);
}

}  // namespace xi_audit
