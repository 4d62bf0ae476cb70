#pragma once

#include "xi_audit/construction/boundary_function.hpp"
#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/error.hpp"
#include "xi_audit/core/quadrature.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/identity/fg_terms.hpp"

#include <array>
#include <cmath>

namespace xi_audit {

/// Quadrature targets for identity audits at the precision of Real.
template <class Real>
QuadratureSpec identity_quadrature() {
    QuadratureSpec q;
    q.nodes_per_panel = 20;
    q.initial_panels = 2;
    q.max_panels = 8192;
    if constexpr (is_binary64_v<Real>) {
        q.target_abs = 1e-300;
        q.target_rel = 1e-14;
    } else {
        q.target_abs = 1e-300;
        q.target_rel = 1e-38;
    }
    return q;
}

namespace detail {

template <class Real>
void require_reduced(const ConstructionParams<Real>& p) {
    p.validate();
    if (!(p.xi_value == Complex<Real>())) {
        throw DomainError("identity audit requires the reduced form (xi_value = 0)");
    }
    if (p.t == Complex<Real>()) {
        throw DomainError("identity audit requires t != 0");
    }
}

template <class Real>
Complex<Real> ipow(const Complex<Real>& z, int n) {
    Complex<Real> r(Real(1));
    for (int k = 0; k < n; ++k) {
        r *= z;
    }
    return r;
}

}  // namespace detail

/// Closed form of -(1/2ε) t³ ∫₀^b (y-b/2)² conj(v) dy, split by its power of 1/ε.
template <class Real>
struct QuadraticWeightTerm {
    Complex<Real> inverse_eps_part;     ///< the three hyperbolic summands, ∝ 1/ε
    Complex<Real> inverse_eps_sq_part;  ///< -t² tt̄ (b/2)⁵ / (10ε²)
    Complex<Real> total() const { return inverse_eps_part + inverse_eps_sq_part; }
};

template <class Real>
QuadraticWeightTerm<Real> quadratic_weight_term_closed(const ConstructionParams<Real>& p) {
    detail::require_reduced(p);
    const auto& t = p.t;
    const Real x = p.b / 2;
    const Real tt = norm(t);
    const Complex<Real> tb = conj(t);
    const Complex<Real> sh = sinh(tb * x);
    const Complex<Real> ch = cosh(tb * x);
    const Real e = p.eps;
    QuadraticWeightTerm<Real> out;
    out.inverse_eps_part = -detail::ipow(t, 4) / tt * (x * x / e) * sh + detail::ipow(t, 5) / (tt * tt) * (2 * x / e) * ch -
                           detail::ipow(t, 6) / (tt * tt * tt) * (2 / e) * sh;
    out.inverse_eps_sq_part = -(t * t) * (tt * x * x * x * x * x / (10 * e * e));
    return out;
}

template <class Real>
Complex<Real> quadratic_weight_term_quadrature(const ConstructionParams<Real>& p, const QuadratureSpec& quad) {
    detail::require_reduced(p);
    auto f = [&](const Real& y) {
        const Real u = y - p.b / 2;
        return conj(v(y, p)) * (u * u);
    };
    return -(p.t * p.t * p.t) / (2 * p.eps) * integrate(f, Real(0), p.b, quad).value;
}

/// Closed form of (1/ε) t ∫₀^b conj(v) dy = (2/ε)(t²/tt̄) sh(t̄b/2) + tt̄(b/2)³/(3ε²).
template <class Real>
Complex<Real> mean_term_closed(const ConstructionParams<Real>& p) {
    detail::require_reduced(p);
    const Real x = p.b / 2;
    const Real tt = norm(p.t);
    return p.t * p.t / tt * (2 / p.eps) * sinh(conj(p.t) * x) + Complex<Real>(tt * x * x * x / (3 * p.eps * p.eps));
}

template <class Real>
Complex<Real> mean_term_quadrature(const ConstructionParams<Real>& p, const QuadratureSpec& quad) {
    detail::require_reduced(p);
    auto f = [&](const Real& y) { return conj(v(y, p)); };
    return p.t / p.eps * integrate(f, Real(0), p.b, quad).value;
}

/// 2 conj(v(b)) v'(b) expanded into its four products.
template <class Real>
Complex<Real> boundary_term_expanded(const ConstructionParams<Real>& p) {
    detail::require_reduced(p);
    const auto& t = p.t;
    const Real x = p.b / 2;
    const Real tt = norm(t);
    const Real e = p.eps;
    return (t * cosh(conj(t) * x) * sinh(t * x) + t * (x / e) * cosh(conj(t) * x) +
            sinh(t * x) * (tt * x * x / (2 * e)) + Complex<Real>(tt * x * x * x / (2 * e * e))) *
           Real(2);
}

template <class Real>
Complex<Real> boundary_term_direct(const ConstructionParams<Real>& p) {
    detail::require_reduced(p);
    return conj(v(p.b, p)) * v_prime(p.b, p) * Real(2);
}

/// The seven summands of P(b;ε) in their printed order.
template <class Real>
std::array<Complex<Real>, 7> p_summands(const ConstructionParams<Real>& p) {
    detail::require_reduced(p);
    const auto& t = p.t;
    const Real x = p.b / 2;
    const Real tt = norm(t);
    const Real e = p.eps;
    const Complex<Real> sh_bar = sinh(conj(t) * x);
    const Complex<Real> ch_bar = cosh(conj(t) * x);
    const Complex<Real> sh = sinh(t * x);
    return {
        -detail::ipow(t, 4) / tt * (x * x / e) * sh_bar,
        detail::ipow(t, 5) / (tt * tt) * (2 * x / e) * ch_bar,
        -detail::ipow(t, 6) / (tt * tt * tt) * (2 / e) * sh_bar,
        t * t / tt * (2 / e) * sh_bar,
        -t * ch_bar * sh * Real(2),
        -t * (2 * x / e) * ch_bar,
        -sh * (tt * x * x / e),
    };
}

template <class Real>
Complex<Real> p_closed(const ConstructionParams<Real>& p) {
    Complex<Real> s;
    for (const auto& term : p_summands(p)) {
        s += term;
    }
    return s;
}

/// Every term of t²∫v v̄ + P - t² tt̄ (b/2)⁵/(10ε²) - 2tt̄(b/2)³/(3ε²) + ∫v' v̄' = 0.
template <class Real>
struct TermBreakdown {
    Complex<Real> t2_int_v_vbar;
    Complex<Real> quadratic_weight_term;        ///< closed form
    Complex<Real> quadratic_weight_quadrature;  ///< same quantity by quadrature
    Complex<Real> mean_term;
    Complex<Real> mean_quadrature;
    Complex<Real> boundary_term;  ///< expanded four-product form
    Complex<Real> boundary_direct;
    Complex<Real> int_v_vbar;
    Complex<Real> int_vp_vpbar;
    Complex<Real> p_value;
    Complex<Real> quintic_term;
    Complex<Real> cubic_term;
    Complex<Real> residual;
    /// Σ of the magnitudes of every summand entering the residual.
    Real scale{0};
};

template <class Real>
TermBreakdown<Real> identity_residual(const ConstructionParams<Real>& p, const QuadratureSpec& quad) {
    detail::require_reduced(p);
    const auto& t = p.t;
    const Real x = p.b / 2;
    const Real tt = norm(t);
    const Real e = p.eps;
    TermBreakdown<Real> r;
    r.int_v_vbar = Complex<Real>(integrate([&](const Real& y) { return norm(v(y, p)); }, Real(0), p.b, quad).value);
    r.int_vp_vpbar =
        Complex<Real>(integrate([&](const Real& y) { return norm(v_prime(y, p)); }, Real(0), p.b, quad).value);
    r.t2_int_v_vbar = t * t * r.int_v_vbar;
    r.quadratic_weight_term = quadratic_weight_term_closed(p).total();
    r.quadratic_weight_quadrature = quadratic_weight_term_quadrature(p, quad);
    r.mean_term = mean_term_closed(p);
    r.mean_quadrature = mean_term_quadrature(p, quad);
    r.boundary_term = boundary_term_expanded(p);
    r.boundary_direct = boundary_term_direct(p);
    const auto summands = p_summands(p);
    r.scale = 0;
    for (const auto& s : summands) {
        r.p_value += s;
        r.scale += abs(s);
    }
    r.quintic_term = -(t * t) * (tt * x * x * x * x * x / (10 * e * e));
    r.cubic_term = Complex<Real>(-2 * tt * x * x * x / (3 * e * e));
    r.residual = r.t2_int_v_vbar + r.p_value + r.quintic_term + r.cubic_term + r.int_vp_vpbar;
    r.scale += abs(r.t2_int_v_vbar) + abs(r.quintic_term) + abs(r.cubic_term) + abs(r.int_vp_vpbar);
    return r;
}

/// h = ∫|v|² - tt̄(b/2)⁵/(10ε²) against F + G/ε.
template <class Real>
struct HDecomposition {
    Real h_quadrature{0};
    Real F_value{0};
    Real G_value{0};
    Real h_closed{0};
    Real int_v_vbar{0};
    /// Printed F with the halved sine weight.
    Real F_printed_value{0};
    /// ∫|v|² - tt̄(b/2)²/(10ε²), the variant with the square exponent.
    Real h_square_exponent{0};
    /// ∫₀^b tt̄ (y - b/2)⁴/(4ε²) dy by quadrature, and the closed value tt̄(b/2)⁵/(10ε²).
    Real quartic_integral_quadrature{0};
    Real quartic_integral_closed{0};
};

template <class Real>
HDecomposition<Real> h_decompose(const ConstructionParams<Real>& p, const QuadratureSpec& quad) {
    detail::require_reduced(p);
    const Real t1 = p.t.re;
    const Real t2 = p.t.im;
    const Real x = p.b / 2;
    const Real tt = norm(p.t);
    const Real e = p.eps;
    HDecomposition<Real> h;
    h.int_v_vbar = integrate([&](const Real& y) { return norm(v(y, p)); }, Real(0), p.b, quad).value;
    h.quartic_integral_closed = tt * x * x * x * x * x / (10 * e * e);
    h.quartic_integral_quadrature = integrate(
        [&](const Real& y) {
            const Real u = y - p.b / 2;
            return Real(tt * u * u * u * u / (4 * e * e));
        },
        Real(0), p.b, quad).value;
    h.h_quadrature = h.int_v_vbar - h.quartic_integral_closed;
    h.F_value = F_closed(p.b, t1, t2);
    h.G_value = G_quadrature(p.b, t1, t2, quad);
    h.h_closed = h.F_value + h.G_value / e;
    h.F_printed_value = F_printed(p.b, t1, t2);
    h.h_square_exponent = h.int_v_vbar - tt * x * x / (10 * e * e);
    return h;
}

}  // namespace xi_audit
