#pragma once

#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/quadrature.hpp"
#include "xi_audit/core/real.hpp"

#include <cmath>

namespace xi_audit {

namespace detail {

/// sh(a c) / a, equal to c at a = 0.
template <class Real>
Real sinh_over(const Real& a, const Real& c) {
    using std::sinh;
    return a == 0 ? c : Real(sinh(a * c) / a);
}

/// sin(a c) / a, equal to c at a = 0.
template <class Real>
Real sin_over(const Real& a, const Real& c) {
    using std::sin;
    return a == 0 ? c : Real(sin(a * c) / a);
}

}  // namespace detail

/// F(b) = ∫₀^b |ch(t(y - b/2))|² dy = ½[sh(t1 b)/t1 + sin(t2 b)/t2].
template <class Real>
Real F_closed(const Real& b, const Real& t1, const Real& t2) {
    return (detail::sinh_over(t1, b) + detail::sin_over(t2, b)) / 2;
}

/// The printed variant ¼[(e^{t1 b} - e^{-t1 b})/t1 + sin(t2 b)/t2]; its sine weight is half the derived one.
template <class Real>
Real F_printed(const Real& b, const Real& t1, const Real& t2) {
    return (2 * detail::sinh_over(t1, b) + detail::sin_over(t2, b)) / 4;
}

/// Integrand of G at u = y - b/2.
template <class Real>
Real G_integrand(const Real& u, const Real& t1, const Real& t2) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return (t1 * cos(t2 * u) * cosh(t1 * u) + t2 * sin(t2 * u) * sinh(t1 * u)) * u * u;
}

/// Rough magnitude of G used to set an absolute quadrature target.
template <class Real>
Real G_scale(const Real& b, const Real& t1, const Real& t2) {
    using std::abs;
    using std::cosh;
    const Real x = b / 2;
    return (abs(t1) + abs(t2)) * cosh(t1 * x) * x * x * x;
}

/// G(b) by quadrature of its defining integral (the integrand is even in u).
/// The integrand is normalized by G_scale, so quad.target_abs is relative to that scale.
template <class Real>
Real G_quadrature(const Real& b, const Real& t1, const Real& t2, const QuadratureSpec& quad) {
    Real scale = G_scale(b, t1, t2);
    if (!(scale > 0)) {
        scale = 1;
    }
    auto f = [&](const Real& u) { return Real(G_integrand(u, t1, t2) / scale); };
    return 2 * scale * integrate(f, Real(0), b / 2, quad).value;
}

/// G(b) = Re[conj(t) I(t)] with I(t) = ∫_{-x}^{x} u² ch(tu) du, x = b/2.
template <class Real>
Real G_closed(const Real& b, const Real& t1, const Real& t2) {
    const Complex<Real> t(t1, t2);
    const Real x = b / 2;
    const Complex<Real> tx = t * x;
    Complex<Real> I;
    if (abs(tx) < Real(1)) {
        // 2 Σ t^{2k} x^{2k+3} / ((2k)! (2k+3))
        const Complex<Real> z2 = tx * tx;
        Complex<Real> power(Real(1));
        Real fact = 1;
        for (int k = 0; k < 200; ++k) {
            if (k > 0) {
                power *= z2;
                fact *= Real((2 * k - 1) * (2 * k));
            }
            const Complex<Real> term = power / (fact * Real(2 * k + 3));
            I += term;
            if (abs(term) <= std::numeric_limits<Real>::epsilon() * abs(I)) {
                break;
            }
        }
        I = I * Real(2 * x * x * x);
    } else {
        const Complex<Real> sh = sinh(tx);
        const Complex<Real> ch = cosh(tx);
        const Complex<Real> inv = Complex<Real>(Real(1)) / t;
        I = (sh * (x * x) * inv - ch * (2 * x) * inv * inv + sh * Real(2) * inv * inv * inv) * Real(2);
    }
    return (conj(t) * I).re;
}

}  // namespace xi_audit
