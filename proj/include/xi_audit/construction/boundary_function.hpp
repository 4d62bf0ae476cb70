#pragma once

#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/error.hpp"
#include "xi_audit/core/real.hpp"

namespace xi_audit {

/// (t, b, ε, Ξ(t)) for v(y) = ch[t(y - b/2)] + t(y - b/2)²/(2ε) + Ξ(t) y.
template <class Real>
struct ConstructionParams {
    Complex<Real> t;
    Real b{1};
    Real eps{1};
    /// Zero selects the reduced form whose boundary values are symmetric.
    Complex<Real> xi_value;

    void validate() const {
        if (!(b > 0)) {
            throw InvariantViolation("construction needs b > 0");
        }
        if (!(eps > 0)) {
            throw InvariantViolation("construction needs eps > 0");
        }
    }
};

namespace detail {

template <class Real>
void require_in_range(const Real& y, const ConstructionParams<Real>& p) {
    p.validate();
    if (y < 0 || y > p.b) {
        throw DomainError("construction evaluated outside [0, b]");
    }
}

}  // namespace detail

template <class Real>
Complex<Real> v(const Real& y, const ConstructionParams<Real>& p) {
    detail::require_in_range(y, p);
    const Real u = y - p.b / 2;
    return cosh(p.t * u) + p.t * (u * u / (2 * p.eps)) + p.xi_value * y;
}

template <class Real>
Complex<Real> v_prime(const Real& y, const ConstructionParams<Real>& p) {
    detail::require_in_range(y, p);
    const Real u = y - p.b / 2;
    return p.t * sinh(p.t * u) + p.t * (u / p.eps) + p.xi_value;
}

template <class Real>
Complex<Real> v_second(const Real& y, const ConstructionParams<Real>& p) {
    detail::require_in_range(y, p);
    const Real u = y - p.b / 2;
    return p.t * p.t * cosh(p.t * u) + p.t / p.eps;
}

/// v'' - [t² v - t³ u²/(2ε) - t² Ξ y + t/ε] with u = y - b/2; identically zero.
template <class Real>
Complex<Real> ode_residual(const Real& y, const ConstructionParams<Real>& p) {
    const Real u = y - p.b / 2;
    const Complex<Real> t2 = p.t * p.t;
    const Complex<Real> rhs = t2 * v(y, p) - t2 * p.t * (u * u / (2 * p.eps)) - t2 * p.xi_value * y + p.t / p.eps;
    return v_second(y, p) - rhs;
}

}  // namespace xi_audit
