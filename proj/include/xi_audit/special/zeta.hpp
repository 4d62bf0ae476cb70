#pragma once

#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/special/gamma.hpp"

#include <cmath>
#include <vector>

namespace xi_audit {

namespace detail {

/// Number of Borwein terms for full working precision at height |t|.
template <class Real>
int borwein_terms(const Real& abs_t) {
    const double t = to_double(abs_t);
    const double digits = digits10_v<Real>() + 3;
    const double need = digits * std::log(10.0) + 1.5707963267948966 * t + std::log(1 + 2 * t) + 3;
    return static_cast<int>(std::ceil(need / std::log(3 + std::sqrt(8.0)))) + 1;
}

}  // namespace detail

/// Dirichlet eta (alternating zeta) by Borwein's accelerated series; valid for re s > 0.
template <class Real>
Complex<Real> eta(const Complex<Real>& s) {
    using std::abs;
    using std::log;
    const int n = detail::borwein_terms(Real(abs(s.im)));
    // d_k = n Σ_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built by term ratios.
    std::vector<Real> d(n + 1);
    Real term = Real(1) / n;
    Real acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= Real(4) * Real(n + i - 1) * Real(n - i + 1) / (Real(2 * i - 1) * Real(2 * i));
        acc += term;
        d[i] = n * acc;
    }
    Complex<Real> sum;
    for (int k = 0; k < n; ++k) {
        Complex<Real> power = exp(-s * Complex<Real>(Real(log(Real(k + 1)))));
        Real weight = (d[k] - d[n]) / d[n];
        if (k % 2 == 1) {
            weight = -weight;
        }
        sum += power * weight;
    }
    return -sum;
}

/// (s - 1) / (1 - 2^{1-s}); finite at s = 1 where it tends to 1/ln 2.
template <class Real>
Complex<Real> eta_pole_factor(const Complex<Real>& s) {
    const Complex<Real> w = s - Complex<Real>(Real(1));
    const Real ln2 = ln2_v<Real>();
    // 1 - 2^{1-s} = -expm1(-w ln 2)
    const Complex<Real> denom = -expm1(-w * ln2);
    if (abs(w) == 0) {
        return Complex<Real>(Real(1) / ln2);
    }
    return w / denom;
}

/// Riemann zeta by eta with acceleration; functional equation for re s < 1/2.
template <class Real>
Complex<Real> zeta(const Complex<Real>& s, const PrecisionContext& ctx = {}) {
    const Complex<Real> one(Real(1));
    if (abs(s - one) < Real(ctx.abs_tol)) {
        throw PoleAtOne();
    }
    if (s.re < Real(0.5)) {
        // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
        const Real pi = pi_v<Real>();
        const Complex<Real> r = one - s;
        return pow(Real(2), s) * pow(pi, s - one) * sin(s * (pi / 2)) * gamma(r, ctx) * zeta(r, ctx);
    }
    const Complex<Real> w = s - one;
    return eta(s) * eta_pole_factor(s) / w;
}

}  // namespace xi_audit
