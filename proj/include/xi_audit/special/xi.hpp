#pragma once

#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/quadrature.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/special/gamma.hpp"
#include "xi_audit/special/zeta.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace xi_audit {

enum class XiMethod { product, fourier };

inline const char* to_string(XiMethod m) { return m == XiMethod::product ? "product" : "fourier"; }

/// ξ(s) = ½ s (s-1) π^{-s/2} Γ(s/2) ζ(s), entire; the pole of ζ is cancelled analytically.
template <class Real>
Complex<Real> xi_product(const Complex<Real>& s, const PrecisionContext& ctx = {}) {
    const Complex<Real> one(Real(1));
    if (s.re < Real(0.5)) {
        return xi_product(one - s, ctx);
    }
    const Real pi = pi_v<Real>();
    const Complex<Real> half_s = s * Real(0.5);
    return half_s * pow(pi, -half_s) * gamma(half_s, ctx) * eta(s) * eta_pole_factor(s);
}

/// Truncation of the theta series defining Φ.
struct PhiSeriesSpec {
    int n_max = 50;
    double x_cutoff = 12.0;
};

namespace detail {

/// log of a bound on Σ_{n>n_max} of the Φ series at x (the bound is decreasing in x).
inline double phi_log_tail_bound(double x, int n_max) {
    const double pi = pi_v<double>();
    const double m = n_max + 1.0;
    return std::log(8 * pi * pi) + 4.5 * x + 4 * std::log(m) - m * m * pi * std::exp(2 * x);
}

}  // namespace detail

inline void validate(const PhiSeriesSpec& spec, const PrecisionContext& ctx = {}) {
    if (spec.n_max < 1) {
        throw InvariantViolation("PhiSeriesSpec.n_max must be at least 1");
    }
    if (detail::phi_log_tail_bound(0.0, spec.n_max) >= std::log(ctx.abs_tol)) {
        throw InvariantViolation("PhiSeriesSpec.n_max leaves a series tail above abs_tol");
    }
}

/// Φ(x) = 2π e^{5x/2} Σ (2π e^{2x} n² - 3) n² e^{-n² π e^{2x}}, x >= 0.
template <class Real>
Real phi(const Real& x, const PhiSeriesSpec& spec = {}) {
    using std::abs;
    using std::exp;
    if (x < 0) {
        throw DomainError("phi requires x >= 0");
    }
    const Real pi = pi_v<Real>();
    const Real a = pi * exp(2 * x);
    Real sum = 0;
    for (int n = 1; n <= spec.n_max; ++n) {
        const Real n2 = Real(n) * n;
        const Real term = (2 * a * n2 - 3) * n2 * exp(-n2 * a);
        sum += term;
        if (term == 0 || abs(term) <= std::numeric_limits<Real>::epsilon() * abs(sum)) {
            break;
        }
    }
    return 2 * pi * exp(5 * x / 2) * sum;
}

/// log Φ(x), finite where Φ itself underflows; factors out the n = 1 exponential.
template <class Real>
Real log_phi(const Real& x, const PhiSeriesSpec& spec = {}) {
    using std::abs;
    using std::exp;
    using std::log;
    if (x < 0) {
        throw DomainError("log_phi requires x >= 0");
    }
    const Real pi = pi_v<Real>();
    const Real a = pi * exp(2 * x);
    Real sum = 0;
    for (int n = 1; n <= spec.n_max; ++n) {
        const Real n2 = Real(n) * n;
        const Real term = (2 * a * n2 - 3) * n2 * exp(-(n2 - 1) * a);
        sum += term;
        if (term == 0 || abs(term) <= std::numeric_limits<Real>::epsilon() * abs(sum)) {
            break;
        }
    }
    if (!(sum > 0)) {
        throw InvariantViolation("phi series bracket is not positive");
    }
    return log(2 * pi) + 5 * x / 2 - a + log(sum);
}

/// Quadrature settings tuned to the Φ kernel at the precision of Real.
template <class Real>
QuadratureSpec fourier_quadrature() {
    QuadratureSpec q;
    q.nodes_per_panel = 20;
    q.initial_panels = 24;
    q.max_panels = 4096;
    if constexpr (is_binary64_v<Real>) {
        q.target_abs = 1e-15;
        q.target_rel = 1e-13;
    } else {
        q.target_abs = 1e-45;
        q.target_rel = 1e-40;
    }
    return q;
}

/// log of a bound on 2∫_{cutoff}^∞ |cos(tx)| Φ(x) dx; +inf when the bound is unusable.
inline double xi_fourier_log_tail_bound(double abs_im_t, double cutoff) {
    const double pi = pi_v<double>();
    const double c = 4.5 + abs_im_t;
    const double kappa = 2 * pi * std::exp(2 * cutoff) - c;
    if (!(kappa > 0)) {
        return std::numeric_limits<double>::infinity();
    }
    return std::log(16 * pi * pi) + c * cutoff - pi * std::exp(2 * cutoff) - std::log(kappa);
}

/// Ξ(t) = 2∫₀^∞ cos(tx) Φ(x) dx truncated at spec.x_cutoff.
template <class Real>
Complex<Real> xi_fourier(const Complex<Real>& t, const PhiSeriesSpec& spec = {},
                         const QuadratureSpec& quad = fourier_quadrature<Real>(), const PrecisionContext& ctx = {}) {
    using std::abs;
    using std::cos;
    if (!(abs(t.im) < Real(0.5))) {
        throw DomainError("xi_fourier requires |Im t| < 1/2");
    }
    const double log_tail = xi_fourier_log_tail_bound(std::abs(to_double(t.im)), spec.x_cutoff);
    if (!(log_tail < std::log(ctx.abs_tol))) {
        throw TailBoundViolated("Fourier tail beyond x = " + format_double(spec.x_cutoff) + " is bounded only by e^" +
                                format_double(log_tail) + ", above abs_tol");
    }
    const Real cutoff(spec.x_cutoff);
    if (t.im == 0) {
        auto integrand = [&](const Real& x) { return Real(2 * cos(t.re * x) * phi(x, spec)); };
        return Complex<Real>(integrate(integrand, Real(0), cutoff, quad).value);
    }
    auto integrand = [&](const Real& x) { return cos(t * x) * Real(2 * phi(x, spec)); };
    return integrate(integrand, Real(0), cutoff, quad).value;
}

/// Ξ(t) = ξ(½ + it) by the chosen route.
template <class Real>
Complex<Real> xi_t(const Complex<Real>& t, XiMethod method, const PrecisionContext& ctx = {}) {
    if (method == XiMethod::product) {
        return xi_product(Complex<Real>(Real(0.5) - t.im, t.re), ctx);
    }
    return xi_fourier(t, PhiSeriesSpec{}, fourier_quadrature<Real>(), ctx);
}

}  // namespace xi_audit
