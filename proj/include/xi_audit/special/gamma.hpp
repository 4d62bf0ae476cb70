#pragma once

#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/real.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <vector>

namespace xi_audit {

namespace detail {

/// B_2, B_4, ..., B_{2m} as exact rationals (Akiyama–Tanigawa), converted to Real.
template <class Real>
const std::vector<Real>& even_bernoulli(int m) {
    static const std::vector<Real> table = [] {
        using boost::multiprecision::cpp_rational;
        constexpr int count = 40;
        const int n_max = 2 * count;
        std::vector<cpp_rational> a(n_max + 1);
        std::vector<cpp_rational> b(n_max + 1);
        for (int n = 0; n <= n_max; ++n) {
            a[n] = cpp_rational(1, n + 1);
            for (int j = n; j >= 1; --j) {
                a[j - 1] = j * (a[j - 1] - a[j]);
            }
            b[n] = a[0];
        }
        std::vector<Real> out;
        for (int k = 1; k <= count; ++k) {
            const cpp_rational& q = b[2 * k];
            out.push_back(Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q)));
        }
        return out;
    }();
    (void)m;
    return table;
}

/// log Γ(z) by the Stirling series; requires re z large enough for the truncation used.
template <class Real>
Complex<Real> log_gamma_stirling(const Complex<Real>& z, int terms) {
    using std::log;
    const auto& bern = even_bernoulli<Real>(terms);
    const Real half_log_two_pi = log(2 * pi_v<Real>()) / 2;
    Complex<Real> result = (z - Complex<Real>(Real(0.5))) * log(z) - z + Complex<Real>(half_log_two_pi);
    const Complex<Real> inv = Complex<Real>(Real(1)) / z;
    const Complex<Real> inv2 = inv * inv;
    Complex<Real> power = inv;
    for (int k = 1; k <= terms; ++k) {
        result += power * (bern[k - 1] / Real((2 * k) * (2 * k - 1)));
        power *= inv2;
    }
    return result;
}

template <class Real>
Complex<Real> gamma_right_half_plane(const Complex<Real>& z) {
    if constexpr (is_binary64_v<Real>) {
        // Lanczos, g = 7, nine coefficients.
        static constexpr std::array<double, 9> c = {
            0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
            771.32342877765313,   -176.61502916214059,   12.507343278686905,
            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
        const Complex<double> zm1 = z - Complex<double>(1.0);
        Complex<double> x(c[0]);
        for (int i = 1; i < 9; ++i) {
            x += Complex<double>(c[i]) / (zm1 + Complex<double>(double(i)));
        }
        const Complex<double> t = zm1 + Complex<double>(7.5);
        const double sqrt_two_pi = std::sqrt(2 * pi_v<double>());
        return exp((zm1 + Complex<double>(0.5)) * log(t) - t) * x * sqrt_two_pi;
    } else {
        // Shift to re z >= 40 and use 30 Stirling terms: truncation below 1e-60.
        constexpr int shift_target = 40;
        constexpr int terms = 30;
        Complex<Real> w = z;
        Complex<Real> product(Real(1));
        while (w.re < shift_target) {
            product *= w;
            w += Complex<Real>(Real(1));
        }
        return exp(log_gamma_stirling(w, terms)) / product;
    }
}

}  // namespace detail

/// Γ(s) with reflection for re s < 1/2.
template <class Real>
Complex<Real> gamma(const Complex<Real>& s, const PrecisionContext& ctx = {}) {
    using std::abs;
    using std::round;
    if (s.re <= Real(0.5)) {
        const Real nearest = round(s.re);
        if (nearest <= 0 && abs(s.re - nearest) < Real(ctx.abs_tol) && abs(s.im) < Real(ctx.abs_tol)) {
            throw PoleAtNonPositiveInteger(static_cast<long>(to_double(nearest)));
        }
    }
    if (s.re < Real(0.5)) {
        const Real pi = pi_v<Real>();
        const Complex<Real> one(Real(1));
        return Complex<Real>(pi) / (sin(s * pi) * detail::gamma_right_half_plane(one - s));
    }
    return detail::gamma_right_half_plane(s);
}

}  // namespace xi_audit
