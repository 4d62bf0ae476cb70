#pragma once

#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/real.hpp"

#include <cmath>
#include <string>

namespace xi_audit {

/// Rectangular complex number over any Real that supports the usual math functions.
template <class Real>
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real embedding
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) {
        re *= s;
        im *= s;
        return *this;
    }
    Complex& operator/=(const Real& s) {
        re /= s;
        im /= s;
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        // Smith's algorithm keeps intermediate magnitudes bounded.
        using std::abs;
        if (abs(o.re) >= abs(o.im)) {
            Real r = o.im / o.re;
            Real d = o.re + o.im * r;
            Real nr = (re + im * r) / d;
            im = (im - re * r) / d;
            re = std::move(nr);
        } else {
            Real r = o.re / o.im;
            Real d = o.re * r + o.im;
            Real nr = (re * r + im) / d;
            im = (im * r - re) / d;
            re = std::move(nr);
        }
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(Complex a, const Real& s) { return a *= s; }
    friend Complex operator*(const Real& s, Complex a) { return a *= s; }
    friend Complex operator/(Complex a, const Real& s) { return a /= s; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class Real>
inline Complex<Real> conj(const Complex<Real>& z) {
    return {z.re, -z.im};
}

template <class Real>
inline Real abs(const Complex<Real>& z) {
    using std::hypot;
    using boost::multiprecision::hypot;
    return hypot(z.re, z.im);
}

template <class Real>
inline Real norm(const Complex<Real>& z) {
    return z.re * z.re + z.im * z.im;
}

template <class Real>
inline Real arg(const Complex<Real>& z) {
    using std::atan2;
    return atan2(z.im, z.re);
}

template <class Real>
inline Complex<Real> i_times(const Complex<Real>& z) {
    return {-z.im, z.re};
}

template <class Real>
inline Complex<Real> exp(const Complex<Real>& z) {
    using std::cos;
    using std::exp;
    using std::sin;
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

/// e^z - 1, accurate when |z| is small.
template <class Real>
inline Complex<Real> expm1(const Complex<Real>& z) {
    using std::cos;
    using std::exp;
    using std::sin;
    Real half_sin = sin(z.im / 2);
    return {expm1_real(z.re) * cos(z.im) - 2 * half_sin * half_sin, exp(z.re) * sin(z.im)};
}

template <class Real>
inline Complex<Real> log(const Complex<Real>& z) {
    using std::log;
    return {log(abs(z)), arg(z)};
}

/// Principal branch; base must be nonzero.
template <class Real>
inline Complex<Real> pow(const Complex<Real>& base, const Complex<Real>& e) {
    return exp(e * log(base));
}

/// Positive real base raised to a complex power.
template <class Real>
inline Complex<Real> pow(const Real& base, const Complex<Real>& e) {
    using std::log;
    return exp(e * log(base));
}

template <class Real>
inline Complex<Real> sin(const Complex<Real>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class Real>
inline Complex<Real> cos(const Complex<Real>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

/// sh(x + iy) = sh x cos y + i ch x sin y.
template <class Real>
inline Complex<Real> sinh(const Complex<Real>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}

/// ch(x + iy) = ch x cos y + i sh x sin y.
template <class Real>
inline Complex<Real> cosh(const Complex<Real>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}

template <class Real>
inline bool is_finite(const Complex<Real>& z) {
    return is_finite(z.re) && is_finite(z.im);
}

template <class Real>
inline std::string to_string(const Complex<Real>& z, int digits = 17) {
    std::string s = format_significant(z.re, digits);
    s += (z.im < 0) ? " - " : " + ";
    using std::abs;
    s += format_significant(Real(abs(z.im)), digits);
    s += "i";
    return s;
}

/// value = mantissa * e^{log_scale}; log_scale is zero when the value is representable.
template <class Real>
struct ScaledComplex {
    Complex<Real> mantissa;
    Real log_scale{0};

    bool scaled() const { return log_scale != 0; }

    /// Materializes the value; may overflow to infinity when scaled.
    Complex<Real> value() const {
        using std::exp;
        if (!scaled()) {
            return mantissa;
        }
        return mantissa * Real(exp(log_scale));
    }
};

enum class HypKind { sh, ch };

/// sh or ch of a complex argument in the expansion form, scaled by e^{|re z|} past the overflow threshold.
template <class Real>
inline ScaledComplex<Real> complex_hyp_trig(HypKind kind, const Complex<Real>& z,
                                            const PrecisionContext& ctx = {}) {
    using std::abs;
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;
    const Real x = z.re;
    const Real ax = abs(x);
    if (ax <= Real(std::log(ctx.overflow_threshold))) {
        return {kind == HypKind::sh ? sinh(z) : cosh(z), Real(0)};
    }
    // sh x = sgn(x) e^{|x|} (1 - e^{-2|x|}) / 2, ch x = e^{|x|} (1 + e^{-2|x|}) / 2.
    const Real decay = exp(-2 * ax);
    const Real sgn = x < 0 ? Real(-1) : Real(1);
    const Real sh_m = sgn * (1 - decay) / 2;
    const Real ch_m = (1 + decay) / 2;
    const Real c = cos(z.im);
    const Real s = sin(z.im);
    Complex<Real> m = kind == HypKind::sh ? Complex<Real>(sh_m * c, ch_m * s) : Complex<Real>(ch_m * c, sh_m * s);
    return {m, ax};
}

}  // namespace xi_audit
