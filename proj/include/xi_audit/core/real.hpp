#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

namespace xi_audit {

/// 50-digit decimal floating point; expression templates off so `auto` is safe.
using Extended = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>,
                                               boost::multiprecision::et_off>;

template <class Real>
inline constexpr bool is_binary64_v = std::is_same_v<Real, double>;

template <class Real>
inline Real pi_v() {
    return boost::math::constants::pi<Real>();
}

template <class Real>
inline Real ln2_v() {
    return boost::math::constants::ln_two<Real>();
}

/// Decimal digits carried by Real; drives series lengths and stopping rules.
template <class Real>
inline int digits10_v() {
    return std::numeric_limits<Real>::digits10;
}

template <class Real>
inline double to_double(const Real& x) {
    if constexpr (is_binary64_v<Real>) {
        return x;
    } else {
        return x.template convert_to<double>();
    }
}

template <class Real>
inline Real from_double(double x) {
    return Real(x);
}

/// Exact-decimal parse for extended values so "0.1" means 1/10, not its binary64 neighbour.
template <class Real>
inline Real from_string(const std::string& s) {
    if constexpr (is_binary64_v<Real>) {
        return std::stod(s);
    } else {
        return Real(s);
    }
}

template <class Real>
inline bool is_finite(const Real& x) {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(x);
}

template <class Real>
inline int sign_of(const Real& x) {
    return (x > 0) - (x < 0);
}

/// exp(x) - 1 without cancellation for small |x|.
template <class Real>
inline Real expm1_real(const Real& x) {
    using std::abs;
    using std::exp;
    if (abs(x) >= Real(0.5)) {
        return exp(x) - 1;
    }
    Real term = x;
    Real sum = x;
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (int k = 2; k < 200; ++k) {
        term *= x / k;
        sum += term;
        if (abs(term) <= eps * abs(sum)) {
            break;
        }
    }
    return sum;
}

/// Shortest round-trip decimal for a binary64 value; "nan"/"inf" spelled out.
inline std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

/// Scientific notation with a fixed number of significant digits.
template <class Real>
inline std::string format_significant(const Real& x, int digits = 17) {
    if constexpr (is_binary64_v<Real>) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, digits - 1);
        return std::string(buf, res.ptr);
    } else {
        return x.str(digits, std::ios_base::scientific);
    }
}

}  // namespace xi_audit
