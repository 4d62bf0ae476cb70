#pragma once

#include "xi_audit/core/error.hpp"
#include "xi_audit/core/real.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xi_audit::symbolic {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class Var : int { t1 = 0, t2, alpha, sigma, b, inv_eps };
inline constexpr int var_count = 6;

inline const char* var_name(Var v) {
    static constexpr std::array<const char*, var_count> names = {"t1", "t2", "alpha", "sigma", "b", "inv_eps"};
    return names[static_cast<int>(v)];
}

/// Exponent vector; negative entries allowed (Laurent monomials).
struct Monomial {
    std::array<int, var_count> e{};

    int& operator[](Var v) { return e[static_cast<int>(v)]; }
    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    auto operator<=>(const Monomial&) const = default;

    friend Monomial operator*(Monomial a, const Monomial& b) {
        for (int k = 0; k < var_count; ++k) {
            a.e[k] += b.e[k];
        }
        return a;
    }
    friend Monomial operator/(Monomial a, const Monomial& b) {
        for (int k = 0; k < var_count; ++k) {
            a.e[k] -= b.e[k];
        }
        return a;
    }
};

template <class Real>
Real to_real(const Rational& q) {
    if constexpr (is_binary64_v<Real>) {
        return q.convert_to<double>();
    } else {
        return Real(boost::multiprecision::numerator(q).str()) / Real(boost::multiprecision::denominator(q).str());
    }
}

/// Values of the six symbols used for numeric specialization.
template <class Real>
struct Env {
    std::array<Real, var_count> values{};
    Real& operator[](Var v) { return values[static_cast<int>(v)]; }
    const Real& operator[](Var v) const { return values[static_cast<int>(v)]; }
};

/// Sparse multivariate polynomial with exact rational coefficients; no zero coefficient is stored.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(const Rational& c) {  // NOLINT: constants embed implicitly
        if (c != 0) {
            terms_.emplace(Monomial{}, c);
        }
    }
    RationalPoly(long c) : RationalPoly(Rational(c)) {}  // NOLINT
    RationalPoly(int c) : RationalPoly(Rational(c)) {}   // NOLINT

    static RationalPoly monomial(const Monomial& m, const Rational& c = 1) {
        RationalPoly p;
        if (c != 0) {
            p.terms_.emplace(m, c);
        }
        return p;
    }

    static RationalPoly var(Var v, int power = 1) {
        Monomial m;
        m[v] = power;
        return monomial(m);
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    RationalPoly& operator+=(const RationalPoly& o) {
        for (const auto& [m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    RationalPoly& operator-=(const RationalPoly& o) {
        for (const auto& [m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }
    RationalPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator-(RationalPoly a) {
        for (auto& [m, c] : a.terms_) {
            c = -c;
        }
        return a;
    }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        RationalPoly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.terms_ == b.terms_; }

    RationalPoly pow(unsigned n) const {
        RationalPoly r(1);
        for (unsigned k = 0; k < n; ++k) {
            r = r * *this;
        }
        return r;
    }

    /// Multiplies by v^k (k may be negative).
    RationalPoly shift(Var v, int k) const {
        Monomial m;
        m[v] = k;
        RationalPoly r;
        for (const auto& [mono, c] : terms_) {
            r.terms_.emplace(mono * m, c);
        }
        return r;
    }

    /// Divides by a single-term polynomial; the divisor must be a monomial.
    RationalPoly divide_by_monomial(const RationalPoly& d) const {
        auto mono = d.as_monomial();
        if (!mono) {
            throw DomainError("divide_by_monomial needs a single-term divisor");
        }
        RationalPoly r;
        for (const auto& [m, c] : terms_) {
            r.terms_.emplace(m / mono->first, c / mono->second);
        }
        return r;
    }

    std::optional<std::pair<Monomial, Rational>> as_monomial() const {
        if (terms_.size() != 1) {
            return std::nullopt;
        }
        return *terms_.begin();
    }

    int min_degree(Var v) const {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            d = first ? m[v] : std::min(d, m[v]);
            first = false;
        }
        return d;
    }

    int max_degree(Var v) const {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            d = first ? m[v] : std::max(d, m[v]);
            first = false;
        }
        return d;
    }

    bool depends_on(Var v) const {
        for (const auto& [m, c] : terms_) {
            if (m[v] != 0) {
                return true;
            }
        }
        return false;
    }

    /// Coefficient polynomials (free of v) keyed by the power of v.
    std::map<int, RationalPoly> collect(Var v) const {
        std::map<int, RationalPoly> out;
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            rest[v] = 0;
            out[m[v]].add_term(rest, c);
        }
        return out;
    }

    /// Replaces v by r; negative powers of v require r to be a monomial.
    RationalPoly substitute(Var v, const RationalPoly& r) const {
        RationalPoly out;
        auto mono = r.as_monomial();
        std::map<int, RationalPoly> powers;
        for (const auto& [m, c] : terms_) {
            const int k = m[v];
            Monomial rest = m;
            rest[v] = 0;
            RationalPoly base = RationalPoly::monomial(rest, c);
            if (k == 0) {
                out += base;
                continue;
            }
            if (k < 0 && !mono) {
                throw DomainError(std::string("cannot substitute a polynomial for a negative power of ") + var_name(v));
            }
            auto it = powers.find(k);
            if (it == powers.end()) {
                RationalPoly pk;
                if (mono) {
                    Monomial pm;
                    for (int j = 0; j < var_count; ++j) {
                        pm.e[j] = mono->first.e[j] * k;
                    }
                    pk = RationalPoly::monomial(pm, rational_pow(mono->second, k));
                } else {
                    pk = r.pow(static_cast<unsigned>(k));
                }
                it = powers.emplace(k, std::move(pk)).first;
            }
            out += base * it->second;
        }
        return out;
    }

    Rational evaluate_exact(const std::array<Rational, var_count>& values) const {
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (int j = 0; j < var_count; ++j) {
                if (m.e[j] != 0) {
                    term *= rational_pow(values[j], m.e[j]);
                }
            }
            sum += term;
        }
        return sum;
    }

    template <class Real>
    Real evaluate(const Env<Real>& env) const {
        Real sum = 0;
        for (const auto& [m, c] : terms_) {
            Real term = to_real<Real>(c);
            for (int j = 0; j < var_count; ++j) {
                const int k = m.e[j];
                for (int i = 0; i < std::abs(k); ++i) {
                    term = k > 0 ? Real(term * env.values[j]) : Real(term / env.values[j]);
                }
            }
            sum += term;
        }
        return sum;
    }

    /// Sum of the magnitudes of the evaluated terms; the cancellation-free scale of evaluate().
    template <class Real>
    Real evaluate_abs(const Env<Real>& env) const {
        using std::abs;
        Real sum = 0;
        for (const auto& [m, c] : terms_) {
            Real term = to_real<Real>(c);
            for (int j = 0; j < var_count; ++j) {
                const int k = m.e[j];
                for (int i = 0; i < std::abs(k); ++i) {
                    term = k > 0 ? Real(term * env.values[j]) : Real(term / env.values[j]);
                }
            }
            sum += abs(term);
        }
        return sum;
    }

    /// Terms in descending exponent order, e.g. "-7*alpha^4 + 10*alpha^2 + 1".
    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                s += c < 0 ? "-" : "";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (int j = 0; j < var_count; ++j) {
                if (m.e[j] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += var_name(static_cast<Var>(j));
                if (m.e[j] != 1) {
                    mono += "^" + std::to_string(m.e[j]);
                }
            }
            if (mono.empty()) {
                s += mag.str();
            } else if (mag == 1) {
                s += mono;
            } else {
                s += mag.str() + "*" + mono;
            }
        }
        return s;
    }

    static Rational rational_pow(const Rational& base, int k) {
        Rational r = 1;
        const int n = k < 0 ? -k : k;
        for (int i = 0; i < n; ++i) {
            r *= base;
        }
        return k < 0 ? Rational(1 / r) : r;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    std::map<Monomial, Rational> terms_;
};

inline RationalPoly var(Var v, int power = 1) { return RationalPoly::var(v, power); }

/// Dense univariate view in v; requires non-negative powers and no other symbol.
inline std::vector<Rational> dense_coefficients(const RationalPoly& p, Var v) {
    std::vector<Rational> out;
    for (const auto& [m, c] : p.terms()) {
        for (int j = 0; j < var_count; ++j) {
            if (j != static_cast<int>(v) && m.e[j] != 0) {
                throw DomainError(std::string("polynomial is not univariate in ") + var_name(v));
            }
        }
        if (m[v] < 0) {
            throw DomainError("dense_coefficients needs non-negative powers");
        }
        if (static_cast<int>(out.size()) <= m[v]) {
            out.resize(m[v] + 1);
        }
        out[m[v]] = c;
    }
    return out;
}

inline RationalPoly from_dense(const std::vector<Rational>& coeffs, Var v) {
    RationalPoly p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] != 0) {
            Monomial m;
            m[v] = static_cast<int>(k);
            p += RationalPoly::monomial(m, coeffs[k]);
        }
    }
    return p;
}

/// Exact univariate division; nullopt when the remainder is nonzero.
inline std::optional<RationalPoly> divide_exact(const RationalPoly& num, const RationalPoly& den, Var v) {
    auto n = dense_coefficients(num, v);
    const auto d = dense_coefficients(den, v);
    if (d.empty()) {
        throw DomainError("division by the zero polynomial");
    }
    if (n.size() < d.size()) {
        return num.is_zero() ? std::optional<RationalPoly>(RationalPoly()) : std::nullopt;
    }
    std::vector<Rational> q(n.size() - d.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Rational c = n[k + d.size() - 1] / d.back();
        q[k] = c;
        for (std::size_t j = 0; j < d.size(); ++j) {
            n[k + j] -= c * d[j];
        }
    }
    for (const auto& r : n) {
        if (r != 0) {
            return std::nullopt;
        }
    }
    return from_dense(q, v);
}

/// content * Π factor^power * cofactor with content > 0 and an integer, primitive cofactor.
struct FactoredPoly {
    Rational content = 1;
    std::vector<std::pair<RationalPoly, int>> factors;
    RationalPoly cofactor;

    RationalPoly expand() const {
        RationalPoly r(content);
        for (const auto& [f, k] : factors) {
            r = r * f.pow(static_cast<unsigned>(k));
        }
        return r * cofactor;
    }

    std::string to_string() const {
        std::string s = content == 1 ? "" : content.str();
        auto append = [&](const std::string& piece) {
            if (!s.empty()) {
                s += "*";
            }
            s += piece;
        };
        for (const auto& [f, k] : factors) {
            const bool single = f.size() == 1;
            std::string base = single ? f.to_string() : "(" + f.to_string() + ")";
            append(k == 1 ? base : base + "^" + std::to_string(k));
        }
        if (!(cofactor == RationalPoly(1))) {
            append(cofactor.size() == 1 ? cofactor.to_string() : "(" + cofactor.to_string() + ")");
        }
        return s.empty() ? "1" : s;
    }
};

/// Pulls out the rational content, powers of v, and powers of each trial factor.
inline FactoredPoly factor_univariate(const RationalPoly& p, Var v, const std::vector<RationalPoly>& trial) {
    FactoredPoly out;
    if (p.is_zero()) {
        out.content = 0;
        out.cofactor = RationalPoly();
        return out;
    }
    // Content: gcd of numerators over lcm of denominators, taken positive.
    Integer g = 0;
    Integer l = 1;
    for (const auto& [m, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::abs(boost::multiprecision::numerator(c))));
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(c)));
    }
    out.content = Rational(g, l);
    RationalPoly rest = p;
    rest *= Rational(1 / out.content);
    const int low = rest.min_degree(v);
    if (low > 0) {
        out.factors.emplace_back(var(v), low);
        rest = rest.shift(v, -low);
    }
    for (const auto& f : trial) {
        int k = 0;
        while (rest.max_degree(v) >= f.max_degree(v)) {
            auto q = divide_exact(rest, f, v);
            if (!q) {
                break;
            }
            rest = *q;
            ++k;
        }
        if (k > 0) {
            out.factors.emplace_back(f, k);
        }
    }
    out.cofactor = rest;
    return out;
}

}  // namespace xi_audit::symbolic
