#pragma once

#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/error.hpp"
#include "xi_audit/symbolic/rational_poly.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xi_audit::symbolic {

enum class Hyp : int { one = 0, sh, ch };
enum class Trig : int { one = 0, sin, cos };

/// How the canonical hyperbolic argument H and trigonometric argument T are read.
enum class ArgForm {
    t1_t2,       ///< H = t1 b/2, T = t2 b/2
    alpha_t2,    ///< H = alpha t2 b/2, T = t2 b/2
    alpha_sigma  ///< H = alpha sigma, T = sigma
};

inline const char* to_string(ArgForm f) {
    switch (f) {
        case ArgForm::t1_t2: return "t1,t2";
        case ArgForm::alpha_t2: return "alpha,t2";
        case ArgForm::alpha_sigma: return "alpha,sigma";
    }
    return "?";
}

/// hyp(hyp_mult * H) * trig(trig_mult * T); `one` factors carry multiplier 0.
struct BasisKey {
    Hyp hyp = Hyp::one;
    int hyp_mult = 0;
    Trig trig = Trig::one;
    int trig_mult = 0;
    auto operator<=>(const BasisKey&) const = default;

    std::string to_string(ArgForm form) const {
        const char* h_arg = form == ArgForm::t1_t2 ? "t1*b/2" : form == ArgForm::alpha_t2 ? "alpha*t2*b/2" : "alpha*sigma";
        const char* t_arg = form == ArgForm::alpha_sigma ? "sigma" : "t2*b/2";
        auto scaled = [](int k, const char* a) { return k == 1 ? std::string(a) : std::to_string(k) + "*" + a; };
        std::string s;
        if (hyp != Hyp::one) {
            s += (hyp == Hyp::sh ? "sh(" : "ch(") + scaled(hyp_mult, h_arg) + ")";
        }
        if (trig != Trig::one) {
            if (!s.empty()) {
                s += "*";
            }
            s += (trig == Trig::sin ? "sin(" : "cos(") + scaled(trig_mult, t_arg) + ")";
        }
        return s.empty() ? "1" : s;
    }
};

namespace detail {

struct SignedHyp {
    int sign;  // 0 means the factor vanishes
    Hyp hyp;
    int mult;
};

inline SignedHyp canonical_hyp(Hyp h, int k) {
    if (h == Hyp::one) return {1, Hyp::one, 0};
    if (k == 0) return h == Hyp::sh ? SignedHyp{0, Hyp::one, 0} : SignedHyp{1, Hyp::one, 0};
    if (k < 0) return h == Hyp::sh ? SignedHyp{-1, Hyp::sh, -k} : SignedHyp{1, Hyp::ch, -k};
    return {1, h, k};
}

struct SignedTrig {
    int sign;
    Trig trig;
    int mult;
};

inline SignedTrig canonical_trig(Trig t, int k) {
    if (t == Trig::one) return {1, Trig::one, 0};
    if (k == 0) return t == Trig::sin ? SignedTrig{0, Trig::one, 0} : SignedTrig{1, Trig::one, 0};
    if (k < 0) return t == Trig::sin ? SignedTrig{-1, Trig::sin, -k} : SignedTrig{1, Trig::cos, -k};
    return {1, t, k};
}

/// Product-to-sum for the hyperbolic factor: list of (coefficient, hyp, mult).
inline std::vector<std::pair<Rational, SignedHyp>> multiply_hyp(Hyp a, int ka, Hyp b, int kb) {
    const Rational half(1, 2);
    if (a == Hyp::one) return {{Rational(1), canonical_hyp(b, kb)}};
    if (b == Hyp::one) return {{Rational(1), canonical_hyp(a, ka)}};
    if (a == Hyp::sh && b == Hyp::sh) return {{half, canonical_hyp(Hyp::ch, ka + kb)}, {-half, canonical_hyp(Hyp::ch, ka - kb)}};
    if (a == Hyp::ch && b == Hyp::ch) return {{half, canonical_hyp(Hyp::ch, ka + kb)}, {half, canonical_hyp(Hyp::ch, ka - kb)}};
    if (a == Hyp::sh) return {{half, canonical_hyp(Hyp::sh, ka + kb)}, {half, canonical_hyp(Hyp::sh, ka - kb)}};
    return {{half, canonical_hyp(Hyp::sh, ka + kb)}, {-half, canonical_hyp(Hyp::sh, ka - kb)}};
}

inline std::vector<std::pair<Rational, SignedTrig>> multiply_trig(Trig a, int ka, Trig b, int kb) {
    const Rational half(1, 2);
    if (a == Trig::one) return {{Rational(1), canonical_trig(b, kb)}};
    if (b == Trig::one) return {{Rational(1), canonical_trig(a, ka)}};
    if (a == Trig::sin && b == Trig::sin) return {{half, canonical_trig(Trig::cos, ka - kb)}, {-half, canonical_trig(Trig::cos, ka + kb)}};
    if (a == Trig::cos && b == Trig::cos) return {{half, canonical_trig(Trig::cos, ka - kb)}, {half, canonical_trig(Trig::cos, ka + kb)}};
    if (a == Trig::sin) return {{half, canonical_trig(Trig::sin, ka + kb)}, {half, canonical_trig(Trig::sin, ka - kb)}};
    return {{half, canonical_trig(Trig::sin, ka + kb)}, {-half, canonical_trig(Trig::sin, ka - kb)}};
}

}  // namespace detail

/// One coefficient that differs between two expressions, each over its own denominator.
struct CoefficientDiff {
    std::string basis;
    std::string derived;
    std::string printed;
    std::string difference;  ///< derived - printed over the common denominator
};

/// Σ_k coefficient_k * basis_k / denominator with exact polynomial coefficients.
class TrigHypExpr {
public:
    TrigHypExpr() = default;
    explicit TrigHypExpr(ArgForm form) : form_(form) {}

    static TrigHypExpr scalar(const RationalPoly& c, ArgForm form) {
        TrigHypExpr e(form);
        e.add(BasisKey{}, c);
        return e;
    }

    /// hyp(kh H) trig(kt T), canonicalized (odd factors absorb the sign, sh(0) and sin(0) vanish).
    static TrigHypExpr basis(Hyp h, int kh, Trig t, int kt, ArgForm form) {
        TrigHypExpr e(form);
        const auto ch = detail::canonical_hyp(h, kh);
        const auto ct = detail::canonical_trig(t, kt);
        const int sign = ch.sign * ct.sign;
        if (sign != 0) {
            e.add(BasisKey{ch.hyp, ch.mult, ct.trig, ct.mult}, RationalPoly(sign));
        }
        return e;
    }

    ArgForm form() const { return form_; }
    const RationalPoly& denominator() const { return den_; }
    const std::map<BasisKey, RationalPoly>& numerators() const { return num_; }
    bool is_zero() const { return num_.empty(); }

    RationalPoly coefficient(const BasisKey& k) const {
        auto it = num_.find(k);
        return it == num_.end() ? RationalPoly() : it->second;
    }

    TrigHypExpr& operator+=(const TrigHypExpr& o) {
        require_same_form(o);
        if (den_ == o.den_) {
            for (const auto& [k, c] : o.num_) {
                add(k, c);
            }
            return *this;
        }
        std::map<BasisKey, RationalPoly> old;
        old.swap(num_);
        for (const auto& [k, c] : old) {
            add(k, c * o.den_);
        }
        for (const auto& [k, c] : o.num_) {
            add(k, c * den_);
        }
        den_ = den_ * o.den_;
        return *this;
    }

    friend TrigHypExpr operator+(TrigHypExpr a, const TrigHypExpr& b) { return a += b; }
    friend TrigHypExpr operator-(const TrigHypExpr& a) {
        TrigHypExpr r = a;
        for (auto& [k, c] : r.num_) {
            c = -c;
        }
        return r;
    }
    friend TrigHypExpr operator-(TrigHypExpr a, const TrigHypExpr& b) { return a += -b; }

    friend TrigHypExpr operator*(TrigHypExpr a, const RationalPoly& s) {
        std::map<BasisKey, RationalPoly> old;
        old.swap(a.num_);
        for (const auto& [k, c] : old) {
            a.add(k, c * s);
        }
        return a;
    }
    friend TrigHypExpr operator*(const RationalPoly& s, TrigHypExpr a) { return std::move(a) * s; }

    friend TrigHypExpr operator*(const TrigHypExpr& a, const TrigHypExpr& b) {
        a.require_same_form(b);
        TrigHypExpr r(a.form_);
        r.den_ = a.den_ * b.den_;
        for (const auto& [ka, ca] : a.num_) {
            for (const auto& [kb, cb] : b.num_) {
                const RationalPoly c = ca * cb;
                for (const auto& [qh, h] : detail::multiply_hyp(ka.hyp, ka.hyp_mult, kb.hyp, kb.hyp_mult)) {
                    for (const auto& [qt, t] : detail::multiply_trig(ka.trig, ka.trig_mult, kb.trig, kb.trig_mult)) {
                        const int sign = h.sign * t.sign;
                        if (sign == 0) {
                            continue;
                        }
                        RationalPoly term = c;
                        term *= qh * qt * sign;
                        r.add(BasisKey{h.hyp, h.mult, t.trig, t.mult}, term);
                    }
                }
            }
        }
        return r;
    }

    /// Divides the whole expression by d.
    TrigHypExpr divided_by(const RationalPoly& d) const {
        TrigHypExpr r = *this;
        r.den_ = r.den_ * d;
        return r;
    }

    /// Rewrites over `target` when the current denominator is a monomial multiple of it.
    TrigHypExpr with_denominator(const RationalPoly& target) const {
        if (den_ == target) {
            return *this;
        }
        // den_ = m * target for a monomial m: compare leading terms, then verify exactly.
        const auto& [dm, dc] = *den_.terms().rbegin();
        const auto& [tm, tc] = *target.terms().rbegin();
        const RationalPoly m = RationalPoly::monomial(dm / tm, dc / tc);
        if (!(m * target == den_)) {
            throw DomainError("denominator is not a monomial multiple of the requested one");
        }
        TrigHypExpr r(form_);
        r.den_ = target;
        for (const auto& [k, c] : num_) {
            r.add(k, c.divide_by_monomial(m));
        }
        return r;
    }

    /// Substitutes v -> value in every coefficient and the denominator, relabelling the argument form.
    TrigHypExpr substitute(Var v, const RationalPoly& value, ArgForm new_form) const {
        TrigHypExpr r(new_form);
        r.den_ = den_.substitute(v, value);
        for (const auto& [k, c] : num_) {
            r.add(k, c.substitute(v, value));
        }
        return r;
    }

    /// Sets the trigonometric argument T to 0: sin terms drop, cos becomes 1.
    TrigHypExpr with_zero_trig_argument() const {
        TrigHypExpr r(form_);
        r.den_ = den_;
        for (const auto& [k, c] : num_) {
            if (k.trig == Trig::sin) {
                continue;
            }
            r.add(BasisKey{k.hyp, k.hyp_mult, Trig::one, 0}, c);
        }
        return r;
    }

    /// Exact equality as rational functions of the basis (cross-multiplied per basis key).
    bool equivalent(const TrigHypExpr& o) const { return diff(o).empty(); }

    std::vector<CoefficientDiff> diff(const TrigHypExpr& printed) const {
        std::vector<CoefficientDiff> out;
        if (form_ != printed.form_) {
            out.push_back({"argument form", symbolic::to_string(form_), symbolic::to_string(printed.form_), "forms differ"});
            return out;
        }
        std::map<BasisKey, bool> keys;
        for (const auto& [k, c] : num_) keys[k] = true;
        for (const auto& [k, c] : printed.num_) keys[k] = true;
        for (const auto& [k, unused] : keys) {
            const RationalPoly a = coefficient(k);
            const RationalPoly b = printed.coefficient(k);
            const RationalPoly delta = a * printed.den_ - b * den_;
            if (!delta.is_zero()) {
                out.push_back({k.to_string(form_), "(" + a.to_string() + ")/(" + den_.to_string() + ")",
                               "(" + b.to_string() + ")/(" + printed.den_.to_string() + ")",
                               "(" + delta.to_string() + ")/(" + (den_ * printed.den_).to_string() + ")"});
            }
        }
        return out;
    }

    /// Canonical H and T for this expression's argument form.
    template <class Real>
    std::pair<Real, Real> arguments(const Env<Real>& env) const {
        switch (form_) {
            case ArgForm::t1_t2: return {env[Var::t1] * env[Var::b] / 2, env[Var::t2] * env[Var::b] / 2};
            case ArgForm::alpha_t2:
                return {env[Var::alpha] * env[Var::t2] * env[Var::b] / 2, env[Var::t2] * env[Var::b] / 2};
            case ArgForm::alpha_sigma: return {env[Var::alpha] * env[Var::sigma], env[Var::sigma]};
        }
        return {Real(0), Real(0)};
    }

    template <class Real>
    static Real basis_value(const BasisKey& k, const Real& H, const Real& T) {
        using std::cos;
        using std::cosh;
        using std::sin;
        using std::sinh;
        Real h = 1;
        if (k.hyp == Hyp::sh) h = sinh(H * k.hyp_mult);
        if (k.hyp == Hyp::ch) h = cosh(H * k.hyp_mult);
        Real t = 1;
        if (k.trig == Trig::sin) t = sin(T * k.trig_mult);
        if (k.trig == Trig::cos) t = cos(T * k.trig_mult);
        return h * t;
    }

    template <class Real>
    Real evaluate(const Env<Real>& env) const {
        const auto [H, T] = arguments(env);
        Real sum = 0;
        for (const auto& [k, c] : num_) {
            sum += c.evaluate(env) * basis_value(k, H, T);
        }
        return sum / den_.evaluate(env);
    }

    /// Σ |coefficient| * |basis| / |denominator|: the cancellation-free magnitude of evaluate().
    template <class Real>
    Real evaluate_abs(const Env<Real>& env) const {
        using std::abs;
        const auto [H, T] = arguments(env);
        Real sum = 0;
        for (const auto& [k, c] : num_) {
            sum += c.evaluate_abs(env) * abs(basis_value(k, H, T));
        }
        return sum / abs(den_.evaluate(env));
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [k, c] : num_) {
            if (!s.empty()) {
                s += " + ";
            }
            s += "(" + c.to_string() + ")*" + k.to_string(form_);
        }
        if (s.empty()) {
            s = "0";
        }
        return "[" + s + "] / (" + den_.to_string() + ")";
    }

private:
    void require_same_form(const TrigHypExpr& o) const {
        if (form_ != o.form_) {
            throw DomainError("trig-hyperbolic expressions use different argument forms");
        }
    }

    void add(const BasisKey& k, const RationalPoly& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = num_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                num_.erase(it);
            }
        }
    }

    std::map<BasisKey, RationalPoly> num_;
    RationalPoly den_ = RationalPoly(1);
    ArgForm form_ = ArgForm::t1_t2;
};

/// Real and imaginary parts, each a trig-hyperbolic expression.
struct ComplexTrigHyp {
    TrigHypExpr re;
    TrigHypExpr im;

    friend ComplexTrigHyp operator+(const ComplexTrigHyp& a, const ComplexTrigHyp& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexTrigHyp operator*(const ComplexTrigHyp& a, const ComplexTrigHyp& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

/// Complex number with polynomial real and imaginary parts.
struct ComplexPoly {
    RationalPoly re;
    RationalPoly im;

    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return {a.re - b.re, a.im - b.im}; }
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexPoly operator*(const ComplexPoly& a, const RationalPoly& s) { return {a.re * s, a.im * s}; }
    friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) { return a.re == b.re && a.im == b.im; }
};

inline ComplexTrigHyp operator*(const ComplexPoly& p, const ComplexTrigHyp& e) {
    return {p.re * e.re - p.im * e.im, p.re * e.im + p.im * e.re};
}

}  // namespace xi_audit::symbolic
