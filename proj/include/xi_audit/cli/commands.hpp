#pragma once

#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/identity/fg_terms.hpp"
#include "xi_audit/identity/identity_audit.hpp"
#include "xi_audit/report/anchors.hpp"
#include "xi_audit/report/audit_report.hpp"
#include "xi_audit/report/svg.hpp"
#include "xi_audit/search/forms.hpp"
#include "xi_audit/search/verdict.hpp"
#include "xi_audit/special/xi.hpp"
#include "xi_audit/symbolic/audit.hpp"
#include "xi_audit/zeros/zero_finder.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace xi_audit::cli {

using symbolic::Rational;

/// Relative gap |a - b| / max(|a|, |b|, floor).
inline double relative_difference(double a, double b, double floor = 1e-300) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

template <class Real>
double relative_difference(const Complex<Real>& a, const Complex<Real>& b, double floor = 1e-300) {
    using std::max;
    const Real d = abs(a - b);
    const Real s = max(max(abs(a), abs(b)), Real(floor));
    return to_double(Real(d / s));
}

inline const char* check_label(bool holds) { return holds ? "holds" : "fails"; }

// ---------------------------------------------------------------------------------------------
// eval-xi

enum class XiChoice { product, fourier, both };

inline XiChoice parse_xi_choice(const std::string& s) {
    if (s == "product") return XiChoice::product;
    if (s == "fourier") return XiChoice::fourier;
    if (s == "both") return XiChoice::both;
    throw UsageError("--method must be product, fourier or both, got '" + s + "'");
}

inline const char* to_string(XiChoice c) {
    switch (c) {
        case XiChoice::product: return "product";
        case XiChoice::fourier: return "fourier";
        case XiChoice::both: return "both";
    }
    return "?";
}

namespace detail {

template <class Real>
void add_xi_checks(AuditReport& r, double t1, double t2, XiChoice choice, const PrecisionContext& ctx,
                   const std::string& tag) {
    using std::abs;
    const Complex<Real> t(from_double<Real>(t1), from_double<Real>(t2));
    std::optional<Complex<Real>> prod, four;
    if (choice != XiChoice::fourier) prod = xi_t(t, XiMethod::product, ctx);
    if (choice != XiChoice::product) four = xi_t(t, XiMethod::fourier, ctx);

    if (prod && four) {
        const Real diff = abs(*prod - *four);
        const double tol = 1e-8 * (1 + to_double(abs(*prod)));
        r.add(make_check("xi cross-method " + tag + " real part", json_number(prod->re), json_number(four->re),
                         to_double(diff), tol, anchors::xi_cross_method));
        if (t2 != 0) {
            r.add(make_check("xi cross-method " + tag + " imaginary part", json_number(prod->im),
                             json_number(four->im), to_double(diff), tol, anchors::xi_cross_method));
        }
        return;
    }
    const auto& v = prod ? *prod : *four;
    const bool finite = is_finite(v.re) && is_finite(v.im);
    if (t2 == 0) {
        // Ξ is real on the real axis.
        const double tol = ctx.abs_tol * (1 + to_double(abs(v)));
        r.add(make_check("xi " + std::string(prod ? "product" : "fourier") + " " + tag + " is real",
                         json_number(v.re), json_number(v.im), finite ? to_double(abs(v.im)) : INFINITY, tol,
                         anchors::xi_cross_method));
    } else {
        r.add(make_boolean_check("xi " + std::string(prod ? "product" : "fourier") + " " + tag + " is finite",
                                 json_number(v.re), json_number(v.im), finite, anchors::xi_cross_method));
    }
}

}  // namespace detail

/// Ξ at one t = t1 + i t2 by one or both routes.
inline AuditReport eval_xi_report(double t1, double t2, XiChoice choice, const PrecisionContext& ctx) {
    AuditReport r;
    r.command = "eval-xi";
    r.precision_mode = ctx.label();
    r.params = Json{{"t1", json_number(t1)}, {"t2", json_number(t2)}, {"method", to_string(choice)}};
    const std::string tag = "at t = " + format_double(t1) + (t2 != 0 ? " + " + format_double(t2) + "i" : "");
    if (ctx.extended()) {
        detail::add_xi_checks<Extended>(r, t1, t2, choice, ctx, tag);
    } else {
        detail::add_xi_checks<double>(r, t1, t2, choice, ctx, tag);
    }
    return r;
}

/// Both routes on t = t_min, t_min + step, ..., t_max (real t).
inline AuditReport eval_xi_grid_report(double t_min, double t_max, double step, const PrecisionContext& ctx) {
    if (!(step > 0) || !(t_max >= t_min)) {
        throw UsageError("grid needs step > 0 and t_max >= t_min");
    }
    AuditReport r;
    r.command = "eval-xi";
    r.precision_mode = ctx.label();
    r.params = Json{{"t_min", json_number(t_min)},
                    {"t_max", json_number(t_max)},
                    {"step", json_number(step)},
                    {"method", "both"}};
    const auto n = static_cast<long>(std::floor((t_max - t_min) / step + 1e-9));
    for (long k = 0; k <= n; ++k) {
        const double t = t_min + step * static_cast<double>(k);
        const std::string tag = "at t = " + format_double(t);
        if (ctx.extended()) {
            detail::add_xi_checks<Extended>(r, t, 0, XiChoice::both, ctx, tag);
        } else {
            detail::add_xi_checks<double>(r, t, 0, XiChoice::both, ctx, tag);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// find-zeros / load-zeros

namespace detail {

/// Sign change of Ξ (given route, binary64) across [t - h, t + h].
inline bool sign_change_near(double t, double h, XiMethod method, const PrecisionContext& ctx) {
    const double lo = xi_audit::detail::xi_real<double>(t - h, method, ctx);
    const double hi = xi_audit::detail::xi_real<double>(t + h, method, ctx);
    return (lo < 0 && hi > 0) || (lo > 0 && hi < 0) || lo == 0 || hi == 0;
}

}  // namespace detail

struct ZeroScanResult {
    AuditReport report;
    std::vector<ZeroCandidate> zeros;
};

/// Scans with the product route, then confirms every ordinate by a sign change of the Fourier route.
inline ZeroScanResult find_zeros_report(double t_min, double t_max, double step, int parallel,
                                        const PrecisionContext& ctx) {
    ZeroScanResult out;
    auto& r = out.report;
    r.command = "find-zeros";
    r.precision_mode = ctx.label();
    r.params = Json{{"t_min", json_number(t_min)},
                    {"t_max", json_number(t_max)},
                    {"step", json_number(step)}};
    ScanOptions opt;
    opt.method = XiMethod::product;
    opt.parallel = parallel;
    out.zeros = ctx.extended() ? scan_real_zeros<Extended>(t_min, t_max, step, opt, ctx)
                               : scan_real_zeros<double>(t_min, t_max, step, opt, ctx);
    const double h = 1e-6;
    for (std::size_t i = 0; i < out.zeros.size(); ++i) {
        const double t = out.zeros[i].t1;
        const bool ok = detail::sign_change_near(t, h, XiMethod::fourier, ctx);
        r.add(make_boolean_check("zero " + std::to_string(i + 1) + " confirmed by the Fourier route within 1e-6",
                                 json_number(t), json_number(h), ok, anchors::xi_zero));
    }
    return out;
}

/// One ordinate per line, shortest round-trip text.
inline std::string zero_table_text(const std::vector<ZeroCandidate>& zeros) {
    std::string s = "# real zeros of Xi, one ordinate per line\n";
    for (const auto& z : zeros) {
        s += format_double(z.t1) + "\n";
    }
    return s;
}

inline AuditReport load_zeros_report(const ZeroTable& table, const PrecisionContext& ctx) {
    AuditReport r;
    r.command = "load-zeros";
    r.precision_mode = ctx.label();
    r.params = Json{{"file", table.source}, {"count", table.ordinates.size()}};
    const double h = 1e-6;
    for (std::size_t i = 0; i < table.ordinates.size(); ++i) {
        const double t = table.ordinates[i];
        const bool ok = detail::sign_change_near(t, h, XiMethod::product, ctx);
        r.add(make_boolean_check("ordinate " + std::to_string(i + 1) + " brackets a sign change within 1e-6",
                                 json_number(t), json_number(h), ok, anchors::zero_table));
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// audit-identity

struct IdentityPoint {
    double t1, t2, b, eps;
};

/// t1 ∈ [6.5, 30], t2 ∈ (-½, ½), b ∈ (0.1, 10], ε log-uniform on [0.01, 10].
inline std::vector<IdentityPoint> identity_sample(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> t1(6.5, 30.0), t2(-0.5, 0.5), b(0.1, 10.0),
        le(std::log(0.01), std::log(10.0));
    std::vector<IdentityPoint> out;
    for (int i = 0; i < count; ++i) {
        IdentityPoint p{};
        p.t1 = t1(rng);
        p.t2 = t2(rng);
        p.b = b(rng);
        p.eps = std::exp(le(rng));
        if (p.t2 == -0.5) p.t2 = 0;
        out.push_back(p);
    }
    return out;
}

namespace detail {

template <class Real>
void add_identity_checks(AuditReport& r, const IdentityPoint& pt, const std::string& tag, bool printed_forms) {
    using std::abs;
    using std::max;
    ConstructionParams<Real> p;
    p.t = Complex<Real>(from_double<Real>(pt.t1), from_double<Real>(pt.t2));
    p.b = from_double<Real>(pt.b);
    p.eps = from_double<Real>(pt.eps);
    const auto quad = identity_quadrature<Real>();
    const auto id = identity_residual(p, quad);
    const double scale = to_double(id.scale);
    r.add(make_check("boundary identity residual" + tag, json_number(Real(abs(id.residual))), 0.0,
                     to_double(Real(abs(id.residual))), 1e-9 * scale, anchors::boundary_identity));
    r.add(make_check("quadratic-weight term closed vs quadrature" + tag,
                     json_number(Real(abs(id.quadratic_weight_term))),
                     json_number(Real(abs(id.quadratic_weight_quadrature))),
                     relative_difference(id.quadratic_weight_term, id.quadratic_weight_quadrature), 1e-10,
                     anchors::quadratic_weight));
    r.add(make_check("mean term closed vs quadrature" + tag, json_number(Real(abs(id.mean_term))),
                     json_number(Real(abs(id.mean_quadrature))),
                     relative_difference(id.mean_term, id.mean_quadrature), 1e-10, anchors::mean_term));
    r.add(make_check("boundary product expanded vs direct" + tag, json_number(Real(abs(id.boundary_term))),
                     json_number(Real(abs(id.boundary_direct))),
                     relative_difference(id.boundary_term, id.boundary_direct), 1e-10, anchors::boundary_product));

    const auto h = h_decompose(p, quad);
    const Real h_gap = abs(h.h_quadrature - h.h_closed);
    r.add(make_check("h by quadrature vs F + G/eps" + tag, json_number(h.h_quadrature), json_number(h.h_closed),
                     to_double(h_gap), 1e-10 * std::max(1.0, to_double(Real(abs(h.h_quadrature)))),
                     anchors::h_split));
    r.add(make_check("quartic weight integral closed vs quadrature" + tag, json_number(h.quartic_integral_closed),
                     json_number(h.quartic_integral_quadrature),
                     relative_difference(to_double(h.quartic_integral_closed),
                                         to_double(h.quartic_integral_quadrature)),
                     1e-10, anchors::h_split));
    if (printed_forms) {
        r.add(make_check("printed F vs derived F" + tag, json_number(h.F_printed_value), json_number(h.F_value),
                         relative_difference(to_double(h.F_printed_value), to_double(h.F_value)), 1e-10,
                         anchors::F_printed));
        r.add(make_check("h with (b/2)^2 vs h with (b/2)^5" + tag, json_number(h.h_square_exponent),
                         json_number(h.h_quadrature),
                         to_double(Real(abs(h.h_square_exponent - h.h_quadrature))),
                         1e-10 * std::max(1.0, to_double(Real(abs(h.h_quadrature)))), anchors::h_printed_exponent));
    }
}

}  // namespace detail

/// The identity chain at one (t, b, ε). `printed_forms` adds the two printed-form comparisons,
/// which fail wherever the printed F and the (b/2)² exponent disagree with the derivation.
inline AuditReport audit_identity_report(const IdentityPoint& pt, const PrecisionContext& ctx,
                                         bool printed_forms = true) {
    AuditReport r;
    r.command = "audit-identity";
    r.precision_mode = ctx.label();
    r.params = Json{{"t1", json_number(pt.t1)},
                    {"t2", json_number(pt.t2)},
                    {"b", json_number(pt.b)},
                    {"eps", json_number(pt.eps)}};
    if (ctx.extended()) {
        detail::add_identity_checks<Extended>(r, pt, "", printed_forms);
    } else {
        detail::add_identity_checks<double>(r, pt, "", printed_forms);
    }
    return r;
}

/// The identity chain at `count` random points.
inline AuditReport audit_identity_batch_report(int count, unsigned seed, const PrecisionContext& ctx,
                                               bool printed_forms = false) {
    AuditReport r;
    r.command = "audit-identity";
    r.precision_mode = ctx.label();
    r.params = Json{{"points", count}, {"seed", seed}};
    const auto pts = identity_sample(count, seed);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string tag = " [point " + std::to_string(i + 1) + "]";
        if (ctx.extended()) {
            detail::add_identity_checks<Extended>(r, pts[i], tag, printed_forms);
        } else {
            detail::add_identity_checks<double>(r, pts[i], tag, printed_forms);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// audit-symbolic

/// f(0; ε) = 0 and f ≡ 0 on a 100-point b grid when t2 = 0.
inline void add_f_degeneracy_checks(AuditReport& r, double t1, double t2, const PrecisionContext& ctx) {
    for (double eps : {0.01, 0.1, 1.0, 10.0}) {
        const double f0 = f_eval(0.0, eps, t1, t2, ctx);
        r.add(make_check("f(0; eps) = 0 at eps = " + format_double(eps), json_number(f0), 0.0, std::abs(f0),
                         ctx.abs_tol, anchors::f_zero_at_origin));
    }
    double worst = 0;
    for (int k = 1; k <= 100; ++k) {
        for (double eps : {0.01, 0.1, 1.0, 10.0}) {
            worst = std::max(worst, std::abs(f_eval(0.1 * k, eps, t1, 0.0, ctx)));
        }
    }
    r.add(make_check("f vanishes on b = 0.1..10 when t2 = 0", json_number(worst), 0.0, worst, ctx.abs_tol,
                     anchors::f_real_t));
}

inline AuditReport audit_symbolic_report(int points, unsigned seed, double t1, double t2,
                                         const PrecisionContext& ctx) {
    AuditReport r;
    r.command = "audit-symbolic";
    r.precision_mode = ctx.label();
    r.params = Json{{"points", points}, {"seed", seed}, {"t1", json_number(t1)}, {"t2", json_number(t2)}};
    const auto a = symbolic::run_symbolic_audit(points, seed);

    r.add(make_boolean_check("complex powers of t match their printed expansions", check_label(a.complex_powers_match),
                             "holds", a.complex_powers_match, anchors::complex_powers));
    r.add(make_boolean_check("ch(tbar b/2) sh(t b/2) product matches", check_label(a.product_identity_match), "holds",
                             a.product_identity_match, anchors::ch_sh_product));
    static const char* stage_anchor[] = {anchors::im_p,        anchors::im_p_alpha, anchors::im_p_alpha,
                                         anchors::im_p_merged, anchors::im_p_merged, anchors::q_sigma,
                                         anchors::g_polys};
    for (std::size_t i = 0; i < a.stages.size(); ++i) {
        const auto& s = a.stages[i];
        const char* anchor = stage_anchor[std::min<std::size_t>(i, 6)];
        r.add(make_check(s.name + ": numeric round trip over " + std::to_string(s.points) + " points",
                         json_number(s.max_relative_error), 0.0, s.max_relative_error, s.tolerance, anchor));
        if (!s.has_printed_form) continue;
        if (s.diffs.empty()) {
            r.add(make_boolean_check(s.name + ": exact match with the printed form", "0 coefficient differences",
                                     "0 coefficient differences", true, anchor));
        }
        for (const auto& d : s.diffs) {
            r.add(make_boolean_check(s.name + ": coefficient of " + d.basis + " differs (difference " + d.difference +
                                         ")",
                                     d.derived, d.printed, false, anchor));
        }
    }
    r.add(make_boolean_check("merging preserves the expression", check_label(a.merge_conserved), "holds",
                             a.merge_conserved, anchors::im_p_merged));
    r.add(make_boolean_check("only 1/eps and eps^0 appear after merging", check_label(a.single_inverse_eps_power),
                             "holds", a.single_inverse_eps_power, anchors::im_p_merged));
    r.add(make_boolean_check("printed g1 discriminant matches B^2 - 4AC", check_label(a.printed_g1_discriminant_matches),
                             "holds", a.printed_g1_discriminant_matches, anchors::g1_discriminant));
    r.add(make_boolean_check("Im P is the zero expression when t2 = 0 (exact)", check_label(a.t2_zero_annihilates),
                             "holds", a.t2_zero_annihilates, anchors::f_real_t));
    add_f_degeneracy_checks(r, t1, t2, ctx);
    return r;
}

// ---------------------------------------------------------------------------------------------
// audit-signs

/// Exact rational value of a decimal literal such as "12.001" or "-3.5e2".
inline Rational rational_from_decimal(const std::string& text) {
    double check = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), check);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(check)) {
        throw UsageError("not a decimal number: '" + text + "'");
    }
    std::string mant = text;
    long exp10 = 0;
    if (const auto e = mant.find_first_of("eE"); e != std::string::npos) {
        exp10 = std::stol(mant.substr(e + 1));
        mant.resize(e);
    }
    bool negative = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        negative = mant[0] == '-';
        mant.erase(0, 1);
    }
    if (const auto dot = mant.find('.'); dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    // cpp_int reads a leading 0 as an octal prefix.
    mant.erase(0, std::min(mant.find_first_not_of('0'), mant.size()));
    if (mant.empty()) mant = "0";
    Rational q{boost::multiprecision::cpp_int(mant)};
    const Rational ten(10);
    for (long k = 0; k < std::abs(exp10); ++k) {
        q = exp10 > 0 ? Rational(q * ten) : Rational(q / ten);
    }
    return negative ? Rational(-q) : q;
}

/// g1..g4 from the derivation chain, computed once.
inline const symbolic::GPolySet& derived_g_polynomials() {
    static const symbolic::GPolySet g =
        symbolic::q_in_sigma(symbolic::merge_terms(symbolic::substitute_alpha(symbolic::derive_im_P())).Q);
    return g;
}

namespace detail {

inline std::string rational_text(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string exp_scaled_text(const ExpScaled<double>& q) {
    return format_significant(q.mantissa) + " * exp(" + format_significant(q.log_scale) + ")";
}

}  // namespace detail

/// Exact sign analysis of g1..g4, the σ sweep, Q at σ = 3π/2 and 5π/2, and F positivity on [b1, b2].
inline AuditReport audit_signs_report(const std::vector<Rational>& alphas, const std::vector<double>& t2_values,
                                      const PrecisionContext& ctx) {
    AuditReport r;
    r.command = "audit-signs";
    r.precision_mode = ctx.label();
    Json al = Json::array();
    for (const auto& a : alphas) al.push_back(json_number(static_cast<double>(a)));
    Json tv = Json::array();
    for (double t : t2_values) tv.push_back(json_number(t));
    r.params = Json{{"alphas", al}, {"t2_values", tv}};

    const auto reports = symbolic::run_sign_analysis(derived_g_polynomials(), alphas);
    const double pi = pi_v<double>();
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const double alpha = static_cast<double>(alphas[i]);
        const std::string at = " at alpha = " + format_double(alpha);
        const auto& g1 = reports[i][0];
        r.add(make_boolean_check("g1 discriminant in sigma is negative" + at,
                                 detail::rational_text(g1.discriminant_value), "< 0", g1.discriminant_sign < 0,
                                 anchors::g1_discriminant));
        for (const auto& g : reports[i]) {
            const std::string want = g.claimed_sign < 0 ? "< 0" : "> 0";
            r.add(make_boolean_check(g.name + " " + want + " for every sigma > 0 (exact)" + at,
                                     g.uniform_sign < 0 ? "< 0" : (g.uniform_sign > 0 ? "> 0" : "changes sign"), want,
                                     g.claim_holds, anchors::g_signs));
            r.add(make_check(g.name + " " + want + " on sigma = k pi/50, k = 1..500" + at,
                             json_number(g.sweep_extreme), 0.0, static_cast<double>(g.sweep_violations), 0.0,
                             anchors::g_signs));
        }
        const auto q1 = q_eval_auto(3 * pi / 2, alpha);
        const auto q2 = q_eval_auto(5 * pi / 2, alpha);
        r.add(make_boolean_check("Q at sigma = 3 pi/2 is positive" + at, detail::exp_scaled_text(q1), "> 0",
                                 q1.sign() > 0, anchors::q_b1));
        r.add(make_boolean_check("Q at sigma = 5 pi/2 is negative" + at, detail::exp_scaled_text(q2), "< 0",
                                 q2.sign() < 0, anchors::q_b2));

        for (double t2 : t2_values) {
            // F and its bound on b t2 ∈ [3π, 5π]; Extended because α t2 b reaches e^{hundreds}.
            const Extended t2e = from_double<Extended>(t2);
            const Extended ae = from_double<Extended>(alpha);
            Extended worst_margin = 0;
            Extended worst_bound = 0;
            bool first = true;
            for (int k = 0; k <= 100; ++k) {
                const Extended bt = pi_v<Extended>() * (3 + Extended(2 * k) / 100);
                const Extended b = bt / t2e;
                const Extended F = F_eval(b, t2e, ae);
                const Extended lower = F_lower_bound(b, t2e);
                const Extended margin = (F - lower) / (F > 1 ? F : Extended(1));
                if (first || margin < worst_margin) worst_margin = margin;
                if (first || lower < worst_bound) worst_bound = lower;
                first = false;
            }
            r.add(make_boolean_check("F(b) > (b - 1/t2)/4 > 0 for b t2 in [3 pi, 5 pi]" + at +
                                         ", t2 = " + format_double(t2),
                                     json_number(worst_margin), json_number(worst_bound),
                                     worst_margin > 0 && worst_bound > 0, anchors::F_positive));
        }
    }
    return r;
}

/// g1..g4 at one σ against their claimed signs.
inline void add_g_signs_at(AuditReport& r, const std::vector<Rational>& alphas, double sigma) {
    if (!(sigma > 0)) throw UsageError("--sigma must be positive");
    const auto claims = symbolic::claimed_g_signs();
    for (const auto& a : alphas) {
        const double alpha = static_cast<double>(a);
        const auto g = g_values(sigma, alpha);
        const double v[4] = {g.g1, g.g2, g.g3, g.g4};
        for (int k = 0; k < 4; ++k) {
            const bool holds = claims[k] * v[k] > 0;
            r.add(make_boolean_check("g" + std::to_string(k + 1) + (claims[k] < 0 ? " < 0" : " > 0") +
                                         " at sigma = " + format_double(sigma) + ", alpha = " + format_double(alpha),
                                     json_number(v[k]), 0.0, holds, anchors::g_signs));
        }
    }
}

/// e^{-ασ} Q(σ) on (0, 4π] for each α.
inline SvgPlot q_sigma_plot(const std::vector<Rational>& alphas) {
    SvgPlot p;
    p.title = "Q(sigma) with exp(alpha sigma) factored out";
    p.x_label = "sigma";
    p.y_label = "exp(-alpha sigma) Q";
    p.signed_log = true;
    const double pi = pi_v<double>();
    for (const auto& a : alphas) {
        const double alpha = static_cast<double>(a);
        SvgSeries s;
        s.label = "alpha = " + format_double(alpha);
        for (int k = 1; k <= 400; ++k) {
            const double sigma = 4 * pi * k / 400;
            s.x.push_back(sigma);
            s.y.push_back(q_eval_auto(sigma, alpha).mantissa);
        }
        p.series.push_back(std::move(s));
    }
    return p;
}

// ---------------------------------------------------------------------------------------------
// verdict

inline Json verdict_json(const Verdict& v) {
    Json j = v.trace ? to_json(*v.trace) : Json::object();
    j["conclusion"] = to_string(v.conclusion);
    j["conditions_met"] = v.conditions_met;
    j["implied_im_t_squared"] = json_number(v.implied_im_t_squared);
    j["degenerate"] = v.degenerate;
    j["verdict_notes"] = v.notes;
    if (v.replay) {
        j["replay"] = Json{{"ok", v.replay->ok}, {"checked", v.replay->checked}, {"failures", v.replay->failures}};
    }
    return j;
}

struct VerdictRun {
    AuditReport report;
    Verdict verdict;
};

inline VerdictRun verdict_report(double t1, double t2, const PrecisionContext& ctx, const SearchOptions& opt = {}) {
    VerdictRun run;
    auto& r = run.report;
    r.command = "verdict";
    r.params = Json{{"t1", json_number(t1)}, {"t2", json_number(t2)}};
    run.verdict = verdict(ZeroCandidate{t1, t2}, ctx, opt);
    const auto& v = run.verdict;
    r.precision_mode = v.degenerate ? ctx.label() : "dec:50";
    r.trace = verdict_json(v);

    if (v.degenerate) {
        r.add(make_check("f vanishes for t2 = 0 on b = 0.2..20", json_number(v.degenerate_max_abs_f), 0.0,
                         v.degenerate_max_abs_f, ctx.abs_tol, anchors::f_real_t));
        r.add(make_boolean_check("t2 must be zero", to_string(v.conclusion), "t2-must-be-zero",
                                 v.conclusion == Conclusion::t2_must_be_zero, anchors::final_step));
        return run;
    }
    if (!v.selection) {
        r.add(make_boolean_check("premise Q(b1) > 0 > Q(b2)", "fails", "holds", false, anchors::q_b1));
        r.add(make_boolean_check("t2 must be zero", to_string(v.conclusion), "t2-must-be-zero", false,
                                 anchors::final_step, CheckStatus::inconclusive));
        return run;
    }
    const auto& sel = *v.selection;
    r.add(make_boolean_check("premise Q(b1) > 0", json_number(sel.Q1), 0.0, sel.Q1 > 0, anchors::q_b1));
    r.add(make_boolean_check("premise Q(b2) < 0", json_number(sel.Q2), 0.0, sel.Q2 < 0, anchors::q_b2));
    if (!v.trace) {
        r.add(make_boolean_check("b0 search completes", "case analysis exhausted", "complete", false,
                                 anchors::b0_root));
        return run;
    }
    const auto& tr = *v.trace;
    const Extended t1e = abs(from_double<Extended>(t1));
    const Extended t2e = abs(from_double<Extended>(t2));
    PrecisionContext ectx = ctx;
    ectx.mode = PrecisionMode::extended_decimal;
    ectx.digits = 50;
    const auto model = candidate_model(t1e, t2e, ectx);
    {
        const Extended lo = model.f(tr.interval_lo, tr.eps1);
        const Extended hi = model.f(tr.interval_hi, tr.eps1);
        r.add(make_boolean_check("f(lo; eps1) > 0 > f(hi; eps1) on the searched interval", json_number(lo),
                                 json_number(hi), lo > 0 && hi < 0, anchors::eps1_bracket));
    }
    if (tr.eps0_min_rule) {
        r.add(make_boolean_check("eps0 = min(eps1, eps2)/2 keeps the sign change of f", json_number(*tr.eps0_min_rule),
                                 json_number(tr.eps0), tr.min_rule_keeps_bracket, anchors::eps0_choice));
    }
    r.add(make_check("|f(b0; eps0)| within tolerance", json_number(tr.f_at_b0), 0.0,
                     to_double(Extended(abs(tr.f_at_b0))), to_double(tr.f_tolerance), anchors::b0_root));
    {
        // Passes when |h| clears the threshold: threshold/|h| ≤ 1.
        const Extended ah = abs(tr.h_at_b0);
        const double ratio = ah > 0 ? to_double(Extended(tr.h_threshold / ah)) : INFINITY;
        r.add(make_check("h(b0; eps0) is nonzero", json_number(tr.h_at_b0), json_number(tr.h_threshold), ratio, 1.0,
                         anchors::h_nonzero, CheckStatus::inconclusive));
    }
    if (v.replay) {
        r.add(make_check("trace replay re-verifies every recorded value",
                         static_cast<double>(v.replay->checked.size()), static_cast<double>(v.replay->failures.size()),
                         static_cast<double>(v.replay->failures.size()), 0.0, anchors::trace_replay));
    }
    if (v.f_plus_2t1t2h_relative) {
        r.add(make_check("f = -2 t1 t2 h at b0", json_number(tr.f_at_b0),
                         json_number(Extended(-2 * t1e * t2e * tr.h_at_b0)), *v.f_plus_2t1t2h_relative, 1e-30,
                         anchors::f_h_relation));
    }
    if (v.q_plus_t1t2g_relative) {
        r.add(make_check("Q = -t1 t2 G at b'", "Q(b')", "-t1 t2 G(b')", *v.q_plus_t1t2g_relative, 1e-30,
                         anchors::q_g_relation));
    }
    if (v.g_closed_vs_quadrature_relative) {
        r.add(make_check("G closed form vs quadrature at b0", json_number(tr.G_at_b0), "quadrature",
                         *v.g_closed_vs_quadrature_relative, 1e-10, anchors::h_split));
    }
    r.add(make_boolean_check("t2 must be zero", to_string(v.conclusion), "t2-must-be-zero",
                             v.conclusion == Conclusion::t2_must_be_zero, anchors::final_step,
                             CheckStatus::inconclusive));
    return run;
}

/// f(b; ε0) on [b1, b2] as sgn(f)·log10(1 + |f|), computed before narrowing to binary64.
inline SvgPlot f_plot(const Verdict& v) {
    SvgPlot p;
    p.title = "f(b; eps0) on [b1, b2]";
    p.x_label = "b";
    p.y_label = "sgn(f) log10(1+|f|)";
    if (!v.trace) return p;
    const auto& tr = *v.trace;
    const Extended t1 = abs(from_double<Extended>(v.input.t1));
    const Extended t2 = abs(from_double<Extended>(v.input.t2));
    SvgSeries s;
    s.label = "eps0 = " + format_significant(tr.eps0, 4);
    for (int k = 0; k <= 200; ++k) {
        const Extended b = tr.b1 + (tr.b2 - tr.b1) * k / 200;
        const Extended f = f_expanded(b, tr.eps0, t1, t2).value;
        const Extended y = f == 0 ? Extended(0) : Extended((f > 0 ? 1 : -1) * log10(1 + abs(f)));
        s.x.push_back(to_double(b));
        s.y.push_back(to_double(y));
    }
    p.series.push_back(std::move(s));
    return p;
}

// ---------------------------------------------------------------------------------------------
// sweep

enum class SweepKind { signs, identity };

inline SweepKind parse_sweep_kind(const std::string& s) {
    if (s == "signs") return SweepKind::signs;
    if (s == "identity") return SweepKind::identity;
    throw UsageError("--kind must be signs or identity, got '" + s + "'");
}

struct SweepResult {
    std::vector<double> alphas;
    std::vector<AuditReport> reports;
    std::string csv;

    int exit_code() const {
        bool fail = false;
        bool inconclusive = false;
        for (const auto& r : reports) {
            fail = fail || r.any(CheckStatus::fail);
            inconclusive = inconclusive || r.any(CheckStatus::inconclusive);
        }
        return fail ? 1 : (inconclusive ? 3 : 0);
    }
};

/// Linear grid of `count` values on [from, to].
inline std::vector<double> linear_grid(double from, double to, int count) {
    if (count < 1) throw UsageError("--count must be at least 1");
    std::vector<double> v;
    for (int i = 0; i < count; ++i) {
        v.push_back(count == 1 ? from : from + (to - from) * i / (count - 1));
    }
    return v;
}

/// One report per α, computed by up to `workers` threads pulling from a shared index; results
/// are placed by index so the output does not depend on scheduling.
inline SweepResult sweep(const std::vector<double>& alphas, SweepKind kind, double t2, double b, double eps,
                         int workers, const PrecisionContext& ctx) {
    SweepResult out;
    out.alphas = alphas;
    out.reports.resize(alphas.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < alphas.size(); i = next++) {
            const double a = alphas[i];
            if (kind == SweepKind::signs) {
                // Exact rational α from its shortest decimal text.
                const auto q = rational_from_decimal(format_double(a));
                out.reports[i] = audit_signs_report({q}, {t2}, ctx);
            } else {
                out.reports[i] = audit_identity_report({a * t2, t2, b, eps}, ctx, false);
            }
            out.reports[i].params["alpha"] = json_number(a);
        }
    };
    const int n = std::max(1, std::min<int>(workers, static_cast<int>(alphas.size())));
    std::vector<std::future<void>> tasks;
    for (int w = 1; w < n; ++w) tasks.push_back(std::async(std::launch::async, work));
    work();
    for (auto& t : tasks) t.get();

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const auto& r = out.reports[i];
        int pass = 0, fail = 0, inc = 0;
        for (const auto& c : r.checks) {
            pass += c.status == CheckStatus::pass;
            fail += c.status == CheckStatus::fail;
            inc += c.status == CheckStatus::inconclusive;
        }
        rows.push_back({std::to_string(i), format_double(alphas[i]), r.command, std::to_string(r.checks.size()),
                        std::to_string(pass), std::to_string(fail), std::to_string(inc),
                        std::to_string(r.exit_code())});
    }
    out.csv = to_csv({"index", "alpha", "command", "checks", "pass", "fail", "inconclusive", "exit_code"}, rows);
    return out;
}

}  // namespace xi_audit::cli
