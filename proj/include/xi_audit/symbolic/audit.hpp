#pragma once

#include "xi_audit/search/forms.hpp"
#include "xi_audit/symbolic/derivation.hpp"
#include "xi_audit/symbolic/printed_forms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace xi_audit::symbolic {

/// One link of the chain: exact comparison with its printed counterpart plus a numeric round trip.
struct StageReport {
    std::string name;
    bool has_printed_form = false;
    bool matches_printed = false;
    std::vector<CoefficientDiff> diffs;
    int points = 0;
    double max_relative_error = 0;  ///< |stage - source| / Σ|terms| over the sample
    double tolerance = 1e-12;
    bool round_trip_ok = false;
};

/// A sample point in the regime t1 ∈ [6.5, 30], t2 ∈ (0, ½), b ∈ (0.1, 10], ε ∈ [0.01, 10].
struct SamplePoint {
    double t1, t2, b, eps;
    double alpha() const { return t1 / t2; }
    double sigma() const { return b * t2 / 2; }
};

inline std::vector<SamplePoint> sample_points(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> t1(6.5, 30.0), t2(0.01, 0.5), b(0.1, 10.0), le(std::log(0.01), std::log(10.0));
    std::vector<SamplePoint> out;
    for (int i = 0; i < count; ++i) {
        const double a = t1(rng);
        const double c = t2(rng);
        const double d = b(rng);
        const double e = std::exp(le(rng));
        out.push_back({a, c, d, e});
    }
    return out;
}

inline Env<double> env_of(const SamplePoint& p) {
    Env<double> e;
    e[Var::t1] = p.t1;
    e[Var::t2] = p.t2;
    e[Var::alpha] = p.alpha();
    e[Var::sigma] = p.sigma();
    e[Var::b] = p.b;
    e[Var::inv_eps] = 1 / p.eps;
    return e;
}

namespace detail {

struct Measured {
    double value;
    double scale;
};

inline void round_trip(StageReport& r, const std::vector<SamplePoint>& pts,
                       const std::function<Measured(const SamplePoint&)>& stage,
                       const std::function<Measured(const SamplePoint&)>& source) {
    r.points = static_cast<int>(pts.size());
    r.max_relative_error = 0;
    for (const auto& p : pts) {
        const Measured a = stage(p);
        const Measured b = source(p);
        const double scale = std::max({a.scale, b.scale, 1e-300});
        r.max_relative_error = std::max(r.max_relative_error, std::abs(a.value - b.value) / scale);
    }
    r.round_trip_ok = r.max_relative_error <= r.tolerance;
}

inline Measured measure(const TrigHypExpr& e, const SamplePoint& p) {
    const auto env = env_of(p);
    return {e.evaluate(env), e.evaluate_abs(env)};
}

inline void compare_printed(StageReport& r, const TrigHypExpr& derived, const TrigHypExpr& printed) {
    r.has_printed_form = true;
    r.diffs = derived.diff(printed);
    r.matches_printed = r.diffs.empty();
}

}  // namespace detail

struct SymbolicAuditResult {
    std::vector<StageReport> stages;
    bool complex_powers_match = false;
    bool product_identity_match = false;
    bool t2_zero_annihilates = false;
    bool merge_conserved = false;
    bool single_inverse_eps_power = false;
    GPolySet g;
    std::array<bool, 4> g_match_printed{};
    bool printed_g1_discriminant_matches = false;
    TrigHypExpr im_p;
    TrigHypExpr im_p_alpha;
    TrigHypExpr q;
    TrigHypExpr q_sigma_form;

    bool all_round_trips_ok() const {
        return std::all_of(stages.begin(), stages.end(), [](const StageReport& s) { return s.round_trip_ok; });
    }
    bool all_match_printed() const {
        return std::all_of(stages.begin(), stages.end(),
                           [](const StageReport& s) { return !s.has_printed_form || s.matches_printed; });
    }
};

/// Derives Im P and its rewrites, diffs each against the printed transcription, and
/// round-trips each step numerically at `points` random points.
inline SymbolicAuditResult run_symbolic_audit(int points = 20, unsigned seed = 20240611) {
    SymbolicAuditResult out;
    const auto pts = sample_points(points, seed);

    out.complex_powers_match = true;
    for (int n : {2, 4, 5, 6}) {
        out.complex_powers_match = out.complex_powers_match && expand_complex_powers(n) == printed::complex_power(n);
    }
    {
        const auto hb = complex_hyperbolic_basis();
        const auto prod = hb.ch_tbar * hb.sh_t;
        const auto pr = printed::ch_conj_sh_product();
        out.product_identity_match = prod.re.equivalent(pr.re) && prod.im.equivalent(pr.im);
    }

    out.im_p = derive_im_P();
    out.t2_zero_annihilates =
        out.im_p.with_zero_trig_argument().substitute(Var::t2, RationalPoly(), ArgForm::t1_t2).is_zero();
    {
        StageReport r;
        r.name = "imaginary part of P";
        detail::compare_printed(r, out.im_p, printed::im_p_t1_t2());
        detail::round_trip(r, pts, [&](const SamplePoint& p) { return detail::measure(out.im_p, p); },
                           [](const SamplePoint& p) {
                               const auto f = f_expanded(p.b, p.eps, p.t1, p.t2);
                               return detail::Measured{f.value, f.scale};
                           });
        out.stages.push_back(r);
    }

    out.im_p_alpha = substitute_alpha(out.im_p);
    {
        StageReport r;
        r.name = "t1 = alpha t2, term by term";
        detail::compare_printed(r, out.im_p_alpha, printed::im_p_alpha_expanded());
        detail::round_trip(r, pts, [&](const SamplePoint& p) { return detail::measure(out.im_p_alpha, p); },
                           [&](const SamplePoint& p) { return detail::measure(out.im_p, p); });
        out.stages.push_back(r);
        StageReport s = r;
        s.name = "t1 = alpha t2, collected";
        detail::compare_printed(s, out.im_p_alpha, printed::im_p_alpha_simplified());
        out.stages.push_back(s);
    }

    const auto merged = merge_terms(out.im_p_alpha);
    out.merge_conserved = merged.conserved;
    out.single_inverse_eps_power = merged.single_inverse_power;
    out.q = merged.Q;
    {
        StageReport r;
        r.name = "merged terms";
        detail::compare_printed(r, merged.merged, printed::im_p_merged());
        detail::round_trip(r, pts, [&](const SamplePoint& p) { return detail::measure(merged.merged, p); },
                           [&](const SamplePoint& p) { return detail::measure(out.im_p_alpha, p); });
        out.stages.push_back(r);
    }
    {
        StageReport r;
        r.name = "Q and remainder";
        detail::compare_printed(r, merged.Q, printed::q_bracket_form());
        auto rem = merged.remainder.diff(printed::q_remainder());
        r.diffs.insert(r.diffs.end(), rem.begin(), rem.end());
        r.matches_printed = r.diffs.empty();
        detail::round_trip(
            r, pts,
            [&](const SamplePoint& p) {
                const auto q = detail::measure(merged.Q, p);
                const auto m = detail::measure(merged.remainder, p);
                return detail::Measured{2 * q.value / p.eps - m.value, 2 * q.scale / p.eps + m.scale};
            },
            [&](const SamplePoint& p) { return detail::measure(out.im_p_alpha, p); });
        out.stages.push_back(r);
    }

    out.q_sigma_form = q_sigma(merged.Q);
    {
        StageReport r;
        r.name = "Q with b = 2 sigma / t2";
        detail::compare_printed(r, out.q_sigma_form, printed::q_sigma_form());
        detail::round_trip(r, pts, [&](const SamplePoint& p) { return detail::measure(out.q_sigma_form, p); },
                           [&](const SamplePoint& p) { return detail::measure(merged.Q, p); });
        out.stages.push_back(r);
    }

    out.g = q_in_sigma(merged.Q);
    {
        const auto pg = printed::g_polynomials();
        const std::array<const RationalPoly*, 4> printed_g{&pg.g1, &pg.g2, &pg.g3, &pg.g4};
        StageReport r;
        r.name = "g1..g4";
        r.has_printed_form = true;
        for (int i = 0; i < 4; ++i) {
            out.g_match_printed[i] = out.g[i] == *printed_g[i];
            if (!out.g_match_printed[i]) {
                r.diffs.push_back({"g" + std::to_string(i + 1), out.g[i].to_string(), printed_g[i]->to_string(),
                                   (out.g[i] - *printed_g[i]).to_string()});
            }
        }
        r.matches_printed = r.diffs.empty();
        detail::round_trip(
            r, pts,
            [&](const SamplePoint& p) {
                const auto env = env_of(p);
                const double a = p.alpha();
                const double s = p.sigma();
                const double grow = std::exp(a * s);
                const double decay = std::exp(-a * s);
                const double den = 2 * out.g.denominator.evaluate(env);
                double g[4];
                double ga[4];
                for (int i = 0; i < 4; ++i) {
                    g[i] = out.g[i].evaluate(env);
                    ga[i] = out.g[i].evaluate_abs(env);
                }
                const double value = (grow * (g[0] * std::sin(s) + g[1] * std::cos(s)) +
                                      decay * (g[2] * std::sin(s) + g[3] * std::cos(s))) / den;
                const double scale = (grow * (ga[0] + ga[1]) + decay * (ga[2] + ga[3])) / std::abs(den);
                return detail::Measured{value, scale};
            },
            [&](const SamplePoint& p) { return detail::measure(out.q_sigma_form, p); });
        out.stages.push_back(r);
    }

    // The printed inequality for g1 is its discriminant B² - 4AC.
    {
        const auto parts = out.g.g1.collect(Var::sigma);
        auto part = [&](int k) {
            auto it = parts.find(k);
            return it == parts.end() ? RationalPoly() : it->second;
        };
        const RationalPoly disc = part(1) * part(1) - RationalPoly(4) * part(2) * part(0);
        out.printed_g1_discriminant_matches = disc == printed::g1_discriminant();
    }
    return out;
}

/// Sign analysis of g1..g4 at each α, e.g. {12.001, 13, 20, 52, 100}.
inline std::vector<std::array<GSignReport, 4>> run_sign_analysis(const GPolySet& g, const std::vector<Rational>& alphas) {
    std::vector<std::array<GSignReport, 4>> out;
    for (const auto& a : alphas) {
        out.push_back(g_sign_analysis(g, a));
    }
    return out;
}

/// {12.001, 13, 20, 52, 100} as exact rationals.
inline std::vector<Rational> standard_alphas() {
    return {Rational(12001, 1000), Rational(13), Rational(20), Rational(52), Rational(100)};
}

}  // namespace xi_audit::symbolic
