#pragma once

#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/identity/fg_terms.hpp"
#include "xi_audit/identity/identity_audit.hpp"
#include "xi_audit/search/case_analysis.hpp"
#include "xi_audit/search/forms.hpp"
#include "xi_audit/zeros/zero_finder.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace xi_audit {

enum class Conclusion { t2_must_be_zero, inconclusive };

inline const char* to_string(Conclusion c) {
    return c == Conclusion::t2_must_be_zero ? "t2-must-be-zero" : "inconclusive";
}

struct Verdict {
    ZeroCandidate input;
    bool degenerate = false;           ///< t2 = 0: f vanishes identically
    double degenerate_max_abs_f = 0;   ///< max |f| over the b grid on the degenerate path
    std::optional<EpsSelection<Extended>> selection;
    std::optional<SearchTrace<Extended>> trace;
    std::optional<ReplayResult> replay;
    bool conditions_met = false;       ///< f(b0; ε0) = 0 and h(b0; ε0) ≠ 0 both realized
    double implied_im_t_squared = 0;   ///< 2 t1 t2 from the inputs
    Conclusion conclusion = Conclusion::inconclusive;
    // Identities checked at b0: f = -2 t1 t2 h, and Q = -t1 t2 G at b'.
    std::optional<double> f_plus_2t1t2h_relative;
    std::optional<double> q_plus_t1t2g_relative;
    std::optional<double> g_closed_vs_quadrature_relative;
    std::vector<std::string> notes;
};

namespace detail {

inline double relative_gap(const Extended& a, const Extended& b, const Extended& scale) {
    using std::abs;
    using std::max;
    return to_double(Extended(abs(a - b) / max(Extended(1), scale)));
}

}  // namespace detail

/// Runs the ε selection and the b0 search for a candidate zero; never manufactures the
/// final inference: the conclusion stays inconclusive unless both conditions are realized.
inline Verdict verdict(const ZeroCandidate& z, const PrecisionContext& ctx = {}, const SearchOptions& opt = {}) {
    using std::abs;
    z.validate();
    Verdict v;
    v.input = z;
    v.implied_im_t_squared = 2 * z.t1 * z.t2;

    if (std::abs(z.t2) <= ctx.abs_tol) {
        v.degenerate = true;
        double worst = 0;
        for (int k = 1; k <= 100; ++k) {
            const double b = 0.2 * k;
            for (double eps : {0.1, 1.0}) {
                worst = std::max(worst, std::abs(f_eval(b, eps, std::abs(z.t1), 0.0, ctx)));
            }
        }
        v.degenerate_max_abs_f = worst;
        v.conditions_met = false;
        v.conclusion = worst <= ctx.abs_tol ? Conclusion::t2_must_be_zero : Conclusion::inconclusive;
        v.notes.push_back("t2 = 0: f vanishes for every b and eps, so the candidate already lies on the line");
        return v;
    }

    const Extended t1 = abs(from_double<Extended>(z.t1));
    const Extended t2 = abs(from_double<Extended>(z.t2));
    if (z.t1 < 0 || z.t2 < 0) {
        v.notes.push_back("reflected to t1, t2 > 0 (Xi is even and real on the real axis, so zeros come in "
                          "symmetric quadruples)");
    }
    PrecisionContext ectx = ctx;
    ectx.mode = PrecisionMode::extended_decimal;
    ectx.digits = 50;
    const auto model = candidate_model(t1, t2, ectx);
    const auto [b1, b2] = b1_b2_real(t2);

    try {
        v.selection = select_eps(model, b1, b2, opt);
    } catch (const PremiseFailed& e) {
        v.notes.push_back(std::string("premise failed: ") + e.what());
        return v;
    }
    try {
        v.trace = find_b0(model, *v.selection, opt);
    } catch (const CaseExhausted& e) {
        v.notes.push_back(std::string("case analysis exhausted: ") + e.what());
        return v;
    }
    const auto& tr = *v.trace;
    v.replay = trace_replay(model, tr, opt);
    for (const auto& n : tr.notes) {
        v.notes.push_back(n);
    }
    if (!tr.min_rule_keeps_bracket) {
        v.notes.push_back("finding: with eps below eps2, h < 0 on the interval, and f = -2 t1 t2 h then keeps f > 0, "
                          "so no b0 exists for that eps");
    }

    const Extended h = tr.h_at_b0;
    const Extended f_scale = abs(tr.f_at_b0) + abs(2 * t1 * t2 * h);
    v.f_plus_2t1t2h_relative = to_double(Extended(abs(tr.f_at_b0 + 2 * t1 * t2 * h) /
                                                  (f_scale > 0 ? f_scale : Extended(1))));
    if (tr.b_prime) {
        const Extended q = model.Q(*tr.b_prime);
        const Extended g = model.G(*tr.b_prime);
        const Extended scale = abs(v.selection->Q1) + abs(v.selection->Q2);
        v.q_plus_t1t2g_relative = detail::relative_gap(q, Extended(-t1 * t2 * g), scale);
    }
    {
        // Closed-form G against its defining quadrature at b0, in binary64 when it fits.
        const double b0 = to_double(tr.b0);
        if (!PrecisionContext::needs_extended(z.t1 * b0 / 2)) {
            const double t1d = std::abs(z.t1);
            const double t2d = std::abs(z.t2);
            const double gq = G_eval(b0, t1d, t2d, identity_quadrature<double>());
            const double gc = G_closed(b0, t1d, t2d);
            v.g_closed_vs_quadrature_relative = std::abs(gq - gc) / std::max(1.0, G_scale(b0, t1d, t2d));
        }
    }
    v.notes.push_back("f(b; eps) = -2 t1 t2 h(b, eps) holds identically, so f(b0; eps0) = 0 forces h(b0; eps0) = 0; "
                      "relative gap at b0: " + format_significant(*v.f_plus_2t1t2h_relative, 3));
    if (v.q_plus_t1t2g_relative) {
        v.notes.push_back("Q = -t1 t2 G: relative gap at b' = " + format_significant(*v.q_plus_t1t2g_relative, 3));
    }

    v.conditions_met = tr.f_within_tolerance && tr.h_nonzero;
    v.conclusion = v.conditions_met ? Conclusion::t2_must_be_zero : Conclusion::inconclusive;
    return v;
}

}  // namespace xi_audit
