#include "xi_audit/identity/identity_audit.hpp"
#include "xi_audit/search/case_analysis.hpp"
#include "xi_audit/search/forms.hpp"
#include "xi_audit/search/verdict.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace xi_audit;

namespace {

const double pi = pi_v<double>();

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Candidate {
    Extended t1, t2;
    SearchModel<Extended> model;
    EpsSelection<Extended> selection;
    SearchTrace<Extended> trace;
};

// The 13 + 0.25i search is the slow part of this suite; run it once.
const Candidate& candidate() {
    static const Candidate c = [] {
        Candidate out;
        out.t1 = Extended(13);
        out.t2 = Extended("0.25");
        PrecisionContext ctx = PrecisionContext::parse("dec:50");
        out.model = candidate_model(out.t1, out.t2, ctx);
        const auto [b1, b2] = b1_b2_real(out.t2);
        out.selection = select_eps(out.model, b1, b2);
        out.trace = find_b0(out.model, out.selection);
        return out;
    }();
    return c;
}

// Q = 2 - b on [1, 3], remainder 1/2, G = 1 > 0 throughout.
SearchModel<double> positive_g_model() {
    SearchModel<double> m;
    m.Q = [](const double& b) { return 2 - b; };
    m.R = [](const double&) { return 1.0; };
    m.f = [](const double& b, const double& eps) { return 2 * (2 - b) / eps - 0.5; };
    m.F = [](const double& b) { return 1 + b; };
    m.G = [](const double&) { return 1.0; };
    return m;
}

}  // namespace

TEST(FEval, VanishesAtZeroWidth) {
    for (double eps : {0.01, 0.1, 1.0, 10.0}) {
        EXPECT_LE(std::abs(f_eval(0.0, eps, 13.0, 0.25)), 1e-12);
    }
}

TEST(FEval, VanishesOnRealAxis) {
    for (int k = 1; k <= 100; ++k) {
        EXPECT_LE(std::abs(f_eval(0.1 * k, 0.3, 13.0, 0.0)), 1e-12) << 0.1 * k;
    }
}

TEST(FEval, FormsAgreeAtCandidate) {
    const auto r = f_both(2.0, 0.1, 13.0, 0.25);
    EXPECT_LE(r.difference, 1e-12 * r.scale);
    // mpmath quadrature of the boundary identity: Im P = -24490310347.99394...
    EXPECT_LT(rel(r.expanded, -24490310347.9939409535835242086), 1e-10);
}

TEST(FEval, MatchesImaginaryPartOfClosedP) {
    ConstructionParams<double> p;
    p.t = Complex<double>(13, 0.25);
    p.b = 2;
    p.eps = 0.1;
    const auto r = f_both(2.0, 0.1, 13.0, 0.25);
    EXPECT_LE(std::abs(p_closed(p).im - r.expanded), 1e-11 * (1 + r.scale));
}

TEST(FEval, RejectsBadArguments) {
    EXPECT_THROW(f_eval(-1.0, 0.1, 13.0, 0.25), DomainError);
    EXPECT_THROW(f_eval(1.0, 0.0, 13.0, 0.25), DomainError);
}

TEST(FEval, CrossFormAgreementProperty) {
    std::mt19937_64 rng(500);
    std::uniform_real_distribution<double> t1(6.5, 30), t2(-0.5, 0.5), b(0, 10), le(std::log(0.01), std::log(10.0));
    for (int i = 0; i < 500; ++i) {
        const auto r = f_both(b(rng), std::exp(le(rng)), t1(rng), t2(rng));
        EXPECT_LE(r.difference, 1e-11 * (1 + r.scale));
    }
}

TEST(FEval, TripleFormAgreementProperty) {
    std::mt19937_64 rng(501);
    std::uniform_real_distribution<double> t1(6.5, 30), t2(-0.5, 0.5), b(0.1, 10), le(std::log(0.01), std::log(10.0));
    for (int i = 0; i < 100; ++i) {
        ConstructionParams<double> p;
        p.t = Complex<double>(t1(rng), t2(rng));
        p.b = b(rng);
        p.eps = std::exp(le(rng));
        const auto r = f_both(p.b, p.eps, p.t.re, p.t.im);
        EXPECT_LE(std::abs(p_closed(p).im - r.expanded), 1e-11 * (1 + r.scale));
    }
}

TEST(QEval, SignsAtEndpointsForFiftyTwo) {
    EXPECT_GT(q_eval(3 * pi / 2, 52.0).sign(), 0);
    EXPECT_LT(q_eval(5 * pi / 2, 52.0).sign(), 0);
}

TEST(QEval, SignLemmaGrid) {
    for (double alpha : {12.001, 13.0, 20.0, 52.0, 100.0}) {
        EXPECT_GT(q_eval_auto(3 * pi / 2, alpha).sign(), 0) << alpha;
        EXPECT_LT(q_eval_auto(5 * pi / 2, alpha).sign(), 0) << alpha;
    }
}

TEST(QEval, AgreesWithBracketForm) {
    const double alpha = 13, sigma = 3 * pi / 2;
    for (double t2 : {0.1, 0.25, 0.45}) {
        const double b = 2 * sigma / t2;
        EXPECT_LT(rel(q_eval(sigma, alpha).value(), q_value(b, alpha * t2, t2).value), 1e-12) << t2;
    }
}

TEST(QEval, ExtendedEngagedForLargeExponent) {
    const auto r = q_eval_auto(5 * pi / 2, 100.0);
    EXPECT_GT(r.log_scale, 700);
    EXPECT_TRUE(std::isfinite(r.mantissa));
    EXPECT_THROW(q_eval(0.0, 13.0), DomainError);
}

TEST(QEval, GSamplingSigns) {
    for (double alpha : {12.001, 13.0, 20.0, 52.0, 100.0}) {
        for (int k = 1; k <= 500; ++k) {
            const auto g = g_values(k * pi / 50, alpha);
            ASSERT_LT(g.g1, 0);
            ASSERT_LT(g.g2, 0);
            ASSERT_LT(g.g3, 0);
            ASSERT_GT(g.g4, 0);
        }
    }
}

TEST(Endpoints, FormulaAndDegenerate) {
    const auto [a, b] = b1_b2(0.25);
    EXPECT_NEAR(a, 12 * pi, 1e-12);
    EXPECT_NEAR(b, 20 * pi, 1e-12);
    EXPECT_NEAR(a, 37.699, 1e-3);
    EXPECT_NEAR(b, 62.832, 1e-3);
    const auto [c, d] = b1_b2(0.5);
    EXPECT_NEAR(c, 6 * pi, 1e-12);
    EXPECT_NEAR(d, 10 * pi, 1e-12);
    EXPECT_THROW(b1_b2(0.0), DegenerateT2);
}

TEST(FEvalForm, QuadratureAndBound) {
    const double t2 = 0.25, alpha = 52;
    const double b = 2.0;
    const auto r = integrate(
        [&](double y) {
            const double u = y - b / 2;
            const double c = std::cos(t2 * u), s = std::sin(t2 * u);
            const double C = std::cosh(alpha * t2 * u), S = std::sinh(alpha * t2 * u);
            return c * c * C * C + s * s * S * S;
        },
        0.0, b, identity_quadrature<double>());
    EXPECT_LT(rel(F_eval(b, t2, alpha), r.value), 1e-10);
    EXPECT_GT(F_eval(12 * pi, t2, alpha), F_lower_bound(12 * pi, t2));
    EXPECT_GT(F_lower_bound(12 * pi, t2), 0);
    EXPECT_LT(F_eval(1e-9, t2, alpha), 1e-8);
}

TEST(FEvalForm, PositiveOverAlphaGrid) {
    for (double alpha : {12.001, 13.0, 20.0, 52.0, 100.0}) {
        for (double t2 : {0.1, 0.25, 0.45}) {
            for (int k = 0; k <= 100; ++k) {
                const Extended b = from_double<Extended>((3 * pi + 2 * pi * k / 100) / t2);
                const Extended T2 = from_double<Extended>(t2);
                const Extended F = F_eval(b, T2, from_double<Extended>(alpha));
                ASSERT_GT(F, F_lower_bound(b, T2));
                ASSERT_GT(F_lower_bound(b, T2), 0);
            }
        }
    }
}

TEST(GEval, RejectsNonPositiveWidth) { EXPECT_THROW(G_eval(0.0, 13.0, 0.25, identity_quadrature<double>()), DomainError); }

TEST(Identities, FIsMinusTwoT1T2H) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> t1(6.5, 30), t2(-0.5, 0.5), b(0.1, 8), le(std::log(0.01), std::log(10.0));
    for (int i = 0; i < 100; ++i) {
        const double a = t1(rng), c = t2(rng), d = b(rng), e = std::exp(le(rng));
        const auto f = f_both(d, e, a, c);
        const double h = F_closed(d, a, c) + G_closed(d, a, c) / e;
        EXPECT_LE(std::abs(f.expanded + 2 * a * c * h), 1e-11 * (1 + f.scale));
    }
}

TEST(Identities, QIsMinusT1T2G) {
    std::mt19937_64 rng(78);
    std::uniform_real_distribution<double> t1(6.5, 30), t2(-0.5, 0.5), b(0.1, 8);
    for (int i = 0; i < 100; ++i) {
        const double a = t1(rng), c = t2(rng), d = b(rng);
        const auto q = q_value(d, a, c);
        EXPECT_LE(std::abs(q.value + a * c * G_closed(d, a, c)), 1e-11 * (1 + q.scale));
    }
}

TEST(SelectEps, CandidateBracket) {
    const auto& c = candidate();
    const auto& s = c.selection;
    EXPECT_GT(s.eps1, 0);
    EXPECT_GT(c.model.f(s.b1, s.eps1), 0);
    EXPECT_LT(c.model.f(s.b2, s.eps1), 0);
    EXPECT_GT(c.model.f(s.b1, s.eps1 / 10), 0);
    EXPECT_LT(c.model.f(s.b2, s.eps1 / 10), 0);
    EXPECT_GT(s.Q1, 0);
    EXPECT_LT(s.Q2, 0);
}

TEST(SelectEps, PremiseFailureIsReported) {
    auto m = positive_g_model();
    m.Q = [](const double&) { return -1.0; };
    EXPECT_THROW(select_eps(m, 1.0, 3.0), PremiseFailed);
}

TEST(FindB0, CandidateTrace) {
    const auto& c = candidate();
    const auto& tr = c.trace;
    EXPECT_GT(tr.b0, 12 * pi_v<Extended>());
    EXPECT_LT(tr.b0, 20 * pi_v<Extended>());
    EXPECT_TRUE(tr.f_within_tolerance);
    EXPECT_LT(abs(tr.f_at_b0), tr.f_tolerance);
    EXPECT_LE(tr.eps0, tr.eps1);
    EXPECT_GT(tr.bisection_steps, 0);
    // Independent re-evaluation of f and h at the returned point.
    EXPECT_EQ(c.model.f(tr.b0, tr.eps0), tr.f_at_b0);
    const Extended h = F_closed(tr.b0, c.t1, c.t2) + G_closed(tr.b0, c.t1, c.t2) / tr.eps0;
    EXPECT_EQ(h, tr.h_at_b0);
}

TEST(FindB0, CandidateOutcomeFollowsFromTheIdentity) {
    // f = -2 t1 t2 h: a zero of f is a zero of h, so the h check cannot pass at a root of f.
    const auto& tr = candidate().trace;
    EXPECT_EQ(tr.case_label, CaseLabel::interior_zero_q_nonpositive);
    EXPECT_FALSE(tr.h_nonzero);
    EXPECT_TRUE(tr.b_prime.has_value());
    ASSERT_TRUE(tr.eps0_min_rule.has_value());
    EXPECT_FALSE(tr.min_rule_keeps_bracket);
}

TEST(FindB0, TraceReplay) {
    const auto& c = candidate();
    const auto r = trace_replay(c.model, c.trace);
    EXPECT_TRUE(r.ok) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GE(r.checked.size(), 10u);
}

TEST(FindB0, PositiveGEverywhere) {
    const auto m = positive_g_model();
    const auto sel = select_eps(m, 1.0, 3.0);
    EXPECT_DOUBLE_EQ(sel.eps1, 0.5);
    EXPECT_FALSE(sel.eps2.has_value());
    const auto tr = find_b0(m, sel);
    EXPECT_EQ(tr.case_label, CaseLabel::g_positive_everywhere);
    EXPECT_EQ(tr.eps0, tr.eps1);
    EXPECT_GT(tr.h_at_b0, 0);
    EXPECT_TRUE(tr.h_nonzero);
    EXPECT_NEAR(tr.b0, 1.875, 1e-8);
    EXPECT_TRUE(trace_replay(m, tr).ok);
}

TEST(FindB0, BisectionFindsSignChange) {
    const auto m = positive_g_model();
    const auto tr = find_b0(m, select_eps(m, 1.0, 3.0));
    EXPECT_GT(m.f(tr.interval_lo, tr.eps0), 0);
    EXPECT_LT(m.f(tr.interval_hi, tr.eps0), 0);
    EXPECT_TRUE(tr.f_within_tolerance);
}

TEST(Verdict, RealAxisIsDegenerate) {
    const auto v = verdict(ZeroCandidate{14.134725, 0});
    EXPECT_TRUE(v.degenerate);
    EXPECT_EQ(v.conclusion, Conclusion::t2_must_be_zero);
    EXPECT_EQ(v.implied_im_t_squared, 0);
    EXPECT_FALSE(v.trace.has_value());
}

TEST(Verdict, RejectsSmallRealPart) { EXPECT_THROW(verdict(ZeroCandidate{6.0, 0.25}), InvariantViolation); }

TEST(Verdict, OffAxisCandidateIsInconclusive) {
    const auto v = verdict(ZeroCandidate{14.134725, 0.1});
    EXPECT_FALSE(v.degenerate);
    EXPECT_DOUBLE_EQ(v.implied_im_t_squared, 2 * 14.134725 * 0.1);
    ASSERT_TRUE(v.trace.has_value());
    ASSERT_TRUE(v.replay.has_value());
    EXPECT_TRUE(v.replay->ok);
    EXPECT_TRUE(v.trace->f_within_tolerance);
    EXPECT_EQ(v.conclusion, Conclusion::inconclusive);
    ASSERT_TRUE(v.f_plus_2t1t2h_relative.has_value());
    EXPECT_LT(*v.f_plus_2t1t2h_relative, 1e-30);
}

TEST(Verdict, NegativeCandidateIsReflected) {
    const auto v = verdict(ZeroCandidate{-13, -0.25});
    ASSERT_TRUE(v.trace.has_value());
    EXPECT_EQ(v.trace->b0, candidate().trace.b0);
    EXPECT_DOUBLE_EQ(v.implied_im_t_squared, 2 * 13 * 0.25);
}
