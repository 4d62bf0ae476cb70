#include "xi_audit/identity/fg_terms.hpp"
#include "xi_audit/identity/identity_audit.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace xi_audit;

namespace {

using C = Complex<double>;

ConstructionParams<double> params(C t, double b, double eps) {
    ConstructionParams<double> p;
    p.t = t;
    p.b = b;
    p.eps = eps;
    return p;
}

double rel(const C& a, const C& b) { return abs(a - b) / std::max(abs(b), 1e-300); }
double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const QuadratureSpec quad = identity_quadrature<double>();

}  // namespace

TEST(QuadraticWeightTerm, RealTClosedMatchesQuadrature) {
    const auto p = params(C(2), 2, 1);
    EXPECT_LT(rel(quadratic_weight_term_closed(p).total(), quadratic_weight_term_quadrature(p, quad)), 1e-11);
}

TEST(QuadraticWeightTerm, ComplexTClosedMatchesQuadrature) {
    const auto p = params(C(13, 0.25), 1, 0.1);
    EXPECT_LT(rel(quadratic_weight_term_closed(p).total(), quadratic_weight_term_quadrature(p, quad)), 1e-10);
}

TEST(QuadraticWeightTerm, PowersOfInverseEps) {
    const auto a = quadratic_weight_term_closed(params(C(13, 0.25), 1, 0.1));
    const auto b = quadratic_weight_term_closed(params(C(13, 0.25), 1, 0.2));
    EXPECT_LT(rel(b.inverse_eps_part * 2.0, a.inverse_eps_part), 1e-14);
    EXPECT_LT(rel(b.inverse_eps_sq_part * 4.0, a.inverse_eps_sq_part), 1e-14);
}

TEST(MeanTerm, RealForRealT) {
    const auto m = mean_term_closed(params(C(3), 2, 0.5));
    EXPECT_EQ(m.im, 0);
}

TEST(MeanTerm, ComplexTClosedMatchesQuadrature) {
    const auto p = params(C(13, 0.25), 1, 0.1);
    EXPECT_LT(rel(mean_term_closed(p), mean_term_quadrature(p, quad)), 1e-10);
}

TEST(MeanTerm, VanishesAsIntervalShrinks) {
    EXPECT_LT(abs(mean_term_closed(params(C(13, 0.25), 1e-9, 0.1))), 1e-6);
}

TEST(BoundaryProduct, ExpandedMatchesDirect) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> t1(0.5, 20), t2(-0.45, 0.45), b(0.1, 5), e(0.05, 5);
    for (int i = 0; i < 50; ++i) {
        const auto p = params(C(t1(rng), t2(rng)), b(rng), e(rng));
        EXPECT_LT(rel(boundary_term_expanded(p), boundary_term_direct(p)), 1e-12);
    }
}

TEST(BoundaryProduct, DirectScalarValue) {
    // 2 v(b) v'(b) with v(b) = ch 2 + 1 and v'(b) = 2 sh 2 + 2.
    const double expected = 2 * (std::cosh(2.0) + 1) * (2 * std::sinh(2.0) + 2);
    EXPECT_LT(rel(boundary_term_expanded(params(C(2), 2, 1)).re, expected), 1e-14);
}

TEST(BoundaryProduct, LargeEpsLimitIsDoubleAngle) {
    const double t = 1.7, b = 2.2;
    const auto r = boundary_term_expanded(params(C(t), b, 1e12));
    EXPECT_LT(rel(r.re, t * std::sinh(t * b)), 1e-10);
}

TEST(IdentityResidual, ComplexCandidate) {
    const auto r = identity_residual(params(C(13, 0.25), 1, 0.1), quad);
    EXPECT_LT(abs(r.residual), 1e-10 * r.scale);
}

TEST(IdentityResidual, RealZeroOrdinate) {
    const auto r = identity_residual(params(C(14.134725), 3, 0.5), quad);
    EXPECT_LT(abs(r.residual), 1e-10 * r.scale);
}

TEST(IdentityResidual, SmallT) {
    const auto r = identity_residual(params(C(0.001), 2, 0.7), quad);
    EXPECT_LT(abs(r.residual), 1e-10 * r.scale);
}

TEST(IdentityResidual, RandomPointsProperty) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> t1(6.5, 30), t2(-0.5, 0.5), b(0.1, 10), le(std::log(0.01), std::log(10.0));
    for (int i = 0; i < 20; ++i) {
        const auto p = params(C(t1(rng), t2(rng)), b(rng), std::exp(le(rng)));
        const auto r = identity_residual(p, quad);
        EXPECT_LT(abs(r.residual), 1e-9 * r.scale);
    }
}

TEST(IdentityResidual, ExtendedPrecisionTightensResidual) {
    ConstructionParams<Extended> p;
    p.t = Complex<Extended>(Extended(13), Extended("0.25"));
    p.b = Extended(1);
    p.eps = Extended("0.1");
    const auto r = identity_residual(p, identity_quadrature<Extended>());
    EXPECT_LT(to_double(Extended(abs(r.residual) / r.scale)), 1e-30);
}

TEST(IdentityResidual, RequiresReducedForm) {
    auto p = params(C(13, 0.25), 1, 0.1);
    p.xi_value = C(0.1);
    EXPECT_THROW(identity_residual(p, quad), DomainError);
}

TEST(ImaginaryPart, MatchesIndependentQuadrature) {
    // Im P with P read off the boundary identity, every integral by mpmath tanh-sinh at 50 digits.
    struct Case {
        double t1, t2, b, eps, f, h;
    };
    const Case cases[] = {
        {13, 0.25, 2, 0.1, -24490310347.9939409535835242086, 3767740053.53752937747424756697},
        {14.134725, 0.1, 3, 0.5, -130277458684859460.502300284027, 46084185820686096.6570529353917},
        {7, -0.3, 5, 2, 237902383712696.081689969282862, 56643424693499.0691652681150548},
    };
    for (const auto& c : cases) {
        const auto p = params(C(c.t1, c.t2), c.b, c.eps);
        const auto P = p_closed(p);
        EXPECT_LT(rel(P.im, c.f), 1e-10) << c.t1;
        const auto h = h_decompose(p, quad);
        EXPECT_LT(rel(h.h_quadrature, c.h), 1e-10) << c.t1;
        EXPECT_LT(rel(h.h_closed, c.h), 1e-10) << c.t1;
    }
}

TEST(HDecomposition, MatchesQuadrature) {
    const auto h = h_decompose(params(C(13, 0.25), 2, 1), quad);
    EXPECT_LE(std::abs(h.h_quadrature - h.h_closed), 1e-10 * std::max(1.0, std::abs(h.h_quadrature)));
    EXPECT_LT(rel(h.quartic_integral_quadrature, h.quartic_integral_closed), 1e-12);
}

TEST(HDecomposition, RandomPointsProperty) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> t1(6.5, 30), t2(-0.5, 0.5), b(0.1, 10), le(std::log(0.01), std::log(10.0));
    for (int i = 0; i < 20; ++i) {
        const auto p = params(C(t1(rng), t2(rng)), b(rng), std::exp(le(rng)));
        const auto h = h_decompose(p, quad);
        EXPECT_LE(std::abs(h.h_quadrature - h.h_closed), 1e-10 * std::max(1.0, std::abs(h.h_quadrature)));
    }
}

TEST(HDecomposition, PrintedVariantsDisagree) {
    // The printed F carries half the sine weight and the printed h uses (b/2)²; both differ measurably
    // once b/2 != 1 and the sine term is not swamped by sh(t1 b).
    const auto h = h_decompose(params(C(0.5, 0.4), 3, 0.5), quad);
    EXPECT_GT(rel(h.F_printed_value, h.F_value), 1e-10);
    EXPECT_GT(std::abs(h.h_square_exponent - h.h_quadrature), 1e-10 * std::abs(h.h_quadrature));
}

TEST(FClosedForm, MatchesIndependentQuadrature) {
    // mpmath tanh-sinh of |ch(t(y - b/2))|².
    EXPECT_LT(rel(F_closed(2.0, 13.0, 0.25), 3764030951.51344269778093078491), 1e-12);
    EXPECT_LT(rel(F_closed(2.0, 2.0, 0.0), 7.8224792992819381122270678977), 1e-14);
    const Extended b = 12 * pi_v<Extended>();
    const Extended F = F_closed(b, Extended(13), Extended("0.25"));
    EXPECT_LT(to_double(Extended(abs(F / Extended("1.33877580720244053790618948492e+211") - 1))), 1e-25);
}

TEST(FClosedForm, EqualsTrigHyperbolicQuadrature) {
    const double t1 = 13, t2 = 0.25, b = 2;
    const auto r = integrate(
        [&](double y) {
            const double u = y - b / 2;
            const double c = std::cos(t2 * u), s = std::sin(t2 * u);
            return c * c * std::cosh(t1 * u) * std::cosh(t1 * u) + s * s * std::sinh(t1 * u) * std::sinh(t1 * u);
        },
        0.0, b, quad);
    EXPECT_LT(rel(F_closed(b, t1, t2), r.value), 1e-10);
}

TEST(FClosedForm, PositiveAboveBoundAtFirstEndpoint) {
    const double t2 = 0.25, alpha = 52;
    const double b = 3 * pi_v<double>() / t2;
    const double F = F_closed(b, alpha * t2, t2);
    const double bound = (b - 1 / t2) / 4;
    EXPECT_GT(bound, 0);
    EXPECT_GT(F, bound);
    EXPECT_GT(bound, (12 * pi_v<double>() - 4) / 4 - 1e-12);
}

TEST(FClosedForm, VanishesAsIntervalShrinks) { EXPECT_LT(F_closed(1e-9, 13.0, 0.25), 1e-8); }

TEST(GTerm, MatchesIndependentQuadrature) {
    // G = ε(h - F) at ε = 1 from mpmath quadrature.
    EXPECT_LT(rel(G_closed(2.0, 13.0, 0.25), 370910.202408667989921330545038), 1e-9);
    EXPECT_LT(rel(G_quadrature(2.0, 13.0, 0.25, quad), 370910.202408667989921330545038), 1e-9);
    EXPECT_LT(rel(G_closed(5.0, 7.0, 0.3), 174221749.761337987219515682782), 1e-10);
}

TEST(GTerm, ClosedMatchesQuadratureProperty) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> t1(0.1, 30), t2(-0.5, 0.5), b(0.05, 10);
    for (int i = 0; i < 50; ++i) {
        const double a = t1(rng), c = t2(rng), d = b(rng);
        EXPECT_LE(std::abs(G_closed(d, a, c) - G_quadrature(d, a, c, quad)), 1e-10 * G_scale(d, a, c)) << a << " " << d;
    }
}

TEST(GTerm, RealTLeavesOnlyFirstIntegral) {
    const double t1 = 3, b = 2;
    const auto r = integrate(
        [&](double y) {
            const double u = y - b / 2;
            return t1 * std::cosh(t1 * u) * u * u;
        },
        0.0, b, quad);
    EXPECT_LT(rel(G_closed(b, t1, 0.0), r.value), 1e-12);
    EXPECT_GT(r.value, 0);
}

TEST(GTerm, DecompositionConsistency) {
    const auto p = params(C(13, 0.25), 2, 0.3);
    const auto h = h_decompose(p, quad);
    EXPECT_LT(rel((h.h_quadrature - h.F_value) * p.eps, h.G_value), 1e-8);
}

TEST(GTerm, OddInRealPart) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> t1(1, 20), t2(-0.45, 0.45), b(0.1, 6);
    for (int i = 0; i < 10; ++i) {
        const double a = t1(rng), c = t2(rng), d = b(rng);
        EXPECT_NEAR(G_closed(d, -a, c), -G_closed(d, a, c), 1e-12 * G_scale(d, a, c));
    }
}
