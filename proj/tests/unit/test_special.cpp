#include "xi_audit/special/gamma.hpp"
#include "xi_audit/special/xi.hpp"
#include "xi_audit/special/zeta.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace xi_audit;

namespace {

using C = Complex<double>;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Ξ(t) = ξ(½ + it) from mpmath's zeta and gamma at 50 digits.
struct XiReference {
    double t1, t2, re, im;
};
const XiReference xi_reference[] = {
    {0, 0, 0.497120778188314109912773739685, 0},
    {5, 0, 0.275549997344204192229042338096, 0},
    {10, 0, 0.0379678503109356842240805218018, 0},
    {20, 0, -0.0000366554277556094568322323790846, 0},
    {30, 0, -0.0000000150166224798020742958688562891, 0},
    {13, 0.25, 0.0028060794424237916724467471355, -0.00100458035279388787340110751626},
    {14, 0.2, 0.000166182563633223201811829602359, -0.000320224112853522049739078324412},
    {25, 0.4, -0.000000105915609460829648318254212948, -0.000000505268353463541572617988396019},
};

}  // namespace

TEST(Zeta, AtTwo) {
    // Oracle: Σ 1/n² by Boost's independent implementation, and π²/6.
    const auto z = zeta(C(2));
    EXPECT_NEAR(z.re, boost::math::zeta(2.0), 1e-14);
    EXPECT_NEAR(z.re, 1.64493406684822643647241516665, 1e-14);
    EXPECT_NEAR(z.im, 0, 1e-15);
}

TEST(Zeta, AtOneHalf) {
    const auto z = zeta(C(0.5));
    EXPECT_NEAR(z.re, -1.46035450880958681288949915252, 1e-13);
    EXPECT_NEAR(z.re, boost::math::zeta(0.5), 1e-13);
}

TEST(Zeta, PoleAtOne) { EXPECT_THROW(zeta(C(1)), PoleAtOne); }

TEST(Zeta, FunctionalEquationBranchAgreesWithBoost) {
    for (double s : {-0.5, -2.5, 0.25, 0.3}) {
        EXPECT_LT(rel(zeta(C(s)).re, boost::math::zeta(s)), 1e-12) << s;
    }
}

TEST(Zeta, TrivialZero) { EXPECT_NEAR(zeta(C(-2)).re, 0, 1e-13); }

TEST(Zeta, ExtendedMatchesFiftyDigitReference) {
    const auto z = zeta(Complex<Extended>(Extended("0.5")));
    EXPECT_LT(to_double(Extended(abs(z.re - Extended("-1.46035450880958681288949915252")))), 1e-28);
}

TEST(Gamma, Factorial) { EXPECT_NEAR(gamma(C(5)).re, 24, 1e-12); }

TEST(Gamma, HalfInteger) { EXPECT_NEAR(gamma(C(0.5)).re, std::sqrt(pi_v<double>()), 1e-14); }

TEST(Gamma, QuarterAgainstReference) {
    EXPECT_NEAR(gamma(C(0.25)).re, 3.62560990822190831193068515587, 1e-13);
    EXPECT_NEAR(gamma(C(0.25)).re, boost::math::tgamma(0.25), 1e-13);
}

TEST(Gamma, PolesAtNonPositiveIntegers) {
    EXPECT_THROW(gamma(C(0)), PoleAtNonPositiveInteger);
    EXPECT_THROW(gamma(C(-3)), PoleAtNonPositiveInteger);
}

TEST(Gamma, RealAxisAgainstBoost) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-4.9, 20);
    for (int i = 0; i < 100; ++i) {
        const double s = d(rng);
        if (std::abs(s - std::round(s)) < 1e-3 && s < 0.5) continue;
        EXPECT_LT(rel(gamma(C(s)).re, boost::math::tgamma(s)), 1e-12) << s;
    }
}

TEST(Gamma, RecurrenceProperty) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> d(-3, 6);
    for (int i = 0; i < 50; ++i) {
        const C s(d(rng), d(rng) * 3);
        const auto lhs = gamma(s + C(1));
        const auto rhs = s * gamma(s);
        EXPECT_LT(abs(lhs - rhs) / abs(rhs), 1e-12);
    }
}

TEST(Gamma, ExtendedQuarter) {
    const auto g = gamma(Complex<Extended>(Extended("0.25")));
    EXPECT_LT(to_double(Extended(abs(g.re - Extended("3.62560990822190831193068515587")))), 1e-28);
}

TEST(XiProduct, AtOneHalf) { EXPECT_NEAR(xi_product(C(0.5)).re, 0.497120778188314109912773739685, 1e-14); }

TEST(XiProduct, FunctionalEquationProperty) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> re(-2, 3), im(-30, 30);
    PrecisionContext ctx;
    for (int i = 0; i < 50; ++i) {
        const C s(re(rng), im(rng));
        const auto a = xi_product(s);
        const auto b = xi_product(C(1) - s);
        EXPECT_LT(abs(a - b), ctx.abs_tol * std::max(1.0, abs(a))) << s.re << " " << s.im;
    }
}

TEST(XiProduct, FirstZero) {
    EXPECT_LT(abs(xi_product(C(0.5, 14.134725))), 1e-6);
    // mpmath: Ξ(14.134725) = 1.9598e-10.
    EXPECT_NEAR(xi_t(C(14.134725), XiMethod::product).re, 1.95979282808720370423727537042e-10, 1e-15);
}

TEST(XiProduct, MatchesReferenceTable) {
    for (const auto& r : xi_reference) {
        const auto v = xi_t(C(r.t1, r.t2), XiMethod::product);
        EXPECT_NEAR(v.re, r.re, 1e-13 * (1 + std::abs(r.re))) << r.t1;
        EXPECT_NEAR(v.im, r.im, 1e-13 * (1 + std::abs(r.re))) << r.t1;
    }
}

TEST(XiProduct, ExtendedMatchesReferenceToThirtyDigits) {
    const auto v = xi_t(Complex<Extended>(Extended(13), Extended("0.25")), XiMethod::product);
    EXPECT_LT(to_double(Extended(abs(v.re - Extended("0.0028060794424237916724467471355")))), 1e-30);
    EXPECT_LT(to_double(Extended(abs(v.im - Extended("-0.00100458035279388787340110751626")))), 1e-30);
}

TEST(Phi, DecaysSuperExponentially) { EXPECT_LT(phi(10.0), 1e-300); }

TEST(Phi, AtZeroIsPositiveAndTruncationStable) {
    PhiSeriesSpec fifty, hundred;
    hundred.n_max = 100;
    const double a = phi(0.0, fifty);
    EXPECT_GT(a, 0);
    EXPECT_DOUBLE_EQ(a, phi(0.0, hundred));
    EXPECT_NEAR(a, 0.893393800934246888173969334109, 1e-15);
}

TEST(Phi, FirstTermDominatesAtOne) {
    // n = 1 term of the series alone, and the full series, both from mpmath.
    const double full = phi(1.0);
    EXPECT_GT(full, 0);
    EXPECT_LT(rel(full, 0.000000275562788127126753104716548657), 1e-10);
    EXPECT_LT(rel(full, 0.00000027556278812712675310471654866), 1e-13);
}

TEST(Phi, RejectsNegativeArgument) { EXPECT_THROW(phi(-0.1), DomainError); }

TEST(XiFourier, AtZeroEqualsProduct) {
    const auto f = xi_fourier(C(0));
    EXPECT_NEAR(f.re, xi_product(C(0.5)).re, 1e-12);
}

TEST(XiFourier, RealArgumentGivesRealValue) {
    PrecisionContext ctx;
    for (double t : {0.5, 3.0, 17.0, 29.5}) {
        EXPECT_LT(std::abs(xi_fourier(C(t)).im), ctx.abs_tol);
    }
}

TEST(XiFourier, FirstZero) { EXPECT_LT(std::abs(xi_fourier(C(14.134725)).re), 1e-6); }

TEST(XiFourier, MatchesReferenceTable) {
    for (const auto& r : xi_reference) {
        const auto v = xi_t(C(r.t1, r.t2), XiMethod::fourier);
        EXPECT_NEAR(v.re, r.re, 1e-12 * (1 + std::abs(r.re))) << r.t1;
        EXPECT_NEAR(v.im, r.im, 1e-12 * (1 + std::abs(r.re))) << r.t1;
    }
}

TEST(XiFourier, RejectsImaginaryPartOutsideStrip) { EXPECT_THROW(xi_fourier(C(1, 0.5)), DomainError); }

TEST(XiFourier, TailBoundGuardsCutoff) {
    PhiSeriesSpec spec;
    spec.x_cutoff = 0.5;
    EXPECT_THROW(xi_fourier(C(1), spec), TailBoundViolated);
}

TEST(XiCrossMethod, AgreeAcrossRealGrid) {
    for (int k = 0; k <= 60; ++k) {
        const double t = 0.5 * k;
        const auto a = xi_t(C(t), XiMethod::product);
        const auto b = xi_t(C(t), XiMethod::fourier);
        EXPECT_LE(abs(a - b), 1e-8 * (1 + abs(a))) << t;
    }
}
