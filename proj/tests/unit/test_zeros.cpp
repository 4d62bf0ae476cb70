#include "xi_audit/zeros/zero_finder.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace xi_audit;

namespace {

// Imaginary parts of the first three zeta zeros, mpmath zetazero at 50 digits.
const double reference_zeros[] = {14.1347251417346937904572519836, 21.0220396387715549926284795939,
                                  25.0108575801456887632137909926};

}  // namespace

TEST(ScanRealZeros, FindsFirstThreeOrdinates) {
    const auto z = scan_real_zeros(10, 30, 0.1);
    ASSERT_EQ(z.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(z[i].t1, reference_zeros[i], 1e-6);
        EXPECT_EQ(z[i].t2, 0);
    }
    EXPECT_NEAR(z[0].t1, 14.134725, 1e-6);
    EXPECT_NEAR(z[1].t1, 21.022040, 1e-6);
    EXPECT_NEAR(z[2].t1, 25.010858, 1e-6);
}

TEST(ScanRealZeros, NoneBelowTheFirst) {
    EXPECT_TRUE(scan_real_zeros(7, 13, 0.1).empty());
    // Ξ keeps one sign on a finer grid.
    const double first = detail::xi_real<double>(7.0, XiMethod::product, {});
    for (int k = 1; k <= 600; ++k) {
        const double v = detail::xi_real<double>(7.0 + 0.01 * k, XiMethod::product, {});
        EXPECT_GT(v * first, 0) << 7.0 + 0.01 * k;
    }
}

TEST(ScanRealZeros, BothRoutesGiveTheSameOrdinates) {
    ScanOptions f;
    f.method = XiMethod::fourier;
    const auto a = scan_real_zeros(10, 30, 0.1);
    const auto b = scan_real_zeros(10, 30, 0.1, f);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i].t1, b[i].t1, 1e-6);
    }
}

TEST(ScanRealZeros, ParallelMatchesSerial) {
    ScanOptions p;
    p.parallel = 3;
    const auto a = scan_real_zeros(10, 30, 0.05);
    const auto b = scan_real_zeros(10, 30, 0.05, p);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].t1, b[i].t1);
    }
}

TEST(ScanRealZeros, RejectsBadRange) {
    EXPECT_THROW(scan_real_zeros(5, 30, 0.1), DomainError);
    EXPECT_THROW(scan_real_zeros(20, 10, 0.1), DomainError);
    EXPECT_THROW(scan_real_zeros(10, 30, 0), DomainError);
}

TEST(ZeroCandidate, Invariants) {
    EXPECT_NO_THROW((ZeroCandidate{13, 0.25}.validate()));
    EXPECT_NO_THROW((ZeroCandidate{-13, -0.25}.validate()));
    EXPECT_THROW((ZeroCandidate{6, 0.25}.validate()), InvariantViolation);
    EXPECT_THROW((ZeroCandidate{13, 0.5}.validate()), InvariantViolation);
}

TEST(ZeroTable, ParsesOrdinates) {
    std::istringstream in("14.134725\n21.022040\n");
    const auto t = parse_zero_table(in, "inline");
    ASSERT_EQ(t.ordinates.size(), 2u);
    EXPECT_EQ(t.ordinates[0], 14.134725);
    EXPECT_EQ(t.source, "inline");
}

TEST(ZeroTable, SkipsCommentsAndBlankLines) {
    std::istringstream in("# header\n\n  14.1  \r\n# mid\n21.0\n");
    EXPECT_EQ(parse_zero_table(in, "x").ordinates.size(), 2u);
}

TEST(ZeroTable, ParseErrorCarriesLine) {
    std::istringstream in("14.134725\nabc\n");
    try {
        parse_zero_table(in, "x");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(ZeroTable, OrderError) {
    std::istringstream in("21.0\n14.1\n");
    EXPECT_THROW(parse_zero_table(in, "x"), OrderError);
}

TEST(ZeroTable, RejectsOrdinatesBelowSix) {
    std::istringstream in("5.5\n");
    EXPECT_THROW(parse_zero_table(in, "x"), ParseError);
}

TEST(ZeroTable, Nearest) {
    std::istringstream in("14.1\n21.0\n25.0\n");
    const auto t = parse_zero_table(in, "x");
    EXPECT_EQ(t.nearest(10), 0u);
    EXPECT_EQ(t.nearest(20), 1u);
    EXPECT_EQ(t.nearest(24), 2u);
    EXPECT_EQ(t.nearest(99), 2u);
}

TEST(ZeroTable, LoadsFileAndReportsMissing) {
    const auto t = load_zero_table(std::string(XI_AUDIT_TEST_DATA) + "/first_zeros.txt");
    ASSERT_EQ(t.ordinates.size(), 3u);
    EXPECT_NEAR(t.ordinates[2], reference_zeros[2], 1e-12);
    EXPECT_THROW(load_zero_table(std::string(XI_AUDIT_TEST_DATA) + "/missing.txt"), IoError);
}
