#include "xi_audit/cli/commands.hpp"
#include "xi_audit/report/audit_report.hpp"
#include "xi_audit/report/svg.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <gtest/gtest.h>

#include <sstream>

using namespace xi_audit;

namespace {

void expect_well_formed_xml(const std::string& text) {
    std::istringstream in(text);
    boost::property_tree::ptree tree;
    EXPECT_NO_THROW(boost::property_tree::read_xml(in, tree));
    EXPECT_EQ(tree.count("svg"), 1u);
}

}  // namespace

TEST(JsonNumber, FiniteAndNonFinite) {
    EXPECT_TRUE(json_number(1.5).is_number());
    EXPECT_EQ(json_number(INFINITY), "inf");
    EXPECT_TRUE(json_number(Extended("0.25")).is_number());
    const Json tiny = json_number(Extended("1e-400"));
    ASSERT_TRUE(tiny.is_string());
    EXPECT_EQ(tiny.get<std::string>().substr(0, 4), "1.00");
    EXPECT_EQ(json_number(Extended(0)), 0.0);
}

TEST(Checks, StatusSemantics) {
    EXPECT_EQ(make_check("a", 1, 1, 0.5, 1.0, "x").status, CheckStatus::pass);
    EXPECT_EQ(make_check("a", 1, 1, 1.0, 1.0, "x").status, CheckStatus::pass);
    EXPECT_EQ(make_check("a", 1, 2, 2.0, 1.0, "x").status, CheckStatus::fail);
    EXPECT_EQ(make_check("a", 1, 2, 2.0, 1.0, "x", CheckStatus::inconclusive).status, CheckStatus::inconclusive);
    EXPECT_EQ(make_boolean_check("b", true, true, true, "x").status, CheckStatus::pass);
    EXPECT_EQ(make_boolean_check("b", true, false, false, "x").status, CheckStatus::fail);
}

TEST(Checks, ExitCodes) {
    AuditReport r;
    r.add(make_boolean_check("ok", 1, 1, true, "x"));
    EXPECT_EQ(r.exit_code(), 0);
    r.add(make_boolean_check("maybe", 1, 1, false, "x", CheckStatus::inconclusive));
    EXPECT_EQ(r.exit_code(), 3);
    r.add(make_boolean_check("bad", 1, 1, false, "x"));
    EXPECT_EQ(r.exit_code(), 1);
}

TEST(Serialize, SortedKeysAndStableBytes) {
    AuditReport r;
    r.command = "demo";
    r.params = Json{{"z", 1}, {"a", 0.1}};
    r.add(make_check("c", 0.1, 0.1, 0, 1e-12, "anchor"));
    const auto a = serialize(r);
    const auto b = serialize(r);
    EXPECT_EQ(a, b);
    EXPECT_LT(a.find("\"a\""), a.find("\"z\""));
    EXPECT_NE(a.find("0.1"), std::string::npos);
    EXPECT_NE(a.find("\"wall_time_ms\": 0"), std::string::npos);
    EXPECT_NE(a.find("\"paper_anchor\": \"anchor\""), std::string::npos);
}

TEST(Serialize, CommandReportsAreDeterministic) {
    PrecisionContext ctx;
    const auto a = serialize(cli::eval_xi_report(13, 0.25, cli::XiChoice::both, ctx));
    const auto b = serialize(cli::eval_xi_report(13, 0.25, cli::XiChoice::both, ctx));
    EXPECT_EQ(a, b);
    const auto c = serialize(cli::audit_identity_report({13, 0.25, 1, 0.1}, ctx));
    const auto d = serialize(cli::audit_identity_report({13, 0.25, 1, 0.1}, ctx));
    EXPECT_EQ(c, d);
}

TEST(Csv, QuotingAndWidth) {
    const auto s = to_csv({"a", "b"}, {{"1", "x,y"}, {"say \"hi\"", "2"}});
    EXPECT_EQ(s, "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",2\n");
    EXPECT_THROW(to_csv({"a", "b"}, {{"1"}}), InvariantViolation);
}

TEST(Sweep, OneRowPerAlpha) {
    PrecisionContext ctx;
    const auto alphas = cli::linear_grid(13, 100, 10);
    ASSERT_EQ(alphas.size(), 10u);
    EXPECT_DOUBLE_EQ(alphas.front(), 13);
    EXPECT_DOUBLE_EQ(alphas.back(), 100);
    const auto r = cli::sweep(alphas, cli::SweepKind::signs, 0.25, 1, 0.1, 2, ctx);
    std::istringstream in(r.csv);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    EXPECT_EQ(lines, 11);
    EXPECT_EQ(r.csv.substr(0, r.csv.find('\n')), "index,alpha,command,checks,pass,fail,inconclusive,exit_code");
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(Sweep, WorkerCountDoesNotChangeOutput) {
    PrecisionContext ctx;
    const auto alphas = cli::linear_grid(13, 60, 4);
    EXPECT_EQ(cli::sweep(alphas, cli::SweepKind::signs, 0.25, 1, 0.1, 1, ctx).csv,
              cli::sweep(alphas, cli::SweepKind::signs, 0.25, 1, 0.1, 3, ctx).csv);
}

TEST(Svg, EmptyPlotIsWellFormed) {
    SvgPlot p;
    p.title = "empty <plot> & more";
    expect_well_formed_xml(render_svg(p));
}

TEST(Svg, NonFiniteDataIsWellFormed) {
    SvgPlot p;
    p.series.push_back({"s", {0, 1, 2}, {1, NAN, INFINITY}});
    expect_well_formed_xml(render_svg(p));
}

TEST(Svg, SignedLogPlot) {
    SvgPlot p;
    p.signed_log = true;
    p.series.push_back({"q", {1, 2, 3}, {-1e200, 0, 1e250}});
    const auto s = render_svg(p);
    expect_well_formed_xml(s);
    EXPECT_NE(s.find("polyline"), std::string::npos);
}
