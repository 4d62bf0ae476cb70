#pragma once

#include "xi_audit/core/error.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/search/case_analysis.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace xi_audit {

using Json = nlohmann::json;

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

/// A JSON number when the value is a finite binary64, else its 17-significant-digit text.
inline Json json_number(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    return format_double(x);
}

inline Json json_number(const Extended& x) {
    const double d = to_double(x);
    if (std::isfinite(d) && (d != 0 || x == 0) && std::abs(d) >= 1e-300) {
        return d;
    }
    if (x == 0) {
        return 0.0;
    }
    return x.str(17, std::ios_base::scientific);
}

struct Check {
    std::string name;
    Json lhs;
    Json rhs;
    Json residual;
    Json tolerance;
    CheckStatus status = CheckStatus::fail;
    std::string paper_anchor;
};

/// residual ≤ tolerance passes; otherwise `otherwise` (fail unless the check can only be inconclusive).
inline Check make_check(std::string name, Json lhs, Json rhs, double residual, double tolerance, std::string anchor,
                        CheckStatus otherwise = CheckStatus::fail) {
    Check c{std::move(name), std::move(lhs), std::move(rhs), json_number(residual), json_number(tolerance),
            residual <= tolerance ? CheckStatus::pass : otherwise, std::move(anchor)};
    return c;
}

/// A yes/no check: residual 0 when it holds, 1 when it does not, tolerance 0.
inline Check make_boolean_check(std::string name, Json lhs, Json rhs, bool holds, std::string anchor,
                                CheckStatus otherwise = CheckStatus::fail) {
    return make_check(std::move(name), std::move(lhs), std::move(rhs), holds ? 0.0 : 1.0, 0.0, std::move(anchor),
                      otherwise);
}

struct AuditReport {
    std::string command;
    Json params = Json::object();
    std::vector<Check> checks;
    std::optional<Json> trace;
    long long wall_time_ms = 0;
    std::string precision_mode = "f64";

    void add(Check c) { checks.push_back(std::move(c)); }

    bool any(CheckStatus s) const {
        for (const auto& c : checks) {
            if (c.status == s) return true;
        }
        return false;
    }

    /// 0 when every check passes, 1 on any failure, 3 when the only non-passes are inconclusive.
    int exit_code() const {
        if (any(CheckStatus::fail)) return 1;
        if (any(CheckStatus::inconclusive)) return 3;
        return 0;
    }
};

inline Json to_json(const Check& c) {
    return Json{{"name", c.name},           {"lhs", c.lhs},
                {"rhs", c.rhs},             {"residual", c.residual},
                {"tolerance", c.tolerance}, {"status", to_string(c.status)},
                {"paper_anchor", c.paper_anchor}};
}

inline Json to_json(const AuditReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(to_json(c));
    }
    Json j{{"command", r.command},
           {"params", r.params},
           {"checks", checks},
           {"wall_time_ms", r.wall_time_ms},
           {"precision_mode", r.precision_mode}};
    j["trace"] = r.trace ? *r.trace : Json(nullptr);
    return j;
}

template <class Real>
Json to_json(const SearchTrace<Real>& t) {
    auto opt = [](const std::optional<Real>& v) { return v ? json_number(*v) : Json(nullptr); };
    Json zeros = Json::array();
    for (const auto& z : t.g_zeros) zeros.push_back(json_number(z));
    Json resel = Json::array();
    for (const auto& r : t.reselections) {
        resel.push_back(Json{{"where", r.where}, {"b", json_number(r.b)}, {"eps", json_number(r.eps)}});
    }
    return Json{{"case_label", to_string(t.case_label)},
                {"b_prime", opt(t.b_prime)},
                {"g_zeros", zeros},
                {"multi_zero_extension", t.multi_zero_extension},
                {"b1", json_number(t.b1)},
                {"b2", json_number(t.b2)},
                {"interval_lo", json_number(t.interval_lo)},
                {"interval_hi", json_number(t.interval_hi)},
                {"c0", json_number(t.c0)},
                {"eps1_full", json_number(t.eps1_full)},
                {"eps1", json_number(t.eps1)},
                {"eps2", opt(t.eps2)},
                {"eps0_min_rule", opt(t.eps0_min_rule)},
                {"min_rule_keeps_bracket", t.min_rule_keeps_bracket},
                {"eps0", json_number(t.eps0)},
                {"eps_reselections", resel},
                {"b0", json_number(t.b0)},
                {"f_at_b0", json_number(t.f_at_b0)},
                {"f_tolerance", json_number(t.f_tolerance)},
                {"f_within_tolerance", t.f_within_tolerance},
                {"Q_at_b0", json_number(t.Q_at_b0)},
                {"F_at_b0", json_number(t.F_at_b0)},
                {"G_at_b0", json_number(t.G_at_b0)},
                {"h_at_b0", json_number(t.h_at_b0)},
                {"h_threshold", json_number(t.h_threshold)},
                {"h_check", t.h_nonzero ? "nonzero" : "inconclusive"},
                {"bisection_steps", t.bisection_steps},
                {"notes", t.notes}};
}

/// Canonical text: keys sorted, two-space indent, shortest round-trip floats, trailing newline.
inline std::string serialize(const AuditReport& r) { return to_json(r).dump(2) + "\n"; }

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("write to " + path + " failed");
    }
}

inline void emit_report(const AuditReport& r, const std::string& path) { write_text(path, serialize(r)); }

/// CSV with the header first; cells containing ',', '"' or newlines are quoted.
inline std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    auto cell = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += ',';
            s += cell(r[i]);
        }
        return s + "\n";
    };
    std::string out = line(header);
    for (const auto& r : rows) {
        if (r.size() != header.size()) {
            throw InvariantViolation("CSV row width differs from the header");
        }
        out += line(r);
    }
    return out;
}

}  // namespace xi_audit
