#pragma once

#include "xi_audit/core/error.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace xi_audit {

enum class PrecisionMode { binary64, extended_decimal };

/// Working precision, tolerances and overflow strategy shared by every evaluation.
struct PrecisionContext {
    PrecisionMode mode = PrecisionMode::binary64;
    int digits = 50;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double overflow_threshold = 1e300;

    /// Arguments of e^x beyond this force the extended path.
    static constexpr double extended_switch_exponent = 300.0;

    void validate() const {
        if (mode == PrecisionMode::extended_decimal && (digits < 16 || digits > 50)) {
            throw InvariantViolation("extended precision digits must lie in [16, 50]");
        }
        if (!(abs_tol > 0) || !(rel_tol > 0)) {
            throw InvariantViolation("abs_tol and rel_tol must be positive");
        }
        if (!(overflow_threshold > 1)) {
            throw InvariantViolation("overflow_threshold must exceed 1");
        }
    }

    bool extended() const { return mode == PrecisionMode::extended_decimal; }

    /// True when an exponent argument of this size must not be evaluated in binary64.
    static bool needs_extended(double exponent_argument) {
        return exponent_argument > extended_switch_exponent;
    }

    std::string label() const {
        return extended() ? "dec:" + std::to_string(digits) : "f64";
    }

    /// Accepts "f64" or "dec:<digits>".
    static PrecisionContext parse(std::string_view text) {
        PrecisionContext ctx;
        if (text == "f64") {
            return ctx;
        }
        constexpr std::string_view prefix = "dec:";
        if (text.substr(0, prefix.size()) == prefix) {
            auto digits_text = text.substr(prefix.size());
            int d = 0;
            auto [ptr, ec] = std::from_chars(digits_text.data(), digits_text.data() + digits_text.size(), d);
            if (ec != std::errc{} || ptr != digits_text.data() + digits_text.size()) {
                throw UsageError("precision digits are not an integer: " + std::string(text));
            }
            ctx.mode = PrecisionMode::extended_decimal;
            ctx.digits = d;
            try {
                ctx.validate();
            } catch (const InvariantViolation& e) {
                throw UsageError(e.what());
            }
            return ctx;
        }
        throw UsageError("precision must be f64 or dec:<digits>, got " + std::string(text));
    }

    /// Default from XI_AUDIT_PREC, else binary64.
    static PrecisionContext from_env() {
        const char* env = std::getenv("XI_AUDIT_PREC");
        if (env == nullptr || *env == '\0') {
            return PrecisionContext{};
        }
        return parse(env);
    }
};

}  // namespace xi_audit
