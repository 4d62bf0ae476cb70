#pragma once

#include "xi_audit/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace xi_audit::cli {

/// Flat JSON object of option values: {"t1": 13, "prec": "dec:40", "svg": true, "values": [1, 2]}.
/// Keys may use '_' or '-'.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override { return {}; }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        Json j;
        try {
            j = Json::parse(input);
        } catch (const Json::parse_error& e) {
            throw CLI::ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) {
            throw CLI::ConfigError("config must be a flat JSON object");
        }
        std::vector<CLI::ConfigItem> items;
        for (auto it = j.begin(); it != j.end(); ++it) {
            CLI::ConfigItem item;
            item.name = it.key();
            std::replace(item.name.begin(), item.name.end(), '_', '-');
            auto text = [&](const Json& v) -> std::string {
                if (v.is_string()) return v.get<std::string>();
                if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
                if (v.is_number_float()) return format_double(v.get<double>());
                if (v.is_number()) return v.dump();
                throw CLI::ConfigError("config value for '" + it.key() + "' must be a string, number or boolean");
            };
            if (it->is_array()) {
                for (const auto& v : *it) item.inputs.push_back(text(v));
            } else {
                item.inputs.push_back(text(*it));
            }
            items.push_back(std::move(item));
        }
        return items;
    }
};

struct Options {
    std::optional<double> t, t1, t2, b, eps, sigma;
    std::vector<std::string> alpha;
    std::string prec;
    std::string out;
    bool svg = false;
    int parallel = 1;
    bool timing = false;
    std::string method = "both";
    bool grid = false;
    std::optional<double> t_min, t_max, step;
    std::string file;
    std::string save;
    std::vector<std::string> values;
    std::optional<double> from, to;
    int count = 10;
    std::string kind = "signs";
    std::optional<int> points;
    unsigned seed = 20240611;
};

namespace detail {

inline std::string svg_path(const Options& o, const std::string& command) {
    if (o.out.empty()) return command + ".svg";
    std::filesystem::path p(o.out);
    p.replace_extension(".svg");
    return p.string();
}

inline void emit(const AuditReport& r, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << serialize(r);
        return;
    }
    emit_report(r, o.out);
    for (const auto& c : r.checks) {
        out << to_string(c.status) << "  " << c.name << "\n";
    }
}

inline std::vector<Rational> alpha_list(const Options& o) {
    if (o.alpha.empty()) return symbolic::standard_alphas();
    std::vector<Rational> a;
    for (const auto& s : o.alpha) {
        a.push_back(rational_from_decimal(s));
        if (!(a.back() > 0)) throw UsageError("--alpha must be positive");
    }
    return a;
}

inline double need(const std::optional<double>& v, double fallback) { return v ? *v : fallback; }

}  // namespace detail

/// Parses argv, runs one subcommand, writes its report(s). Exit codes: 0 all checks pass,
/// 1 any check fails, 2 usage or configuration error, 3 only inconclusive checks besides passes.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Numerical and symbolic audit of a Xi-function zero argument"};
    app.require_subcommand(1);
    app.fallthrough();
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file of flag values; flags given on the command line win");

    Options o;
    app.add_option("--t", o.t, "real t for eval-xi");
    app.add_option("--t1", o.t1, "real part of t");
    app.add_option("--t2", o.t2, "imaginary part of t");
    app.add_option("--b", o.b, "interval length b");
    app.add_option("--eps", o.eps, "parameter eps");
    app.add_option("--alpha", o.alpha, "alpha = t1/t2 (repeatable or comma separated)")->delimiter(',');
    app.add_option("--sigma", o.sigma, "sigma = b t2 / 2");
    app.add_option("--prec", o.prec, "f64 or dec:<digits> (default from XI_AUDIT_PREC, else f64)");
    app.add_option("--out", o.out, "report path (a directory for sweep)");
    app.add_flag("--svg", o.svg, "also write an SVG plot");
    app.add_option("--parallel", o.parallel, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timing", o.timing, "record wall time in the report (reports then differ run to run)");
    app.add_option("--method", o.method, "product, fourier or both");
    app.add_flag("--grid", o.grid, "eval-xi on t = t-min..t-max by step");
    app.add_option("--t-min", o.t_min, "grid start");
    app.add_option("--t-max", o.t_max, "grid end");
    app.add_option("--step", o.step, "grid step");
    app.add_option("--file", o.file, "zero table to load");
    app.add_option("--save", o.save, "write found zeros to this table file");
    app.add_option("--values", o.values, "sweep alpha values")->delimiter(',');
    app.add_option("--from", o.from, "sweep start alpha");
    app.add_option("--to", o.to, "sweep end alpha");
    app.add_option("--count", o.count, "sweep point count");
    app.add_option("--kind", o.kind, "sweep kind: signs or identity");
    app.add_option("--points", o.points, "random points for audit-identity / audit-symbolic");
    app.add_option("--seed", o.seed, "random seed");

    auto* eval_xi = app.add_subcommand("eval-xi", "Xi at t by the product and/or Fourier route");
    auto* find_zeros = app.add_subcommand("find-zeros", "real zeros of Xi by sign-change scan");
    auto* load_zeros = app.add_subcommand("load-zeros", "load a zero table and confirm each ordinate");
    auto* audit_identity = app.add_subcommand("audit-identity", "boundary identity and the h = F + G/eps split");
    auto* audit_symbolic = app.add_subcommand("audit-symbolic", "exact derivation of f, Q and g1..g4");
    auto* audit_signs = app.add_subcommand("audit-signs", "sign claims for g1..g4, Q(b1), Q(b2) and F");
    auto* verdict_cmd = app.add_subcommand("verdict", "eps selection and b0 search for a candidate zero");
    auto* sweep_cmd = app.add_subcommand("sweep", "one audit per alpha plus a CSV roll-up");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    auto finish = [&](AuditReport& r) {
        if (o.timing) {
            r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                                   started).count();
        }
    };

    try {
        PrecisionContext ctx = o.prec.empty() ? PrecisionContext::from_env() : PrecisionContext::parse(o.prec);
        ctx.validate();

        if (eval_xi->parsed()) {
            const auto choice = parse_xi_choice(o.method);
            AuditReport r;
            if (o.grid) {
                r = eval_xi_grid_report(detail::need(o.t_min, 0), detail::need(o.t_max, 30), detail::need(o.step, 0.5),
                                        ctx);
            } else {
                if (o.t && (o.t1 || o.t2)) throw UsageError("give either --t or --t1/--t2");
                const double t1 = o.t ? *o.t : detail::need(o.t1, 0);
                r = eval_xi_report(t1, o.t ? 0.0 : detail::need(o.t2, 0), choice, ctx);
            }
            finish(r);
            detail::emit(r, o, out);
            return r.exit_code();
        }
        if (find_zeros->parsed()) {
            auto res = find_zeros_report(detail::need(o.t_min, 10), detail::need(o.t_max, 30),
                                         detail::need(o.step, 0.05), o.parallel, ctx);
            if (!o.save.empty()) write_text(o.save, zero_table_text(res.zeros));
            finish(res.report);
            detail::emit(res.report, o, out);
            return res.report.exit_code();
        }
        if (load_zeros->parsed()) {
            if (o.file.empty()) throw UsageError("load-zeros needs --file");
            auto r = load_zeros_report(load_zero_table(o.file), ctx);
            finish(r);
            detail::emit(r, o, out);
            return r.exit_code();
        }
        if (audit_identity->parsed()) {
            AuditReport r;
            if (o.points) {
                r = audit_identity_batch_report(*o.points, o.seed, ctx);
            } else {
                r = audit_identity_report({detail::need(o.t1, 13), detail::need(o.t2, 0.25), detail::need(o.b, 1),
                                           detail::need(o.eps, 0.1)},
                                          ctx);
            }
            finish(r);
            detail::emit(r, o, out);
            return r.exit_code();
        }
        if (audit_symbolic->parsed()) {
            auto r = audit_symbolic_report(o.points ? *o.points : 20, o.seed, detail::need(o.t1, 13),
                                           detail::need(o.t2, 0.25), ctx);
            finish(r);
            detail::emit(r, o, out);
            return r.exit_code();
        }
        if (audit_signs->parsed()) {
            const auto alphas = detail::alpha_list(o);
            std::vector<double> t2s = o.t2 ? std::vector<double>{*o.t2} : std::vector<double>{0.1, 0.25, 0.45};
            for (double t2 : t2s) {
                if (!(t2 > 0)) throw UsageError("--t2 must be positive for audit-signs");
            }
            auto r = audit_signs_report(alphas, t2s, ctx);
            if (o.sigma) {
                add_g_signs_at(r, alphas, *o.sigma);
            }
            finish(r);
            detail::emit(r, o, out);
            if (o.svg) write_text(detail::svg_path(o, "audit-signs"), render_svg(q_sigma_plot(alphas)));
            return r.exit_code();
        }
        if (verdict_cmd->parsed()) {
            if (!o.t1 || !o.t2) throw UsageError("verdict needs --t1 and --t2");
            auto run = verdict_report(*o.t1, *o.t2, ctx);
            finish(run.report);
            detail::emit(run.report, o, out);
            if (o.svg) write_text(detail::svg_path(o, "verdict"), render_svg(f_plot(run.verdict)));
            return run.report.exit_code();
        }
        if (sweep_cmd->parsed()) {
            std::vector<double> alphas;
            if (!o.values.empty()) {
                for (const auto& s : o.values) alphas.push_back(static_cast<double>(rational_from_decimal(s)));
            } else if (o.from && o.to) {
                alphas = linear_grid(*o.from, *o.to, o.count);
            } else {
                throw UsageError("sweep needs --values or --from/--to");
            }
            for (double a : alphas) {
                if (!(a > 0)) throw UsageError("sweep alpha values must be positive");
            }
            auto res = sweep(alphas, parse_sweep_kind(o.kind), detail::need(o.t2, 0.25), detail::need(o.b, 1),
                             detail::need(o.eps, 0.1), o.parallel, ctx);
            if (o.out.empty()) {
                out << res.csv;
            } else {
                std::filesystem::create_directories(o.out);
                const std::filesystem::path dir(o.out);
                for (std::size_t i = 0; i < res.reports.size(); ++i) {
                    finish(res.reports[i]);
                    char name[32];
                    std::snprintf(name, sizeof name, "point_%03zu.json", i);
                    emit_report(res.reports[i], (dir / name).string());
                }
                write_text((dir / "sweep.csv").string(), res.csv);
                out << res.csv;
            }
            return res.exit_code();
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateT2& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "zero table: " << e.what() << "\n";
        return 2;
    } catch (const OrderError& e) {
        err << "zero table: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "io error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace xi_audit::cli
