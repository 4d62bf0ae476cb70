#pragma once

#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/special/xi.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <string>
#include <vector>

namespace xi_audit {

/// t = t1 + i t2 in the parametrization s = ½ + it.
struct ZeroCandidate {
    double t1 = 0;
    double t2 = 0;

    /// Enforces |t1| > 6 and t2 ∈ (-½, ½).
    void validate() const {
        if (!(std::abs(t1) > 6)) {
            throw InvariantViolation("zero candidate needs |t1| > 6, got t1 = " + format_double(t1));
        }
        if (!(t2 > -0.5 && t2 < 0.5)) {
            throw InvariantViolation("zero candidate needs t2 in (-1/2, 1/2), got t2 = " + format_double(t2));
        }
    }
};

struct ScanOptions {
    XiMethod method = XiMethod::product;
    double bisection_tol = 1e-9;
    /// Worker count; sub-intervals are scanned independently and merged in order.
    int parallel = 1;
};

namespace detail {

template <class Real>
Real xi_real(const Real& t, XiMethod method, const PrecisionContext& ctx) {
    return xi_t(Complex<Real>(t), method, ctx).re;
}

/// Bisection of a sign change of Ξ on [lo, hi]; refines past width tol until |Ξ| < abs_tol.
template <class Real>
Real bisect_xi(Real lo, Real hi, Real f_lo, XiMethod method, const PrecisionContext& ctx, double tol) {
    using std::abs;
    Real mid = (lo + hi) / 2;
    Real f_mid = xi_real(mid, method, ctx);
    for (int iter = 0; iter < 400; ++iter) {
        if (f_mid == 0) {
            break;
        }
        if (hi - lo < Real(tol) && abs(f_mid) < Real(ctx.abs_tol)) {
            break;
        }
        if (sign_of(f_mid) == sign_of(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        Real next = (lo + hi) / 2;
        if (next == mid) {
            break;
        }
        mid = next;
        f_mid = xi_real(mid, method, ctx);
    }
    return mid;
}

template <class Real>
std::vector<Real> scan_segment(const std::vector<Real>& grid, std::size_t first, std::size_t last,
                               const ScanOptions& opt, const PrecisionContext& ctx) {
    std::vector<Real> found;
    Real prev = xi_real(grid[first], opt.method, ctx);
    if (prev == 0) {
        found.push_back(grid[first]);
    }
    for (std::size_t k = first + 1; k <= last; ++k) {
        Real cur = xi_real(grid[k], opt.method, ctx);
        if (cur == 0) {
            found.push_back(grid[k]);
        } else if (prev != 0 && sign_of(cur) != sign_of(prev)) {
            found.push_back(bisect_xi(grid[k - 1], grid[k], prev, opt.method, ctx, opt.bisection_tol));
        }
        prev = cur;
    }
    return found;
}

}  // namespace detail

/// Real zeros of Ξ on [t_min, t_max] from sign changes on a grid of spacing step.
template <class Real = double>
std::vector<ZeroCandidate> scan_real_zeros(double t_min, double t_max, double step, const ScanOptions& opt = {},
                                           const PrecisionContext& ctx = {}) {
    if (!(t_min > 6 && t_min < t_max)) {
        throw DomainError("scan_real_zeros requires 6 < t_min < t_max");
    }
    if (!(step > 0)) {
        throw DomainError("scan_real_zeros requires step > 0");
    }
    const auto count = static_cast<std::size_t>(std::ceil((t_max - t_min) / step - 1e-9));
    std::vector<Real> grid;
    grid.reserve(count + 1);
    for (std::size_t k = 0; k < count; ++k) {
        grid.push_back(Real(t_min) + Real(step) * Real(static_cast<double>(k)));
    }
    grid.push_back(Real(t_max));

    // Segments share their boundary grid point; a zero exactly on it is reported once.
    const std::size_t workers = static_cast<std::size_t>(std::max(1, opt.parallel));
    const std::size_t intervals = grid.size() - 1;
    const std::size_t per = (intervals + workers - 1) / workers;
    std::vector<std::future<std::vector<Real>>> parts;
    for (std::size_t first = 0; first < intervals; first += per) {
        const std::size_t last = std::min(intervals, first + per);
        auto task = [&grid, &opt, &ctx, first, last] { return detail::scan_segment(grid, first, last, opt, ctx); };
        parts.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, task));
    }
    std::vector<ZeroCandidate> out;
    for (auto& part : parts) {
        for (const Real& z : part.get()) {
            const double t = to_double(z);
            if (out.empty() || t != out.back().t1) {
                out.push_back({t, 0.0});
            }
        }
    }
    return out;
}

/// Immutable ordinate list loaded from a text file.
struct ZeroTable {
    std::vector<double> ordinates;
    std::string source;
    std::chrono::system_clock::time_point loaded_at;

    /// Index of the entry nearest to t; table must be non-empty.
    std::size_t nearest(double t) const {
        auto it = std::lower_bound(ordinates.begin(), ordinates.end(), t);
        if (it == ordinates.end()) {
            return ordinates.size() - 1;
        }
        if (it != ordinates.begin() && t - *(it - 1) < *it - t) {
            --it;
        }
        return static_cast<std::size_t>(it - ordinates.begin());
    }
};

/// Parses one decimal ordinate per line; blank and '#' lines are skipped.
inline ZeroTable parse_zero_table(std::istream& in, const std::string& source) {
    ZeroTable table;
    table.source = source;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
            line.erase(0, 3);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view text(line.data() + first, last - first + 1);
        double value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
            throw ParseError(line_no, "not a decimal ordinate: '" + std::string(text) + "'");
        }
        if (!(value > 6)) {
            throw ParseError(line_no, "ordinate " + std::string(text) + " is not greater than 6");
        }
        if (!table.ordinates.empty() && !(value > table.ordinates.back())) {
            throw OrderError(line_no, "ordinate " + std::string(text) + " does not exceed its predecessor");
        }
        table.ordinates.push_back(value);
    }
    table.loaded_at = std::chrono::system_clock::now();
    return table;
}

inline ZeroTable load_zero_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open zero table " + path);
    }
    return parse_zero_table(in, path);
}

}  // namespace xi_audit
