#pragma once

#include "xi_audit/core/complex.hpp"
#include "xi_audit/core/error.hpp"
#include "xi_audit/core/real.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace xi_audit {

/// Composite Gauss–Legendre with adaptive halving of the panel carrying the largest error.
struct QuadratureSpec {
    int nodes_per_panel = 20;
    int initial_panels = 1;
    int max_panels = 4096;
    double target_abs = 1e-13;
    double target_rel = 1e-13;

    void validate() const {
        if (nodes_per_panel < 8) {
            throw InvariantViolation("quadrature needs at least 8 nodes per panel");
        }
        if (initial_panels < 1 || max_panels < initial_panels) {
            throw InvariantViolation("quadrature panel limits are inconsistent");
        }
        if (!(target_abs >= 0) || !(target_rel >= 0) || (target_abs == 0 && target_rel == 0)) {
            throw InvariantViolation("quadrature targets must be non-negative and not both zero");
        }
    }
};

/// Nodes and weights on [-1, 1].
template <class Real>
struct GaussLegendreRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

namespace detail {

template <class Real>
GaussLegendreRule<Real> build_gauss_legendre(int n) {
    using std::abs;
    using std::cos;
    GaussLegendreRule<Real> rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Real pi = pi_v<Real>();
    const Real tol = std::numeric_limits<Real>::epsilon() * 4;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
        Real dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            Real p0 = 1;
            Real p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) <= tol) {
                break;
            }
        }
        // Recompute the derivative at the converged node for the weight.
        Real p0 = 1;
        Real p1 = x;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = std::move(p1);
            p1 = std::move(p2);
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        Real w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0;
    }
    return rule;
}

template <class Real>
inline Real magnitude(const Real& x) {
    using std::abs;
    return abs(x);
}

template <class Real>
inline Real magnitude(const Complex<Real>& z) {
    return abs(z);
}

}  // namespace detail

/// Cached rule; nodes come from Newton iteration at the precision of Real.
template <class Real>
const GaussLegendreRule<Real>& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule<Real>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, detail::build_gauss_legendre<Real>(n)).first;
    }
    return it->second;
}

template <class V, class Real>
struct QuadratureResult {
    V value;
    Real error_estimate;
    int panels = 0;
};

/// Integrates f over [a, b]; f may return Real or Complex<Real>.
template <class Real, class F>
auto integrate(F&& f, const Real& a, const Real& b, const QuadratureSpec& spec)
    -> QuadratureResult<std::decay_t<decltype(f(a))>, Real> {
    using V = std::decay_t<decltype(f(a))>;
    spec.validate();
    if (!(a < b)) {
        throw DomainError("integrate requires a < b");
    }
    const auto& rule = gauss_legendre<Real>(spec.nodes_per_panel);

    auto panel_sum = [&](const Real& lo, const Real& hi) {
        const Real half = (hi - lo) / 2;
        const Real mid = (hi + lo) / 2;
        V acc = V(Real(0));
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            acc += f(mid + half * rule.nodes[k]) * Real(rule.weights[k] * half);
        }
        return acc;
    };

    struct Panel {
        Real lo, hi;
        V left, right;  // rule applied to each half
        Real err;
    };
    auto refine = [&](const Real& lo, const Real& hi, const V& coarse) {
        const Real mid = (lo + hi) / 2;
        Panel p{lo, hi, panel_sum(lo, mid), panel_sum(mid, hi), Real(0)};
        p.err = detail::magnitude(V(p.left + p.right - coarse));
        return p;
    };

    std::vector<Panel> panels;
    panels.reserve(static_cast<std::size_t>(spec.max_panels));
    const Real width = (b - a) / spec.initial_panels;
    for (int k = 0; k < spec.initial_panels; ++k) {
        Real lo = a + width * k;
        Real hi = (k + 1 == spec.initial_panels) ? b : a + width * (k + 1);
        panels.push_back(refine(lo, hi, panel_sum(lo, hi)));
    }

    for (;;) {
        V total = V(Real(0));
        Real err = 0;
        std::size_t worst = 0;
        for (std::size_t k = 0; k < panels.size(); ++k) {
            total += panels[k].left + panels[k].right;
            err += panels[k].err;
            if (panels[k].err > panels[worst].err) {
                worst = k;
            }
        }
        const Real target = std::max(Real(spec.target_abs), Real(spec.target_rel) * detail::magnitude(total));
        if (err <= target) {
            return {total, err, static_cast<int>(panels.size())};
        }
        if (static_cast<int>(panels.size()) >= spec.max_panels) {
            throw NonConvergence("quadrature error estimate " + format_significant(err, 6) + " exceeds target " +
                                 format_significant(target, 6) + " at " + std::to_string(spec.max_panels) +
                                 " panels");
        }
        Panel old = std::move(panels[worst]);
        const Real mid = (old.lo + old.hi) / 2;
        panels[worst] = refine(old.lo, mid, old.left);
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1, refine(mid, old.hi, old.right));
    }
}

}  // namespace xi_audit
