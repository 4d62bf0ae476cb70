#pragma once

#include "xi_audit/core/error.hpp"
#include "xi_audit/core/precision.hpp"
#include "xi_audit/core/real.hpp"
#include "xi_audit/search/forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace xi_audit {

enum class CaseLabel {
    g_positive_everywhere,
    g_negative_everywhere,
    interior_zero_q_positive,
    interior_zero_q_nonpositive,
    zero_at_b1,
    zero_at_b2,
};

inline const char* to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::g_positive_everywhere: return "G-positive-everywhere";
        case CaseLabel::g_negative_everywhere: return "G-negative-everywhere";
        case CaseLabel::interior_zero_q_positive: return "interior-zero-Q-positive";
        case CaseLabel::interior_zero_q_nonpositive: return "interior-zero-Q-nonpositive";
        case CaseLabel::zero_at_b1: return "zero-at-b1";
        case CaseLabel::zero_at_b2: return "zero-at-b2";
    }
    return "?";
}

/// The functions the case analysis consumes. f(b, ε) = (2/ε) Q(b) - remainder(b) and
/// h = F + G/ε are expected but not assumed; synthetic models may break either.
template <class Real>
struct SearchModel {
    std::function<Real(const Real& b, const Real& eps)> f;
    std::function<Real(const Real& b)> Q;
    std::function<Real(const Real& b)> R;  ///< bound on |remainder|
    std::function<Real(const Real& b)> F;
    std::function<Real(const Real& b)> G;
    /// Magnitude G's roundoff scales with; zeros of G are judged relative to it (1 when unset).
    std::function<Real(const Real& b)> G_magnitude;

    Real g_magnitude(const Real& b) const { return G_magnitude ? G_magnitude(b) : Real(1); }
};

/// f, Q, F, G for t = t1 + i t2; G from its closed form, f checked across its two forms.
template <class Real>
SearchModel<Real> candidate_model(const Real& t1, const Real& t2, const PrecisionContext& ctx) {
    SearchModel<Real> m;
    m.f = [=](const Real& b, const Real& eps) { return f_eval(b, eps, t1, t2, ctx); };
    m.Q = [=](const Real& b) { return q_value(b, t1, t2).value; };
    m.R = [=](const Real& b) { return remainder_bound(b, t1, t2); };
    m.F = [=](const Real& b) { return F_closed(b, t1, t2); };
    m.G = [=](const Real& b) { return G_closed(b, t1, t2); };
    m.G_magnitude = [=](const Real& b) { return G_scale(b, t1, t2); };
    return m;
}

struct SearchOptions {
    int grid_intervals = 1000;
    double f_tol_rel = 1e-10;      ///< |f(b0)| < f_tol_rel · max(1, |(2/ε0) Q(b0)|)
    double width_tol_rel = 1e-10;  ///< final bracket width < width_tol_rel · (b2 - b1)
    double h_threshold_rel = 1e-8; ///< h counts as nonzero when |h| > h_threshold_rel · max(1, F)
    double zero_tol_rel = 1e-12;   ///< |G| below this times its local magnitude is a zero
    double q_zero_tol_rel = 1e-10; ///< |Q(b')| below this times the Q scale counts as Q(b') = 0
    int max_bisection = 400;
};

template <class Real>
struct EpsSelection {
    Real b1{0}, b2{0};
    Real Q1{0}, Q2{0};
    Real R1{0}, R2{0};
    Real eps1{0};
    std::optional<Real> eps2;  ///< only when G ≤ -c0 on all of [b1, b2]
    std::optional<Real> c0;
};

/// ε1 = min(1, Q(b1)/(R1 + 1), |Q(b2)|/(R2 + 1)) makes f(b1; ε) > 0 > f(b2; ε) for all ε ≤ ε1.
template <class Real>
EpsSelection<Real> select_eps(const SearchModel<Real>& m, const Real& b1, const Real& b2,
                              const SearchOptions& opt = {}) {
    using std::abs;
    using std::max;
    using std::min;
    EpsSelection<Real> s;
    s.b1 = b1;
    s.b2 = b2;
    s.Q1 = m.Q(b1);
    s.Q2 = m.Q(b2);
    if (!(s.Q1 > 0) || !(s.Q2 < 0)) {
        throw PremiseFailed("sign premise Q(b1) > 0 > Q(b2) fails: Q(b1) = " + format_significant(to_double(s.Q1)) +
                            ", Q(b2) = " + format_significant(to_double(s.Q2)));
    }
    s.R1 = m.R(b1);
    s.R2 = m.R(b2);
    s.eps1 = min(Real(1), min(Real(s.Q1 / (s.R1 + 1)), Real(abs(s.Q2) / (s.R2 + 1))));

    const int n = opt.grid_intervals;
    Real max_g = 0;
    Real min_abs_g = 0;
    Real max_f = 0;
    for (int k = 0; k <= n; ++k) {
        const Real b = b1 + (b2 - b1) * k / n;
        const Real g = m.G(b);
        max_g = k == 0 ? g : max(max_g, g);
        min_abs_g = k == 0 ? abs(g) : min(min_abs_g, abs(g));
        max_f = k == 0 ? m.F(b) : max(max_f, m.F(b));
    }
    if (max_g < 0 && min_abs_g > 0) {
        s.c0 = min_abs_g;
        s.eps2 = min_abs_g / max_f;
    }
    return s;
}

/// A re-derived ε at a sub-interval endpoint.
template <class Real>
struct EpsReselection {
    std::string where;
    Real b{0};
    Real eps{0};
};

template <class Real>
struct SearchTrace {
    CaseLabel case_label = CaseLabel::g_positive_everywhere;
    std::optional<Real> b_prime;
    std::vector<Real> g_zeros;
    bool multi_zero_extension = false;
    Real b1{0}, b2{0};
    Real interval_lo{0}, interval_hi{0};  ///< the sign-constant sub-interval searched
    Real c0{0};
    Real eps1_full{0};  ///< ε1 for the whole [b1, b2]
    Real eps1{0};       ///< ε1 in force on the searched interval, after any re-selection
    std::optional<Real> eps2;
    std::optional<Real> eps0_min_rule;  ///< min(ε1, ε2)/2, when ε2 exists
    bool min_rule_keeps_bracket = true;
    Real eps0{0};
    std::vector<EpsReselection<Real>> reselections;
    Real b0{0};
    Real f_at_b0{0};
    Real f_tolerance{0};
    bool f_within_tolerance = false;
    Real Q_at_b0{0};
    Real F_at_b0{0};
    Real G_at_b0{0};
    Real h_at_b0{0};
    Real h_threshold{0};
    bool h_nonzero = false;  ///< false means the h check is inconclusive
    int bisection_steps = 0;
    std::vector<std::string> notes;
};

namespace detail {

template <class Real>
int sign_with_tol(const Real& v, const Real& tol) {
    using std::abs;
    if (abs(v) <= tol) return 0;
    return v > 0 ? 1 : -1;
}

/// Bisection on a sign change of g in [lo, hi] with g(lo) of sign s_lo.
template <class Real, class Fn>
Real bisect_sign_change(Fn&& g, Real lo, Real hi, int s_lo, int iterations) {
    for (int i = 0; i < iterations; ++i) {
        const Real mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) {
            break;
        }
        const Real v = g(mid);
        if (v == 0) {
            return mid;
        }
        if ((v > 0 ? 1 : -1) == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace detail

/// Locates b0 in (b1, b2) and ε0 with f(b0; ε0) = 0, following the case split on the zeros of G.
template <class Real>
SearchTrace<Real> find_b0(const SearchModel<Real>& m, const EpsSelection<Real>& sel, const SearchOptions& opt = {}) {
    using std::abs;
    using std::max;
    using std::min;
    SearchTrace<Real> tr;
    const Real b1 = sel.b1;
    const Real b2 = sel.b2;
    tr.b1 = b1;
    tr.b2 = b2;
    tr.eps1_full = sel.eps1;
    const int n = opt.grid_intervals;
    auto grid = [&](int k) { return Real(b1 + (b2 - b1) * k / n); };

    auto g_tol = [&](const Real& b) { return Real(Real(opt.zero_tol_rel) * m.g_magnitude(b)); };
    std::vector<Real> gv(n + 1);
    std::vector<int> gs(n + 1);
    for (int k = 0; k <= n; ++k) {
        gv[k] = m.G(grid(k));
        gs[k] = detail::sign_with_tol(gv[k], g_tol(grid(k)));
    }

    // Zeros of G: grid points with |G| ≤ tol, and refined sign changes between grid points.
    const bool zero_b1 = gs[0] == 0;
    const bool zero_b2 = gs[n] == 0;
    std::vector<Real> interior;
    for (int k = 1; k < n; ++k) {
        if (gs[k] == 0) {
            interior.push_back(grid(k));
        }
    }
    for (int k = 0; k < n; ++k) {
        if (gs[k] != 0 && gs[k + 1] != 0 && gs[k] != gs[k + 1]) {
            interior.push_back(detail::bisect_sign_change(m.G, grid(k), grid(k + 1), gs[k], opt.max_bisection));
        }
    }
    std::sort(interior.begin(), interior.end());
    if (zero_b1) tr.g_zeros.push_back(b1);
    for (const auto& z : interior) tr.g_zeros.push_back(z);
    if (zero_b2) tr.g_zeros.push_back(b2);

    Real eps_base = sel.eps1;
    Real lo = b1;
    Real hi = b2;
    auto reselect_left = [&](const Real& b) {
        // ε keeping f(b; ε) > 0 and f(b2; ε) < 0 once Q(b) > 0.
        const Real e = min(Real(1), min(Real(m.Q(b) / (m.R(b) + 1)), Real(abs(sel.Q2) / (sel.R2 + 1))));
        tr.reselections.push_back({"left endpoint", b, e});
        eps_base = min(eps_base, e);
    };
    auto first_index_right_of = [&](const Real& b) {
        int k = 0;
        while (k <= n && !(grid(k) > b)) ++k;
        return k;
    };
    auto last_index_left_of = [&](const Real& b) {
        int k = n;
        while (k >= 0 && !(grid(k) < b)) --k;
        return k;
    };

    const std::size_t zero_count = tr.g_zeros.size();
    if (zero_count == 0) {
        tr.case_label = gs[0] > 0 ? CaseLabel::g_positive_everywhere : CaseLabel::g_negative_everywhere;
    } else if (zero_count == 1 && !interior.empty()) {
        const Real bp = interior.front();
        tr.b_prime = bp;
        const auto q = m.Q(bp);
        const Real q_scale = max(Real(1), max(Real(abs(sel.Q1)), Real(abs(sel.Q2))));
        if (q > Real(opt.q_zero_tol_rel) * q_scale) {
            tr.case_label = CaseLabel::interior_zero_q_positive;
            int k = first_index_right_of(bp);
            while (k < n && !(m.Q(grid(k)) > 0 && gs[k] != 0)) ++k;
            if (k >= n) {
                throw CaseExhausted("no grid point right of the G zero keeps Q > 0");
            }
            lo = grid(k);
            reselect_left(lo);
        } else {
            tr.case_label = CaseLabel::interior_zero_q_nonpositive;
            if (!(q <= 0)) {
                tr.notes.push_back("Q at the G zero is " + format_significant(to_double(q)) +
                                   ", below the zero tolerance; treated as Q <= 0");
            }
            // Only f(b1; ε) > 0 constrains ε once b2 stops being an endpoint; the full-interval ε1 is
            // so small that f(.; ε1) < 0 left of b' falls below working precision.
            const Real e = min(Real(1), Real(sel.Q1 / (sel.R1 + 1)));
            if (e != eps_base) {
                tr.reselections.push_back({"right endpoint", bp, e});
                eps_base = e;
            }
            const int k = last_index_left_of(bp);
            if (k <= 0) {
                throw CaseExhausted("the G zero lies on the first grid cell");
            }
            const Real fk = m.f(grid(k), eps_base);
            const Real fp = m.f(bp, eps_base);
            if (fk < 0 && gs[k] != 0) {
                hi = grid(k);
            } else if (fk > 0 && fp < 0) {
                // f(.; eps1) turns negative closer to b' than the grid resolves.
                const Real r = detail::bisect_sign_change([&](const Real& b) { return m.f(b, eps_base); }, grid(k), bp,
                                                          1, opt.max_bisection);
                hi = (r + bp) / 2;
                tr.notes.push_back("f(.; eps1) < 0 only within one grid cell of b'; b2' placed between the zero of "
                                   "f(.; eps1) and b'");
                if (!(m.f(hi, eps_base) < 0) || detail::sign_with_tol(m.G(hi), g_tol(hi)) == 0) {
                    throw CaseExhausted("no point left of the G zero has f(b; eps1) < 0 with G nonzero");
                }
            } else {
                throw CaseExhausted("no point left of the G zero has f(b; eps1) < 0");
            }
        }
    } else if (zero_count == 1 && zero_b1) {
        tr.case_label = CaseLabel::zero_at_b1;
        tr.b_prime = b1;
        int k = 1;
        while (k < n && !(m.f(grid(k), eps_base) > 0 && gs[k] != 0)) ++k;
        if (k >= n) {
            throw CaseExhausted("no grid point right of b1 has f(b; eps1) > 0 with G nonzero");
        }
        lo = grid(k);
    } else if (zero_count == 1 && zero_b2) {
        tr.case_label = CaseLabel::zero_at_b2;
        tr.b_prime = b2;
        int k = n - 1;
        while (k > 0 && !(m.f(grid(k), eps_base) < 0 && gs[k] != 0)) --k;
        if (k <= 0) {
            throw CaseExhausted("no grid point left of b2 has f(b; eps1) < 0 with G nonzero");
        }
        hi = grid(k);
    } else {
        // Several zeros: search the sign-constant pieces for a grid bracket f > 0 ... f < 0.
        tr.multi_zero_extension = true;
        tr.notes.push_back("G has " + std::to_string(zero_count) +
                           " zeros on [b1, b2]; searched sign-constant pieces for an f bracket");
        tr.case_label = zero_b1 ? CaseLabel::zero_at_b1 : CaseLabel::zero_at_b2;
        if (!interior.empty()) {
            tr.b_prime = interior.front();
            tr.case_label = m.Q(interior.front()) > 0 ? CaseLabel::interior_zero_q_positive
                                                                 : CaseLabel::interior_zero_q_nonpositive;
        }
        bool found = false;
        int k = 0;
        while (k <= n && !found) {
            if (gs[k] == 0) {
                ++k;
                continue;
            }
            const int piece_sign = gs[k];
            int end = k;
            while (end + 1 <= n && gs[end + 1] == piece_sign) ++end;
            int left = -1;
            for (int j = k; j <= end && !found; ++j) {
                const Real fj = m.f(grid(j), eps_base);
                if (left < 0 && fj > 0) {
                    left = j;
                } else if (left >= 0 && fj < 0) {
                    lo = grid(left);
                    hi = grid(j);
                    found = true;
                }
            }
            k = end + 1;
        }
        if (!found) {
            throw CaseExhausted("no sign-constant piece of G carries a bracket of f(.; eps1)");
        }
    }
    tr.interval_lo = lo;
    tr.interval_hi = hi;
    tr.eps1 = eps_base;

    // Case (1) on [lo, hi]: G has one sign there.
    Real c0 = 0;
    Real max_f = 0;
    int g_sign = 0;
    bool first = true;
    auto sample = [&](const Real& b, const Real& g) {
        c0 = first ? abs(g) : min(c0, Real(abs(g)));
        max_f = first ? m.F(b) : max(max_f, m.F(b));
        g_sign = detail::sign_with_tol(g, g_tol(b));
        first = false;
    };
    sample(lo, m.G(lo));
    for (int k = 0; k <= n; ++k) {
        const Real b = grid(k);
        if (b > lo && b < hi) {
            sample(b, gv[k]);
        }
    }
    sample(hi, m.G(hi));
    tr.c0 = c0;
    Real eps0 = eps_base;
    if (g_sign < 0) {
        const Real eps2 = c0 / max_f;
        tr.eps2 = eps2;
        const Real eps0_min_rule = min(eps_base, eps2) / 2;
        tr.eps0_min_rule = eps0_min_rule;
        tr.min_rule_keeps_bracket = m.f(lo, eps0_min_rule) > 0 && m.f(hi, eps0_min_rule) < 0;
        if (tr.min_rule_keeps_bracket) {
            eps0 = eps0_min_rule;
        } else {
            tr.notes.push_back("eps0 = min(eps1, eps2)/2 makes h < 0 on the interval but loses the sign change of f; "
                               "fell back to eps0 = eps1");
        }
    }
    tr.eps0 = eps0;

    Real flo = m.f(lo, eps0);
    Real fhi = m.f(hi, eps0);
    if (!(flo > 0 && fhi < 0)) {
        throw CaseExhausted("f(.; eps0) has no sign change on the selected interval: f(lo) = " +
                            format_significant(to_double(flo)) + ", f(hi) = " + format_significant(to_double(fhi)));
    }

    const Real width_tol = Real(opt.width_tol_rel) * (b2 - b1);
    Real a = lo;
    Real c = hi;
    Real mid = (a + c) / 2;
    Real fm = m.f(mid, eps0);
    int steps = 1;
    auto tol_at = [&](const Real& b) { return Real(opt.f_tol_rel) * max(Real(1), Real(abs(2 * m.Q(b) / eps0))); };
    while (steps < opt.max_bisection) {
        if (c - a < width_tol && abs(fm) < tol_at(mid)) {
            break;
        }
        if (fm > 0) {
            a = mid;
        } else if (fm < 0) {
            c = mid;
        } else {
            break;
        }
        const Real next = (a + c) / 2;
        if (next == a || next == c) {
            break;
        }
        mid = next;
        fm = m.f(mid, eps0);
        ++steps;
    }
    tr.bisection_steps = steps;
    tr.b0 = mid;
    tr.f_at_b0 = fm;
    tr.Q_at_b0 = m.Q(mid);
    tr.f_tolerance = tol_at(mid);
    tr.f_within_tolerance = abs(fm) < tr.f_tolerance;
    tr.F_at_b0 = m.F(mid);
    tr.G_at_b0 = m.G(mid);
    tr.h_at_b0 = tr.F_at_b0 + tr.G_at_b0 / eps0;
    tr.h_threshold = Real(opt.h_threshold_rel) * max(Real(1), tr.F_at_b0);
    tr.h_nonzero = abs(tr.h_at_b0) > tr.h_threshold;
    if (!tr.h_nonzero) {
        tr.notes.push_back("h = F + G/eps0 at b0 is within the threshold of zero; the h condition is inconclusive");
    }
    return tr;
}

/// Outcome of re-evaluating every recorded quantity of a trace.
struct ReplayResult {
    bool ok = true;
    std::vector<std::string> checked;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what) {
        checked.push_back(what);
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

template <class Real>
ReplayResult trace_replay(const SearchModel<Real>& m, const SearchTrace<Real>& tr, const SearchOptions& opt = {}) {
    using std::abs;
    using std::max;
    ReplayResult r;
    auto same = [](const Real& a, const Real& b) { return a == b; };
    r.expect(tr.b1 < tr.b0 && tr.b0 < tr.b2, "b0 lies in (b1, b2)");
    r.expect(tr.interval_lo <= tr.b0 && tr.b0 <= tr.interval_hi, "b0 lies in the searched interval");
    r.expect(tr.eps0 > 0 && tr.eps0 <= tr.eps1, "0 < eps0 <= eps1");
    r.expect(m.f(tr.b1, tr.eps1) > 0 && m.f(tr.b2, tr.eps1) < 0, "f(b1; eps1) > 0 > f(b2; eps1)");
    r.expect(m.f(tr.b1, tr.eps1 / 10) > 0 && m.f(tr.b2, tr.eps1 / 10) < 0, "f(b1; eps1/10) > 0 > f(b2; eps1/10)");
    r.expect(m.f(tr.interval_lo, tr.eps0) > 0 && m.f(tr.interval_hi, tr.eps0) < 0,
             "f(.; eps0) changes sign on the searched interval");
    const Real f0 = m.f(tr.b0, tr.eps0);
    r.expect(same(f0, tr.f_at_b0), "f(b0; eps0) reproduces");
    const Real tol = Real(opt.f_tol_rel) * max(Real(1), Real(abs(2 * m.Q(tr.b0) / tr.eps0)));
    r.expect(same(tol, tr.f_tolerance), "f tolerance reproduces");
    r.expect((abs(f0) < tol) == tr.f_within_tolerance, "f tolerance verdict reproduces");
    const Real h = m.F(tr.b0) + m.G(tr.b0) / tr.eps0;
    r.expect(same(h, tr.h_at_b0), "h(b0; eps0) reproduces");
    r.expect((abs(h) > tr.h_threshold) == tr.h_nonzero, "h check outcome reproduces");
    if (tr.b_prime) {
        const Real gp = m.G(*tr.b_prime);
        r.expect(abs(gp) <= Real(opt.zero_tol_rel) * m.g_magnitude(*tr.b_prime), "G(b') vanishes");
    }
    if (tr.eps2) {
        r.expect(*tr.eps2 > 0 && tr.c0 > 0, "eps2 and c0 are positive");
    }
    if (tr.eps0_min_rule) {
        const bool keeps = m.f(tr.interval_lo, *tr.eps0_min_rule) > 0 && m.f(tr.interval_hi, *tr.eps0_min_rule) < 0;
        r.expect(keeps == tr.min_rule_keeps_bracket, "bracket status under min(eps1, eps2)/2 reproduces");
    }
    return r;
}

}  // namespace xi_audit
