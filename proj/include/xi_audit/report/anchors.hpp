#pragma once

// Every report check names the statement it exercises. The labels live here so that a
// renamed statement is changed in one place.

namespace xi_audit::anchors {

inline constexpr const char* xi_cross_method = "Xi: product form vs Fourier cosine integral of Phi";
inline constexpr const char* xi_zero = "Xi: real zeros by sign change";
inline constexpr const char* zero_table = "Xi: loaded zero ordinates";
inline constexpr const char* boundary_identity = "boundary identity: t^2 int v vbar + P - quintic - cubic + int v' vbar' = 0";
inline constexpr const char* quadratic_weight = "closed form of -(1/2eps) t^3 int (y-b/2)^2 vbar";
inline constexpr const char* mean_term = "closed form of (1/eps) t int vbar";
inline constexpr const char* boundary_product = "expansion of 2 vbar(b) v'(b)";
inline constexpr const char* ode = "v'' = t^2 v - t^3 (y-b/2)^2/(2eps) - t^2 Xi y + t/eps";
inline constexpr const char* h_split = "h = int v vbar - tt (b/2)^5/(10 eps^2) = F + G/eps";
inline constexpr const char* h_printed_exponent = "printed h with (b/2)^2 in place of (b/2)^5";
inline constexpr const char* F_closed_form = "F(b) = int |ch(t(y-b/2))|^2 dy";
inline constexpr const char* F_printed = "printed F with the 1/4 weight on sin(t2 b)/t2";
inline constexpr const char* F_positive = "F(b) > (b - 1/t2)/4 > 0 on [b1, b2]";
inline constexpr const char* complex_powers = "real and imaginary parts of t^2, t^4, t^5, t^6";
inline constexpr const char* ch_sh_product = "ch(tbar b/2) sh(t b/2) = [sh(t1 b) + i sin(t2 b)]/2";
inline constexpr const char* im_p = "f(b; eps) = Im P(b; eps), expanded in t1, t2";
inline constexpr const char* im_p_alpha = "Im P with t1 = alpha t2";
inline constexpr const char* im_p_merged = "Im P = (2/eps) Q(b) - [alpha t2 sin(t2 b) + t2 sh(alpha t2 b)]";
inline constexpr const char* q_sigma = "Q(b) with b = 2 sigma / t2";
inline constexpr const char* g_polys = "Q = [e^{a s}(g1 sin s + g2 cos s) + e^{-a s}(g3 sin s + g4 cos s)] / (2(a^2+1)^3)";
inline constexpr const char* g_signs = "g1, g2, g3 < 0 and g4 > 0 for all sigma > 0";
inline constexpr const char* g1_discriminant = "discriminant of g1 in sigma is negative";
inline constexpr const char* q_b1 = "Q(b1) > 0 at sigma = 3 pi / 2";
inline constexpr const char* q_b2 = "Q(b2) < 0 at sigma = 5 pi / 2";
inline constexpr const char* f_zero_at_origin = "f(0; eps) = 0";
inline constexpr const char* f_real_t = "f vanishes identically for t2 = 0";
inline constexpr const char* eps1_bracket = "f(b1; eps1) > 0 > f(b2; eps1)";
inline constexpr const char* eps0_choice = "0 < eps0 < min(eps1, eps2) keeps f(b1) > 0 > f(b2)";
inline constexpr const char* b0_root = "f(b0; eps0) = 0 for some b0 in (b1, b2)";
inline constexpr const char* h_nonzero = "F(b0) + G(b0)/eps0 != 0";
inline constexpr const char* f_h_relation = "f = -2 t1 t2 h";
inline constexpr const char* q_g_relation = "Q = -t1 t2 G";
inline constexpr const char* trace_replay = "search trace re-evaluation";
inline constexpr const char* final_step = "t^2 real forces t1 t2 = 0";

}  // namespace xi_audit::anchors
