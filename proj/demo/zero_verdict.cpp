// Scan for the first real zeros, then run the b0 search for an off-line candidate.

#include "xi_audit/search/verdict.hpp"
#include "xi_audit/zeros/zero_finder.hpp"

#include <cstdio>

int main() {
    for (const auto& z : xi_audit::scan_real_zeros(10, 30, 0.05)) {
        std::printf("zero at t = %.9f\n", z.t1);
    }
    const auto v = xi_audit::verdict(xi_audit::ZeroCandidate{13, 0.25});
    if (v.trace) {
        const auto& tr = *v.trace;
        std::printf("case %s, b0 = %s, eps0 = %s\n", xi_audit::to_string(tr.case_label),
                    xi_audit::format_significant(tr.b0, 10).c_str(), xi_audit::format_significant(tr.eps0, 4).c_str());
        std::printf("h check: %s\n", tr.h_nonzero ? "nonzero" : "inconclusive");
    }
    std::printf("conclusion: %s\n", xi_audit::to_string(v.conclusion));
    for (const auto& n : v.notes) std::printf("  note: %s\n", n.c_str());
}
