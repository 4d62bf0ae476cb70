// Xi(t) on a few real and complex points, by both routes.

#include "xi_audit/special/xi.hpp"

#include <cstdio>

int main() {
    using xi_audit::Complex;
    using xi_audit::XiMethod;
    const Complex<double> points[] = {{0, 0}, {5, 0}, {14.134725, 0}, {13, 0.25}};
    std::printf("%-18s %-28s %-28s\n", "t", "product", "fourier");
    for (const auto& t : points) {
        const auto p = xi_audit::xi_t(t, XiMethod::product);
        const auto f = xi_audit::xi_t(t, XiMethod::fourier);
        std::printf("%7.4f%+8.4fi   %+.6e%+.6ei  %+.6e%+.6ei\n", t.re, t.im, p.re, p.im, f.re, f.im);
    }
}
