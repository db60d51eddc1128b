#pragma once

// Brute-force reference values for the profile integrals: composite midpoint
// rule with a fixed (large) panel count, applied after the same singularity
// substitutions as the production quadrature but otherwise written from the
// raw formulas.  Deliberately independent of quadrature.hpp.

#include <cmath>
#include <cstdint>

namespace oracles {

constexpr std::int64_t kPanels = 1'000'000;

template <class F>
double midpoint(F&& f, double a, double b, std::int64_t panels = kPanels) {
    if (!(b > a)) return 0.0;
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (std::int64_t i = 0; i < panels; ++i) sum += f(a + (i + 0.5) * h);
    return sum * h;
}

inline double lambda_md(int n, double d, double rho) {
    const double m = 2.0 * (n - 1);
    if (d < 1.0) {
        double sign = rho < 0 ? -1.0 : 1.0;
        double val = midpoint(
            [&](double u) { return d / std::sqrt(std::pow(std::cosh(u), m) - d * d); }, 0.0,
            std::abs(rho));
        return sign * val;
    }
    if (d == 1.0) {
        // caller supplies the start point through rho pair; not used in tests
        return 0.0;
    }
    const double a = std::acosh(std::pow(d, 1.0 / (n - 1)));
    return midpoint(
        [&](double s) {
            double u = a + s * s;
            return 2.0 * s * d / std::sqrt(std::pow(std::cosh(u), m) - d * d);
        },
        0.0, std::sqrt(rho - a));
}

inline double m1_height(int n, double rho) {
    const double m = 2.0 * (n - 1);
    const double u_cut = (37.0 + std::log(2.0) * (n - 1)) / (n - 1);
    return midpoint(
        [&](double u) { return 1.0 / std::sqrt(std::pow(std::cosh(u), m) - 1.0); }, rho, u_cut);
}

inline double catenoid_R(int n, double a) {
    if (a == 0.0) return 0.0;
    const double m = 2.0 * (n - 1);
    const double sh = std::sinh(a);
    return sh * midpoint(
                    [&](double w) {
                        double v = 1.0 - w * w;
                        return 2.0 * w * std::pow(v, n - 2) /
                               (std::sqrt(sh * sh + v * v) *
                                std::sqrt(1.0 - std::pow(v, m)));
                    },
                    0.0, 1.0);
}

inline double translation_T(int n, double a) {
    const double m = 2.0 * (n - 1);
    const double ch = std::cosh(a);
    return ch * midpoint(
                    [&](double w) {
                        double v = 1.0 - w * w;
                        return 2.0 * w * std::pow(v, n - 2) /
                               (std::sqrt(ch * ch - v * v) *
                                std::sqrt(1.0 - std::pow(v, m)));
                    },
                    0.0, 1.0);
}

inline double mu_plus(int n, double a, double rho) {
    const double m = 2.0 * (n - 1);
    const double ch = std::cosh(a);
    const double X = std::cosh(rho) / ch;
    return ch * midpoint(
                    [&](double w) {
                        double s = 1.0 + w * w;
                        return 2.0 * w /
                               (std::sqrt(std::pow(s, m) - 1.0) *
                                std::sqrt(ch * ch * s * s - 1.0));
                    },
                    0.0, std::sqrt(X - 1.0));
}

} // namespace oracles
