#pragma once

// Profile integrals of the invariant minimal hypersurface families in
// H^n x R: the translation family M_d with generating curve
//
//   lambda(rho) = int_a^rho d / sqrt(cosh^{2n-2} u - d^2) du,
//
// the half-space graph M_1 (height h(rho) = int_rho^inf, normalized to zero
// at infinity), the catenoid half-height R(a), and the translation heights
// mu_+(a, rho) and T(a).  Endpoint inverse-square-root singularities are
// removed by explicit substitutions; improper tails are either mapped to
// finite intervals (s = 1/v) or cut where the integrand drops below 1e-16
// with an exponential remainder bound added to the error estimate.

#include <cmath>
#include <stdexcept>

#include "minigraph/quadrature.hpp"
#include "minigraph/textio.hpp"

namespace minigraph {

class no_solution_error : public domain_error {
public:
    using domain_error::domain_error;
};

enum class ProfileFamily { Md, M1, Catenoid, Translation };

struct ProfileParams {
    int n = 2;                          // ambient dimension of H^n
    ProfileFamily family = ProfileFamily::Md;
    double d = 0.5;                     // M_d parameter
    double a = 0.0;                     // profile start / neck parameter

    static ProfileParams md(int n, double d, double a_for_d1 = 0.0) {
        if (n < 2) throw usage_error("profile: dimension n must be >= 2");
        if (!(d > 0.0)) throw usage_error("profile: M_d requires d > 0");
        ProfileParams p;
        p.n = n;
        p.family = ProfileFamily::Md;
        p.d = d;
        if (d < 1.0) {
            p.a = 0.0;
        } else if (d == 1.0) {
            if (!(a_for_d1 > 0.0)) throw usage_error("profile: M_1 branch of M_d requires a > 0");
            p.a = a_for_d1;
        } else {
            p.a = std::acosh(std::pow(d, 1.0 / (n - 1)));
        }
        return p;
    }
    static ProfileParams m1(int n) {
        if (n < 2) throw usage_error("profile: dimension n must be >= 2");
        return ProfileParams{n, ProfileFamily::M1, 1.0, 0.0};
    }
    static ProfileParams catenoid(int n, double a) {
        if (n < 2) throw usage_error("profile: dimension n must be >= 2");
        if (a < 0.0) throw domain_error("profile: catenoid requires a >= 0");
        return ProfileParams{n, ProfileFamily::Catenoid, 0.0, a};
    }
    static ProfileParams translation(int n, double a) {
        if (n < 2) throw usage_error("profile: dimension n must be >= 2");
        if (!(a > 0.0)) throw domain_error("profile: translation family requires a > 0");
        return ProfileParams{n, ProfileFamily::Translation, 0.0, a};
    }
};

namespace detail {

inline double log_cosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2.0 * x)) - 0.6931471805599453;
}

// cosh^m(a + eps) - cosh^m(a) for eps >= 0, without cancellation even for
// eps at the floating-point floor (tanh-sinh abscissas get that close).
inline double coshm_diff_eps(double m, double a, double eps) {
    double sh = std::sinh(0.5 * eps);
    double log_ratio = std::log1p(2.0 * sh * sh + std::tanh(a) * std::sinh(eps));
    return std::exp(m * log_cosh(a)) * std::expm1(m * log_ratio);
}

// cosh^m(u) - 1
inline double coshm_minus_one(double m, double u) {
    return std::expm1(m * log_cosh(u));
}

// 1 - (1 - w^2)^m for w in [0, 1]
inline double one_minus_pow(double m, double w2) {
    return -std::expm1(m * std::log1p(-w2));
}

} // namespace detail

// Upper bound of both R(a) and the infimum of T(a): pi / (2n - 2).
inline double profile_height_sup(int n) {
    return 3.141592653589793 / (2.0 * (n - 1));
}

// lambda(rho; d, n).  For d < 1 the odd extension is used for rho < 0.
// For d >= 1 the start point is params.a and rho >= a is required; the
// u = a + s^2 substitution removes the endpoint singularity (d > 1).
inline QuadratureResult lambda_profile(const ProfileParams& params, double rho) {
    if (params.family != ProfileFamily::Md)
        throw usage_error("lambda_profile: params must select the M_d family");
    const int n = params.n;
    const double d = params.d;
    const double m = 2.0 * (n - 1);

    if (d < 1.0) {
        const double sign = rho < 0.0 ? -1.0 : 1.0;
        const double r = std::abs(rho);
        const double one_minus_d2 = (1.0 - d) * (1.0 + d);
        auto f = [&](double u) {
            return d / std::sqrt(detail::coshm_minus_one(m, u) + one_minus_d2);
        };
        // integrand ~ d 2^{n-1} e^{-(n-1)u); cut where it falls below 1e-16
        const double u_cut = (37.0 + std::log(2.0) * (n - 1) + std::log(std::max(d, 1e-300))) / (n - 1);
        QuadratureResult q = quad::tanh_sinh(f, 0.0, std::min(r, u_cut));
        if (r > u_cut) q.error_estimate += f(u_cut) / (n - 1);
        q.value *= sign;
        return q;
    }

    const double a = params.a;
    if (rho < a) throw domain_error("lambda_profile: rho < a for d >= 1");
    if (d == 1.0) {
        auto f = [&](double u) { return 1.0 / std::sqrt(detail::coshm_minus_one(m, u)); };
        return quad::tanh_sinh(f, a, rho);
    }
    // d > 1: u = a + s^2
    auto f = [&](double s) {
        return 2.0 * s * d / std::sqrt(detail::coshm_diff_eps(m, a, s * s));
    };
    const double s_end = std::sqrt(rho - a);
    const double s_cut = std::sqrt(std::max(1.0, (40.0 + std::log(d)) / (n - 1)));
    QuadratureResult q = quad::tanh_sinh(f, 0.0, std::min(s_end, s_cut));
    if (s_end > s_cut) q.error_estimate += f(s_cut) * (s_end - s_cut);
    return q;
}

// dlambda/drho, the closed-form integrand (used by manufactured solutions).
inline double lambda_profile_derivative(const ProfileParams& params, double rho) {
    const double m = 2.0 * (params.n - 1);
    const double d = params.d;
    if (d < 1.0) {
        double r = std::abs(rho);
        return d / std::sqrt(detail::coshm_minus_one(m, r) + (1.0 - d) * (1.0 + d));
    }
    if (rho <= params.a) throw domain_error("lambda_profile_derivative: rho <= a");
    return d / std::sqrt(detail::coshm_diff_eps(m, params.a, rho - params.a));
}

// h(rho) = int_rho^inf (cosh^{2n-2} u - 1)^{-1/2} du, the M_1 graph height
// normalized to zero asymptotic value.  Strictly decreasing, blows up
// logarithmically as rho -> 0+.
inline QuadratureResult m1_height(int n, double rho) {
    if (n < 2) throw usage_error("m1_height: dimension n must be >= 2");
    if (!(rho > 0.0)) throw domain_error("m1_height: rho must be > 0");
    const double m = 2.0 * (n - 1);
    auto f = [&](double u) { return 1.0 / std::sqrt(detail::coshm_minus_one(m, u)); };
    const double u_cut = (37.0 + std::log(2.0) * (n - 1)) / (n - 1);
    if (rho >= u_cut) {
        double rem = f(rho) / (n - 1);
        return {rem, rem, 1};
    }
    QuadratureResult q = quad::tanh_sinh(f, rho, u_cut);
    q.error_estimate += f(u_cut) / (n - 1);
    return q;
}

inline double m1_height_derivative(int n, double rho) {
    const double m = 2.0 * (n - 1);
    return -1.0 / std::sqrt(detail::coshm_minus_one(m, rho));
}

// R(a) = sinh(a) int_1^inf (sinh^2(a) s^2 + 1)^{-1/2} (s^{2n-2} - 1)^{-1/2} ds.
// The substitution s = 1/v maps the tail to [0, 1]; v = 1 - w^2 then removes
// the square-root singularity at v = 1.  Increases from 0 to pi/(2n-2).
inline QuadratureResult catenoid_height(int n, double a) {
    if (n < 2) throw usage_error("catenoid_height: dimension n must be >= 2");
    if (a < 0.0) throw domain_error("catenoid_height: a must be >= 0");
    if (a == 0.0) return {0.0, 0.0, 0};
    const double m = 2.0 * (n - 1);
    const double sh = std::sinh(a);
    auto f = [&](double w) {
        const double w2 = w * w;
        const double v = 1.0 - w2;
        return 2.0 * w * std::pow(v, n - 2) /
               (std::sqrt(sh * sh + v * v) * std::sqrt(detail::one_minus_pow(m, w2)));
    };
    QuadratureResult q = quad::tanh_sinh(f, 0.0, 1.0);
    q.value *= sh;
    q.error_estimate *= sh;
    return q;
}

// T(a) = cosh(a) int_1^inf (s^{2n-2} - 1)^{-1/2} (cosh^2(a) s^2 - 1)^{-1/2} ds,
// mapped to [0, 1] the same way.  cosh^2(a) - v^2 is evaluated as
// sinh^2(a) + (1 - v^2) to avoid cancellation for small a.
inline QuadratureResult translation_height(int n, double a) {
    if (n < 2) throw usage_error("translation_height: dimension n must be >= 2");
    if (!(a > 0.0)) throw domain_error("translation_height: a must be > 0");
    const double m = 2.0 * (n - 1);
    const double sh2 = std::sinh(a) * std::sinh(a);
    auto f = [&](double w) {
        const double w2 = w * w;
        const double v = 1.0 - w2;
        return 2.0 * w * std::pow(v, n - 2) /
               (std::sqrt(sh2 + w2 * (2.0 - w2)) * std::sqrt(detail::one_minus_pow(m, w2)));
    };
    QuadratureResult q = quad::tanh_sinh(f, 0.0, 1.0);
    q.value *= std::cosh(a);
    q.error_estimate *= std::cosh(a);
    return q;
}

// mu_+(a, rho) = cosh(a) int_1^{cosh(rho)/cosh(a)} ... ds, increasing in rho
// with limit T(a).  Small upper limits use the direct s = 1 + w^2 route;
// large ones are computed as T(a) minus the 1/v-mapped tail.
inline QuadratureResult mu_plus(int n, double a, double rho) {
    if (n < 2) throw usage_error("mu_plus: dimension n must be >= 2");
    if (!(a > 0.0)) throw usage_error("mu_plus: a must be > 0");
    if (rho < a) throw domain_error("mu_plus: rho must be >= a");
    const double m = 2.0 * (n - 1);
    const double ch = std::cosh(a);
    const double sh2 = std::sinh(a) * std::sinh(a);
    const double X = std::exp(detail::log_cosh(rho) - detail::log_cosh(a));
    if (X <= 1.0 + 1e-15) return {0.0, 0.0, 0};

    if (X <= 5.0) {
        auto f = [&](double w) {
            const double w2 = w * w;
            const double denom2 = sh2 + ch * ch * w2 * (2.0 + w2); // cosh^2(a)(1+w^2)^2 - 1
            return 2.0 * w / (std::sqrt(std::expm1(m * std::log1p(w2))) * std::sqrt(denom2));
        };
        QuadratureResult q = quad::tanh_sinh(f, 0.0, std::sqrt(X - 1.0));
        q.value *= ch;
        q.error_estimate *= ch;
        return q;
    }

    QuadratureResult total = translation_height(n, a);
    auto g = [&](double v) {
        return std::pow(v, n - 2) /
               (std::sqrt(ch * ch - v * v) * std::sqrt(-std::expm1(m * std::log(v))));
    };
    QuadratureResult tail = quad::tanh_sinh(g, 0.0, 1.0 / X);
    total.value -= ch * tail.value;
    total.error_estimate += ch * tail.error_estimate;
    total.evaluations += tail.evaluations;
    return total;
}

// Solve R(a) = t by bisection on the monotone R; also serves as the inverse
// of the exterior-domain threshold f(rho) := R(rho).
inline double invert_catenoid_height(int n, double t) {
    if (n < 2) throw usage_error("invert_catenoid_height: dimension n must be >= 2");
    if (t < 0.0) throw domain_error("invert_catenoid_height: t must be >= 0");
    const double sup = profile_height_sup(n);
    if (t >= sup)
        throw no_solution_error("invert_catenoid_height: no a with R(a) = t for t >= pi/(2n-2)");
    if (t == 0.0) return 0.0;

    double hi = 1.0;
    while (catenoid_height(n, hi).value < t) {
        hi *= 2.0;
        if (hi > 64.0)
            throw no_solution_error("invert_catenoid_height: t indistinguishable from pi/(2n-2)");
    }
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double r = catenoid_height(n, mid).value;
        if (std::abs(r - t) < 1e-11) return mid;
        (r < t ? lo : hi) = mid;
        if (hi - lo < 1e-13 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

// Exterior-domain thresholds of the existence theorems.
inline QuadratureResult f_threshold(int n, double rho) { return catenoid_height(n, rho); }
inline QuadratureResult h_threshold(int n, double r) { return translation_height(n, r); }

} // namespace minigraph
