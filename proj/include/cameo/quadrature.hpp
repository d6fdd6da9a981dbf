// Numeric integration used by the analytic weight machinery. Thin wrapper
// over Boost.Math adaptive Gauss-Kronrod; moment integrals run in
// log-domain so that power-law tails with huge cutoffs stay well
// conditioned.
#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace cameo {

inline constexpr double kQuadratureAbsTol = 1e-10;

// Integral of f over [a, b], absolute tolerance target kQuadratureAbsTol.
template <class F>
double integrate(F&& f, double a, double b) {
    if (!(b > a)) return 0.0;
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, /*max_depth=*/20, /*tol=*/1e-13, &error);
    return value;
}

// Integral of f over [a, b] with a >= 1, evaluated after the substitution
// omega = exp(u). Keeps adaptive refinement effective when b/a spans many
// orders of magnitude.
template <class F>
double integrate_log_domain(F&& f, double a, double b) {
    if (!(b > a)) return 0.0;
    const double ua = std::log(a);
    const double ub = std::log(b);
    return integrate(
        [&](double u) {
            const double omega = std::exp(u);
            return f(omega) * omega;
        },
        ua, ub);
}

}  // namespace cameo
