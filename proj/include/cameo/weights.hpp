// Vertex-weight distributions on [1, inf) and the analytic quantities built
// on them: moments A(alpha), truncated moments, expected-maximum scaling,
// induced tail exponents of y = phi^{-beta}(omega), and the regularity
// diagnostic for the negative logarithmic derivative.
//
// Three concrete families are supported, one per analytic regime plus a
// second fast-decay family:
//   powerlaw:gamma=G      phi(w) = (G-1) w^{-G},            G > 1
//   exponential:rate=R    phi(w) = R exp(-R (w-1)),         R > 0
//   gaussiantail:scale=S  phi(w) = C exp(-((w-1)/S)^2),     S > 0, C = 2/(S sqrt(pi))
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cameo {

enum class WeightKind { PowerLaw, Exponential, GaussianTail };

class WeightDistribution {
  public:
    static WeightDistribution power_law(double gamma);
    static WeightDistribution exponential(double rate);
    static WeightDistribution gaussian_tail(double scale);

    // Parses spec strings like "powerlaw:gamma=3.0"; throws std::domain_error
    // on anything malformed.
    static WeightDistribution parse(std::string_view spec);

    WeightKind kind() const { return kind_; }
    double param() const { return param_; }
    std::string spec_string() const;
    bool fast_decay() const { return kind_ != WeightKind::PowerLaw; }

    // Density phi(omega); zero below the support minimum 1.
    double density(double omega) const;
    // log phi(omega), valid for omega >= 1; stable where density underflows.
    double log_density(double omega) const;
    // d/domega phi(omega), closed form, omega > 1.
    double density_derivative(double omega) const;
    // F(omega) = integral of phi over [1, omega].
    double cdf(double omega) const;
    // F^{-1}(u) for u in [0, 1); throws std::domain_error outside.
    double quantile(double u) const;

    // y = phi^{-beta}(omega), computed in log space.
    double y_value(double omega, double beta) const;

    // A(beta) = integral over [1, inf) of phi^{1-beta}; nullopt when the
    // integral diverges (detected analytically, never by timeout).
    std::optional<double> moment_A(double beta) const;
    bool moment_finite(double beta) const;

    // Integral of phi^{1-beta} over [1, F^{-1}(1 - 1/n)]; n >= 2.
    double truncated_moment(double beta, std::uint64_t n) const;

    // F^{-1}(1 - 1/n); the almost-sure scale of max_i omega_i.
    double expected_max_weight(std::uint64_t n) const;

    // Exponent theta of the asymptotic density y^{-theta} of phi^{-beta}:
    // 1 + 1/beta for fast-decay families, 1 + 1/beta - 1/(beta*gamma) for
    // the power law. beta > 0.
    double induced_tail_exponent(double beta) const;

    // log(-phi/Dphi) / log(phi) on an ascending grid of omega >= 1. Tends
    // to 0 for fast-decay families and stays bounded away from 0 for the
    // power law. A zero numerator is reported as exactly 0.
    std::vector<double> regularity_exponent(std::span<const double> omega_grid) const;

  private:
    WeightDistribution(WeightKind kind, double param) : kind_(kind), param_(param) {}

    double upper_cutoff() const;  // quantile(1 - 1e-12), improper-integral cap

    WeightKind kind_;
    double param_;
};

// n i.i.d. weights with the derived visibilities y_i = phi^{-alpha}(omega_i)
// and their sum S. Immutable after construction.
struct WeightSample {
    std::uint64_t n = 0;
    std::vector<double> omegas;
    double alpha = 0.0;
    std::vector<double> ys;
    double normalizer = 0.0;  // S = sum of ys
    std::uint64_t seed = 0;
};

// Inverse-CDF sampling; omega_i uses stream (seed, i) so the sample is
// reproducible and order-insensitive. n >= 1.
WeightSample sample_weights(const WeightDistribution& dist, std::uint64_t n, double alpha,
                            std::uint64_t seed);

// Assembles a sample from explicit visibilities (tests, file loading).
WeightSample sample_from_ys(std::vector<double> ys, double alpha, std::uint64_t seed);

// CSV with header "index,omega,y".
void write_weights_csv(const WeightSample& sample, std::ostream& out);
WeightSample read_weights_csv(std::istream& in);

// Hill estimator over the top `top_fraction` order statistics, reported as
// a density exponent 1 + 1/H (comparable to induced_tail_exponent).
double hill_tail_exponent(std::vector<double> values, double top_fraction);

}  // namespace cameo
