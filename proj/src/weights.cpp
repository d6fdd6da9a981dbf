#include "cameo/weights.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cameo/quadrature.hpp"
#include "cameo/rng.hpp"

namespace cameo {

namespace {

constexpr double kTailCut = 1e-12;  // improper integrals stop at quantile(1 - kTailCut)

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

double parse_number(std::string_view text, const char* what) {
    try {
        size_t used = 0;
        const double v = std::stod(std::string(text), &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::domain_error(std::string("bad distribution parameter: ") + what);
    }
}

}  // namespace

WeightDistribution WeightDistribution::power_law(double gamma) {
    require(gamma > 1.0, "power law requires gamma > 1");
    return WeightDistribution(WeightKind::PowerLaw, gamma);
}

WeightDistribution WeightDistribution::exponential(double rate) {
    require(rate > 0.0, "exponential requires rate > 0");
    return WeightDistribution(WeightKind::Exponential, rate);
}

WeightDistribution WeightDistribution::gaussian_tail(double scale) {
    require(scale > 0.0, "gaussian tail requires scale > 0");
    return WeightDistribution(WeightKind::GaussianTail, scale);
}

WeightDistribution WeightDistribution::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    require(colon != std::string_view::npos, "distribution spec must look like name:param=value");
    const std::string_view name = spec.substr(0, colon);
    const std::string_view rest = spec.substr(colon + 1);
    const auto eq = rest.find('=');
    require(eq != std::string_view::npos, "distribution spec must look like name:param=value");
    const std::string_view key = rest.substr(0, eq);
    const double value = parse_number(rest.substr(eq + 1), "value");
    if (name == "powerlaw") {
        require(key == "gamma", "powerlaw takes gamma=");
        return power_law(value);
    }
    if (name == "exponential") {
        require(key == "rate", "exponential takes rate=");
        return exponential(value);
    }
    if (name == "gaussiantail") {
        require(key == "scale", "gaussiantail takes scale=");
        return gaussian_tail(value);
    }
    throw std::domain_error("unknown distribution: " + std::string(name));
}

std::string WeightDistribution::spec_string() const {
    char buf[64];
    switch (kind_) {
        case WeightKind::PowerLaw:
            std::snprintf(buf, sizeof buf, "powerlaw:gamma=%.17g", param_);
            break;
        case WeightKind::Exponential:
            std::snprintf(buf, sizeof buf, "exponential:rate=%.17g", param_);
            break;
        case WeightKind::GaussianTail:
            std::snprintf(buf, sizeof buf, "gaussiantail:scale=%.17g", param_);
            break;
    }
    return buf;
}

double WeightDistribution::density(double omega) const {
    if (!(omega >= 1.0)) return 0.0;
    return std::exp(log_density(omega));
}

double WeightDistribution::log_density(double omega) const {
    switch (kind_) {
        case WeightKind::PowerLaw:
            return std::log(param_ - 1.0) - param_ * std::log(omega);
        case WeightKind::Exponential:
            return std::log(param_) - param_ * (omega - 1.0);
        case WeightKind::GaussianTail: {
            const double t = (omega - 1.0) / param_;
            return std::log(2.0 / (param_ * std::sqrt(std::numbers::pi))) - t * t;
        }
    }
    return 0.0;  // unreachable
}

double WeightDistribution::density_derivative(double omega) const {
    // D(phi) = phi * D(log phi); closed form per family.
    const double phi = density(omega);
    switch (kind_) {
        case WeightKind::PowerLaw:
            return phi * (-param_ / omega);
        case WeightKind::Exponential:
            return phi * (-param_);
        case WeightKind::GaussianTail:
            return phi * (-2.0 * (omega - 1.0) / (param_ * param_));
    }
    return 0.0;  // unreachable
}

double WeightDistribution::cdf(double omega) const {
    if (omega <= 1.0) return 0.0;
    switch (kind_) {
        case WeightKind::PowerLaw:
            return 1.0 - std::pow(omega, 1.0 - param_);
        case WeightKind::Exponential:
            return -std::expm1(-param_ * (omega - 1.0));
        case WeightKind::GaussianTail:
            return std::erf((omega - 1.0) / param_);
    }
    return 0.0;  // unreachable
}

double WeightDistribution::quantile(double u) const {
    require(u >= 0.0 && u < 1.0, "quantile argument must lie in [0,1)");
    switch (kind_) {
        case WeightKind::PowerLaw:
            return std::pow(1.0 - u, -1.0 / (param_ - 1.0));
        case WeightKind::Exponential:
            return 1.0 - std::log1p(-u) / param_;
        case WeightKind::GaussianTail:
            return 1.0 + param_ * boost::math::erf_inv(u);
    }
    return 1.0;  // unreachable
}

double WeightDistribution::y_value(double omega, double beta) const {
    return std::exp(-beta * log_density(omega));
}

bool WeightDistribution::moment_finite(double beta) const {
    // integrand phi^{1-beta}: power law converges iff gamma*(1-beta) > 1,
    // fast-decay families iff beta < 1.
    if (kind_ == WeightKind::PowerLaw) return param_ * (1.0 - beta) > 1.0;
    return beta < 1.0;
}

double WeightDistribution::upper_cutoff() const { return quantile(1.0 - kTailCut); }

std::optional<double> WeightDistribution::moment_A(double beta) const {
    if (!moment_finite(beta)) return std::nullopt;
    const double cut = upper_cutoff();
    return integrate_log_domain(
        [&](double w) { return std::exp((1.0 - beta) * log_density(w)); }, 1.0, cut);
}

double WeightDistribution::truncated_moment(double beta, std::uint64_t n) const {
    require(n >= 2, "truncated moment requires n >= 2");
    const double upper = quantile(1.0 - 1.0 / static_cast<double>(n));
    return integrate_log_domain(
        [&](double w) { return std::exp((1.0 - beta) * log_density(w)); }, 1.0, upper);
}

double WeightDistribution::expected_max_weight(std::uint64_t n) const {
    require(n >= 1, "expected max weight requires n >= 1");
    return quantile(1.0 - 1.0 / static_cast<double>(n));
}

double WeightDistribution::induced_tail_exponent(double beta) const {
    require(beta > 0.0, "induced tail exponent requires beta > 0");
    if (kind_ == WeightKind::PowerLaw) return 1.0 + 1.0 / beta - 1.0 / (beta * param_);
    return 1.0 + 1.0 / beta;
}

std::vector<double> WeightDistribution::regularity_exponent(
    std::span<const double> omega_grid) const {
    double prev = 1.0;
    for (double w : omega_grid) {
        require(w >= 1.0, "grid values must be >= 1");
        require(w >= prev, "grid must be ascending");
        prev = w;
    }
    std::vector<double> out;
    out.reserve(omega_grid.size());
    for (double w : omega_grid) {
        const double ratio = -density(w) / density_derivative(w);  // -phi/Dphi
        const double num = std::log(ratio);
        out.push_back(num == 0.0 ? 0.0 : num / log_density(w));
    }
    return out;
}

WeightSample sample_weights(const WeightDistribution& dist, std::uint64_t n, double alpha,
                            std::uint64_t seed) {
    require(n >= 1, "sample size must be >= 1");
    WeightSample s;
    s.n = n;
    s.alpha = alpha;
    s.seed = seed;
    s.omegas.resize(n);
    s.ys.resize(n);
    double total = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        Philox rng(seed, i);
        const double omega = dist.quantile(rng.uniform01());
        s.omegas[i] = omega;
        s.ys[i] = dist.y_value(omega, alpha);
        total += s.ys[i];
    }
    s.normalizer = total;
    return s;
}

WeightSample sample_from_ys(std::vector<double> ys, double alpha, std::uint64_t seed) {
    require(!ys.empty(), "sample size must be >= 1");
    WeightSample s;
    s.n = ys.size();
    s.alpha = alpha;
    s.seed = seed;
    s.omegas.assign(s.n, 1.0);  // placeholder weights; ys are authoritative here
    s.ys = std::move(ys);
    s.normalizer = 0.0;
    for (double y : s.ys) s.normalizer += y;
    return s;
}

void write_weights_csv(const WeightSample& sample, std::ostream& out) {
    out << "index,omega,y\n";
    char buf[96];
    for (std::uint64_t i = 0; i < sample.n; ++i) {
        std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g\n",
                      static_cast<unsigned long long>(i), sample.omegas[i], sample.ys[i]);
        out << buf;
    }
}

WeightSample read_weights_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("index,omega,y", 0) != 0)
        throw std::domain_error("weights CSV must start with header index,omega,y");
    WeightSample s;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        std::getline(row, field, ',');
        const double omega = parse_number(field, "omega");
        std::getline(row, field, ',');
        const double y = parse_number(field, "y");
        s.omegas.push_back(omega);
        s.ys.push_back(y);
    }
    s.n = s.ys.size();
    require(s.n >= 1, "weights CSV has no rows");
    for (double y : s.ys) s.normalizer += y;
    return s;
}

double hill_tail_exponent(std::vector<double> values, double top_fraction) {
    require(top_fraction > 0.0 && top_fraction <= 1.0, "top fraction must lie in (0,1]");
    require(values.size() >= 10, "Hill estimator needs at least 10 values");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    std::size_t k = static_cast<std::size_t>(top_fraction * static_cast<double>(n));
    k = std::clamp<std::size_t>(k, 2, n - 1);
    const double pivot = std::log(values[n - 1 - k]);
    double acc = 0.0;
    for (std::size_t i = n - k; i < n; ++i) acc += std::log(values[i]) - pivot;
    const double hill = acc / static_cast<double>(k);  // mean log-excess = 1/(theta-1)
    return 1.0 + 1.0 / hill;
}

}  // namespace cameo
