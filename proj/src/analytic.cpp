#include "cameo/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "cameo/errors.hpp"

namespace cameo {

BigInt PathCoefficients::total() const {
    BigInt sum = 0;
    for (const auto& c : coeffs) sum += c;
    return sum;
}

PathCoefficients path_coefficients(std::uint32_t L) {
    if (L == 0) throw std::domain_error("word length must be >= 1");
    const std::size_t m_max = (L + 1) / 2;
    std::vector<BigInt> X(m_max + 1, 0), Y(m_max + 1, 0);
    X[0] = 1;
    if (m_max >= 1) X[1] = 1;
    Y[0] = 2;
    for (std::uint32_t len = 1; len < L; ++len) {
        std::vector<BigInt> Xn(m_max + 1, 0), Yn(m_max + 1, 0);
        for (std::size_t m = 0; m <= m_max; ++m) {
            Xn[m] = X[m] + (m > 0 ? Y[m - 1] : BigInt(0));
            Yn[m] = X[m] + Y[m];
        }
        X = std::move(Xn);
        Y = std::move(Yn);
    }
    PathCoefficients out;
    out.word_length = L;
    out.coeffs.resize(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) out.coeffs[m] = X[m] + Y[m];
    return out;
}

PathCoefficients coefficients_bruteforce(std::uint32_t L) {
    if (L == 0) throw std::domain_error("word length must be >= 1");
    if (L > 20) throw resource_error("brute-force expansion limited to L <= 20");
    const std::uint32_t k = L + 1;  // number of binomials; variables x_0..x_k
    const std::size_t m_max = (L + 1) / 2;
    std::vector<std::uint64_t> counts(m_max + 1, 0);
    std::vector<std::uint8_t> exponent(k + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        std::fill(exponent.begin(), exponent.end(), 0);
        for (std::uint32_t l = 0; l < k; ++l)
            ++exponent[l + ((mask >> l) & 1)];  // binomial l picks x_l or x_{l+1}
        std::size_t m = 0;
        for (std::uint32_t v = 1; v < k; ++v)
            if (exponent[v] == 2) ++m;
        ++counts[m];
    }
    PathCoefficients out;
    out.word_length = L;
    out.coeffs.assign(counts.begin(), counts.end());
    return out;
}

GeneratingFunctionValue generating_function(std::uint32_t L, double z) {
    if (L == 0) throw std::domain_error("word length must be >= 1");
    if (!(z >= 0.0)) throw std::domain_error("generating function requires z >= 0");
    if (z == 0.0) {
        // Limit of the closed form: the sqrt(z) singularities cancel.
        return {1.0, static_cast<double>(L) + 1.0};
    }
    const double sz = std::sqrt(z);
    const double l1 = 1.0 + sz;
    const double l2 = 1.0 - sz;
    const double p1 = std::pow(l1, static_cast<double>(L) - 1.0);
    const double p2 = std::pow(l2, static_cast<double>(L) - 1.0);
    GeneratingFunctionValue out;
    out.fX = (0.5 * (1.0 + z) + sz) * p1 + (0.5 * (1.0 + z) - sz) * p2;
    out.fY = (1.0 + 0.5 / sz + 0.5 * sz) * p1 + (1.0 - 0.5 / sz - 0.5 * sz) * p2;
    return out;
}

double s_value(std::uint32_t k, double A, double A2) {
    if (k < 2) throw std::domain_error("s_value requires k >= 2");
    if (!(A > 0.0) || !(A2 > 0.0)) throw std::domain_error("s_value requires A, A2 > 0");
    const double z = A2 / (A * A);
    return std::pow(A, static_cast<double>(k)) * generating_function(k - 1, z).total();
}

double expected_gamma_walks(const WeightSample& sample, double c, std::uint32_t k, Vertex i,
                            Vertex j) {
    if (k < 1) throw std::domain_error("walk length must be >= 1");
    if (i == j) throw std::domain_error("walk expectation undefined on the diagonal");
    if (i >= sample.n || j >= sample.n) throw std::domain_error("vertex index out of range");
    double s1 = 0.0, s2 = 0.0;
    for (double y : sample.ys) {
        s1 += y;
        s2 += y * y;
    }
    const double n = static_cast<double>(sample.n);
    // Kernel vector through span{ones, y}: w = u * ones + v * y.
    double u = sample.ys[j];
    double v = 1.0;
    for (std::uint32_t step = 1; step < k; ++step) {
        const double nu = s1 * u + s2 * v;
        const double nv = n * u + s1 * v;
        u = nu;
        v = nv;
    }
    const double walk_sum = u + v * sample.ys[i];
    return std::pow(c / sample.normalizer, static_cast<double>(k)) * walk_sum;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::HighAlpha: return "HighAlpha";
        case Regime::LowAlpha: return "LowAlpha";
        case Regime::Subcritical: return "Subcritical";
    }
    return "?";
}

ThresholdPrediction predict_threshold(const WeightDistribution& dist, double c, double alpha) {
    if (!(c > 0.0)) throw std::domain_error("prediction requires c > 0");
    if (!(alpha >= 0.0) || alpha >= 1.0)
        throw std::domain_error("prediction covers alpha in [0,1) only");
    if (alpha == 0.5) throw std::domain_error("alpha = 1/2 is a boundary case");

    ThresholdPrediction out;
    out.A = dist.moment_A(alpha);
    out.A2 = dist.moment_A(2.0 * alpha);
    if (alpha > 0.5) {
        out.regime = Regime::HighAlpha;
        double delta = 2.0 * alpha - 1.0;
        if (dist.kind() == WeightKind::PowerLaw) {
            const double g = dist.param();
            delta = g / (g - 1.0) * (2.0 * alpha - 1.0 + 1.0 / g);
        }
        out.delta = delta;
        out.k_c_constant = 2.0 / delta;
        return out;
    }
    if (out.A && out.A2) {
        const double B = c * (1.0 + std::sqrt(*out.A2) / *out.A);
        out.B = B;
        if (B <= 1.0) {
            out.regime = Regime::Subcritical;
        } else {
            out.regime = Regime::LowAlpha;
            out.k_c_logslope = 1.0 / std::log(B);
        }
        return out;
    }
    // Divergent A or A2 below the alpha = 1/2 boundary (possible for heavy
    // power laws): B is undefined and no jump value is predicted.
    out.regime = Regime::LowAlpha;
    return out;
}

}  // namespace cameo
