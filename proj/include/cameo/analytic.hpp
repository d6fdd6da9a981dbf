// Closed-form combinatorics for the edge-kernel expansion and the
// connectivity threshold predictions derived from it.
//
// Expanding a product of k+1 binomials (y_{x_0}+y_{x_1})...(y_{x_k}+y_{x_{k+1}})
// classifies each of the 2^{k+1} terms by how many interior variables appear
// squared. The counts C_m are words of a 4-state topological Markov chain;
// PathCoefficients indexes them by word length L = (#binomials - 1).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>

#include "cameo/graph.hpp"
#include "cameo/weights.hpp"

namespace cameo {

using BigInt = boost::multiprecision::cpp_int;

struct PathCoefficients {
    std::uint32_t word_length = 0;  // L
    std::vector<BigInt> coeffs;     // C_m for m = 0 .. floor((L+1)/2)

    BigInt total() const;  // equals 2^{L+1}
};

// Exact coefficients via the reduced two-sequence recursion
//   X_m^{(len+1)} = X_m^{(len)} + Y_{m-1}^{(len)}
//   Y_m^{(len+1)} = X_m^{(len)} + Y_m^{(len)}
// started from X = (1,1), Y = (2,0). L >= 1.
PathCoefficients path_coefficients(std::uint32_t L);

// Definitional oracle: expands all 2^{L+1} product terms and classifies the
// squared interior variables directly. L <= 20 (resource_error above).
PathCoefficients coefficients_bruteforce(std::uint32_t L);

// Closed-form generating functions f_X, f_Y of the coefficient recursion,
// built from the transfer-matrix eigenvalues 1 +- sqrt(z). Their sum equals
// sum_m C_m^{(L)} z^m. z = 0 is the continuous limit (1, L+1).
struct GeneratingFunctionValue {
    double fX = 0.0;
    double fY = 0.0;
    double total() const { return fX + fY; }
};
GeneratingFunctionValue generating_function(std::uint32_t L, double z);

// A^k * sum_m C_m^{(k-1)} (A2/A^2)^m; successive ratios tend to A + sqrt(A2).
// k >= 2, A > 0, A2 > 0.
double s_value(std::uint32_t k, double A, double A2);

// Expected number of length-k walks i -> j (vertex repetition allowed),
// (c/S)^k [M^k]_{ij} for the additive kernel M_{uv} = y_u + y_v. Because M
// has rank two, the evaluation iterates a pair of coordinates in
// span{ones, y} in O(k) time. Upper-bounds the simple-path expectation and
// matches it up to O(k^2/n) for fixed k.
double expected_gamma_walks(const WeightSample& sample, double c, std::uint32_t k, Vertex i,
                            Vertex j);

enum class Regime { HighAlpha, LowAlpha, Subcritical };

struct ThresholdPrediction {
    Regime regime = Regime::LowAlpha;
    std::optional<double> A;             // moment_A(alpha); nullopt = divergent
    std::optional<double> A2;            // moment_A(2 alpha); nullopt = divergent
    std::optional<double> delta;         // HighAlpha growth exponent
    std::optional<double> B;             // c (1 + sqrt(A2)/A)
    std::optional<double> k_c_constant;  // HighAlpha jump: 2/delta
    std::optional<double> k_c_logslope;  // LowAlpha jump slope: 1/ln B
};

const char* regime_name(Regime r);

// alpha in [0,1) with alpha != 1/2 (boundary excluded); throws
// std::domain_error otherwise.
//   alpha > 1/2: delta = 2 alpha - 1 for fast-decay families,
//                (gamma/(gamma-1))(2 alpha - 1 + 1/gamma) for the power law;
//                jump at the constant 2/delta.
//   alpha < 1/2: B = c (1 + sqrt(A2)/A); subcritical iff B <= 1, otherwise
//                the jump grows like ln n / ln B.
ThresholdPrediction predict_threshold(const WeightDistribution& dist, double c, double alpha);

}  // namespace cameo
