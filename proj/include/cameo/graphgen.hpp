// Cameo graph generation: every unordered pair {i,j} is an edge
// independently with probability min{ (c/S)(y_i + y_j), 1 }. Two samplers
// are provided: the quadratic Bernoulli sweep and a near-linear envelope
// sampler (geometric skipping against a per-row bound), which draw from
// identical distributions.
#pragma once

#include <cstdint>

#include "cameo/graph.hpp"
#include "cameo/weights.hpp"

namespace cameo {

struct CameoParams {
    std::uint64_t n = 2;  // >= 2
    double c = 1.0;       // > 0
    double alpha = 0.0;
};

enum class GenMethod { Exact, Envelope };

GenMethod parse_method(std::string_view name);  // "exact" | "envelope"

// min{ (c/S)(y_i + y_j), 1 }; requires i != j, both < n, and a sample
// matching the params (same n and alpha).
double edge_probability(const CameoParams& params, const WeightSample& sample, Vertex i,
                        Vertex j);

// Per-method deterministic in (params, sample, seed): row i of the exact
// sweep consumes stream (seed, i); envelope rows consume streams keyed by
// their rank in the descending-y order.
Graph generate(const CameoParams& params, const WeightSample& sample, std::uint64_t seed,
               GenMethod method);

// Expected degree c(1 + (n-2) y_i / S) from the realized sample; the
// min{.,1} clamp is deliberately not corrected for (see clamped_pair_count).
double expected_degree(const CameoParams& params, const WeightSample& sample, Vertex i);

// Number of pairs whose unclamped probability exceeds 1. These pairs are the
// only source of discrepancy between the generator and the first-moment
// formulas, so experiment reports carry this count.
std::uint64_t clamped_pair_count(const CameoParams& params, const WeightSample& sample);

}  // namespace cameo
