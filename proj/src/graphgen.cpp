#include "cameo/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cameo/rng.hpp"

namespace cameo {

namespace {

void check_pair(const CameoParams& params, const WeightSample& sample, Vertex i, Vertex j) {
    if (params.n < 2) throw std::domain_error("cameo graphs need n >= 2");
    if (!(params.c > 0.0)) throw std::domain_error("cameo graphs need c > 0");
    if (sample.n != params.n || sample.alpha != params.alpha)
        throw std::domain_error("weight sample does not match params");
    if (i == j) throw std::domain_error("edge probability undefined on the diagonal");
    if (i >= params.n || j >= params.n) throw std::domain_error("vertex index out of range");
}

}  // namespace

GenMethod parse_method(std::string_view name) {
    if (name == "exact") return GenMethod::Exact;
    if (name == "envelope") return GenMethod::Envelope;
    throw std::domain_error("unknown generation method: " + std::string(name));
}

double edge_probability(const CameoParams& params, const WeightSample& sample, Vertex i,
                        Vertex j) {
    check_pair(params, sample, i, j);
    const double p = params.c / sample.normalizer * (sample.ys[i] + sample.ys[j]);
    return std::min(p, 1.0);
}

namespace {

std::size_t edge_reserve_hint(const CameoParams& params) {
    const double n = static_cast<double>(params.n);
    const double hint = std::min(params.c * n * 1.2 + 16.0, n * (n - 1.0) / 2.0);
    return static_cast<std::size_t>(hint);
}

Graph generate_exact(const CameoParams& params, const WeightSample& sample,
                     std::uint64_t seed) {
    const std::uint64_t n = params.n;
    const double cs = params.c / sample.normalizer;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(edge_reserve_hint(params));
    for (std::uint64_t i = 0; i + 1 < n; ++i) {
        Philox rng(seed, i);
        const double yi = sample.ys[i];
        for (std::uint64_t j = i + 1; j < n; ++j) {
            const double p = cs * (yi + sample.ys[j]);
            if (rng.uniform01() < p)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return build_graph(n, edges);
}

// Rows run in descending-y order; every column right of the row vertex has
// y at most the next-ranked value, so min{(c/S)(y_row + y_next), 1} bounds
// each pair probability and geometric jumps + thinning reproduce the exact
// per-pair Bernoulli distribution.
Graph generate_envelope(const CameoParams& params, const WeightSample& sample,
                        std::uint64_t seed) {
    const std::uint64_t n = params.n;
    const double cs = params.c / sample.normalizer;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (sample.ys[a] != sample.ys[b]) return sample.ys[a] > sample.ys[b];
        return a < b;
    });
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(edge_reserve_hint(params));
    for (std::uint64_t r = 0; r + 1 < n; ++r) {
        const Vertex i = order[r];
        const double yi = sample.ys[i];
        const double bound = cs * (yi + sample.ys[order[r + 1]]);
        Philox rng(seed, r);
        if (bound >= 1.0) {
            // Clamp region: no room to skip, test every pair directly.
            for (std::uint64_t t = r + 1; t < n; ++t) {
                const Vertex j = order[t];
                const double p = std::min(cs * (yi + sample.ys[j]), 1.0);
                if (rng.uniform01() < p) edges.emplace_back(i, j);
            }
            continue;
        }
        if (!(bound > 0.0)) continue;
        const double log_miss = std::log1p(-bound);
        std::uint64_t t = r;
        for (;;) {
            const double u = 1.0 - rng.uniform01();  // (0, 1]
            const double skip = std::floor(std::log(u) / log_miss);
            if (skip >= static_cast<double>(n - t)) break;
            t += 1 + static_cast<std::uint64_t>(skip);
            if (t >= n) break;
            const Vertex j = order[t];
            const double p = cs * (yi + sample.ys[j]);
            if (rng.uniform01() * bound < p) edges.emplace_back(i, j);
        }
    }
    return build_graph(n, edges);
}

}  // namespace

Graph generate(const CameoParams& params, const WeightSample& sample, std::uint64_t seed,
               GenMethod method) {
    check_pair(params, sample, 0, 1);
    return method == GenMethod::Exact ? generate_exact(params, sample, seed)
                                      : generate_envelope(params, sample, seed);
}

double expected_degree(const CameoParams& params, const WeightSample& sample, Vertex i) {
    if (sample.n != params.n || sample.alpha != params.alpha)
        throw std::domain_error("weight sample does not match params");
    if (i >= params.n) throw std::domain_error("vertex index out of range");
    return params.c *
           (1.0 + static_cast<double>(params.n - 2) * sample.ys[i] / sample.normalizer);
}

std::uint64_t clamped_pair_count(const CameoParams& params, const WeightSample& sample) {
    if (sample.n != params.n || sample.alpha != params.alpha)
        throw std::domain_error("weight sample does not match params");
    // Pairs with y_i + y_j > S/c, counted over sorted visibilities.
    std::vector<double> ys = sample.ys;
    std::sort(ys.begin(), ys.end());
    const double threshold = sample.normalizer / params.c;
    std::uint64_t count = 0;
    std::size_t lo = 0;
    std::size_t hi = ys.size();
    while (lo < hi) {
        if (ys[lo] + ys[hi - 1] > threshold) {
            count += hi - 1 - lo;
            --hi;
        } else {
            ++lo;
        }
    }
    return count;
}

}  // namespace cameo
