// Empirical graph measurements: exact simple-path counts, k-connectivity
// statistics, distance sampling, component diameter, and ball-growth upper
// bounds on the epsilon-essential diameter.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cameo/graph.hpp"

namespace cameo {

inline constexpr std::uint32_t kUnreachable = 0xFFFFFFFFu;
inline constexpr std::uint64_t kDefaultExpansionBudget = 100'000'000;

// BFS distance from src to every vertex (kUnreachable outside the component).
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex src);

// Distance d(u,v) if d <= max_depth, otherwise nullopt. Explores only the
// ball of radius max_depth around u.
std::optional<std::uint32_t> bounded_distance(const Graph& g, Vertex u, Vertex v,
                                              std::uint32_t max_depth);

struct Components {
    std::vector<std::uint32_t> comp_id;
    std::vector<std::uint64_t> sizes;
    std::uint32_t largest = 0;  // id of a largest component (0 when n = 0)

    std::uint64_t largest_size() const { return sizes.empty() ? 0 : sizes[largest]; }
};
Components connected_components(const Graph& g);

// Exact number of simple paths of length exactly k between i and j.
// Depth-limited DFS from i, pruned by BFS levels from j; every node
// expansion counts against `expansion_budget` and exceeding it raises
// resource_error with no partial result. i != j, k >= 1.
std::uint64_t count_simple_paths(const Graph& g, Vertex i, Vertex j, std::uint32_t k,
                                 std::uint64_t expansion_budget = kDefaultExpansionBudget);

struct GammaStats {
    std::uint64_t gamma_max = 0;               // max over all sampled pairs and edges
    std::optional<double> gamma_mean_edges;    // mean over sampled existing edges
    double gamma_mean_pairs = 0.0;             // mean over sampled unordered pairs
    std::uint64_t pairs_sampled = 0;
    std::uint64_t edges_sampled = 0;
    std::uint64_t budget_exhausted_pairs = 0;  // skipped after resource_error
};

// Samples up to pair_budget uniform pairs and pair_budget existing edges
// (exhaustively when the population is smaller than the budget).
GammaStats gamma_stats(const Graph& g, std::uint32_t k, std::uint64_t pair_budget,
                       std::uint64_t seed,
                       std::uint64_t expansion_budget = kDefaultExpansionBudget);

// Distances for `budget` sampled unordered pairs (exhaustive when the budget
// covers all pairs); nullopt marks pairs in different components.
std::vector<std::optional<std::uint32_t>> sample_pair_distances(const Graph& g,
                                                                std::uint64_t budget,
                                                                std::uint64_t seed);

struct DistanceStats {
    std::optional<double> epl;  // mean distance over sampled same-component pairs
    double epl_stderr = 0.0;
    std::uint64_t component_diameter = 0;
    bool diameter_exact = false;  // false = double-sweep lower bound
    std::uint64_t largest_component_size = 0;
    std::uint64_t pair_sample_size = 0;  // same-component pairs that entered epl
};

// Exact component diameter is computed by a full BFS sweep when the largest
// component has at most `exact_diameter_cap` vertices, otherwise the
// double-sweep lower bound is reported.
DistanceStats distance_stats(const Graph& g, std::uint64_t pair_budget, std::uint64_t seed,
                             std::uint64_t exact_diameter_cap = 50'000);

struct EssentialDiameterEstimate {
    double epsilon = 0.0;
    std::uint64_t upper_bound = 0;
    Vertex witness_center = 0;
    std::uint64_t witness_radius = 0;
    std::uint64_t witness_size = 0;
    bool exact_induced = false;  // true: induced diameter of the witness ball,
                                 // false: the 2 * radius bound
};

// Grows BFS balls from sampled centers (biased toward high degree) until
// they cover ceil(epsilon * n) vertices; the last BFS level is truncated
// (lowest ids first) so the witness has exactly that size and stays
// connected. Returns nullopt when no component is large enough.
std::optional<EssentialDiameterEstimate> essential_diameter_upper(
    const Graph& g, double epsilon, std::uint64_t center_budget, std::uint64_t seed,
    std::uint64_t exact_induced_cap = 20'000);

}  // namespace cameo
