#include "cameo/pathconn.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "cameo/errors.hpp"
#include "cameo/rng.hpp"

namespace cameo {

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex src) {
    std::vector<std::uint32_t> dist(g.n, kUnreachable);
    std::vector<Vertex> frontier{src};
    dist[src] = 0;
    std::vector<Vertex> next;
    std::uint32_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Vertex u : frontier) {
            for (Vertex v : g.adj[u]) {
                if (dist[v] == kUnreachable) {
                    dist[v] = level;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

std::optional<std::uint32_t> bounded_distance(const Graph& g, Vertex u, Vertex v,
                                              std::uint32_t max_depth) {
    if (u == v) return 0;
    if (max_depth == 0) return std::nullopt;
    std::unordered_map<Vertex, std::uint32_t> dist;
    dist.emplace(u, 0);
    std::vector<Vertex> frontier{u};
    std::vector<Vertex> next;
    for (std::uint32_t level = 1; level <= max_depth && !frontier.empty(); ++level) {
        next.clear();
        for (Vertex a : frontier) {
            for (Vertex b : g.adj[a]) {
                if (b == v) return level;
                if (dist.emplace(b, level).second) next.push_back(b);
            }
        }
        frontier.swap(next);
    }
    return std::nullopt;
}

Components connected_components(const Graph& g) {
    Components c;
    c.comp_id.assign(g.n, kUnreachable);
    std::vector<Vertex> stack;
    for (std::uint64_t s = 0; s < g.n; ++s) {
        if (c.comp_id[s] != kUnreachable) continue;
        const auto id = static_cast<std::uint32_t>(c.sizes.size());
        std::uint64_t size = 0;
        stack.push_back(static_cast<Vertex>(s));
        c.comp_id[s] = id;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex v : g.adj[u]) {
                if (c.comp_id[v] == kUnreachable) {
                    c.comp_id[v] = id;
                    stack.push_back(v);
                }
            }
        }
        c.sizes.push_back(size);
        if (size > c.sizes[c.largest]) c.largest = id;
    }
    return c;
}

namespace {

struct PathCounter {
    const Graph& g;
    Vertex target;
    const std::vector<std::uint32_t>& dist_to_target;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    std::uint64_t count = 0;
    std::vector<char> on_path;

    void dfs(Vertex u, std::uint32_t remaining) {
        if (remaining == 0) {
            if (u == target) ++count;
            return;
        }
        if (u == target) return;  // early arrival cannot extend to a simple path
        if (dist_to_target[u] > remaining) return;
        on_path[u] = 1;
        for (Vertex v : g.adj[u]) {
            if (on_path[v]) continue;
            if (++expansions > budget)
                throw resource_error("path-count expansion budget exceeded");
            dfs(v, remaining - 1);
        }
        on_path[u] = 0;
    }
};

}  // namespace

std::uint64_t count_simple_paths(const Graph& g, Vertex i, Vertex j, std::uint32_t k,
                                 std::uint64_t expansion_budget) {
    if (i == j) throw std::domain_error("path count undefined on the diagonal");
    if (k < 1) throw std::domain_error("path length must be >= 1");
    if (i >= g.n || j >= g.n) throw std::domain_error("vertex index out of range");
    const auto dist_j = bfs_distances(g, j);
    if (dist_j[i] == kUnreachable || dist_j[i] > k) return 0;
    PathCounter counter{g, j, dist_j, expansion_budget, 0, 0, std::vector<char>(g.n, 0)};
    counter.dfs(i, k);
    return counter.count;
}

namespace {

// Uniform unordered pair of distinct vertices.
std::pair<Vertex, Vertex> random_pair(Philox& rng, std::uint64_t n) {
    const auto u = static_cast<Vertex>(rng.uniform_below(n));
    auto v = static_cast<Vertex>(rng.uniform_below(n - 1));
    if (v >= u) ++v;
    return {u, v};
}

std::vector<std::pair<Vertex, Vertex>> all_edges(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(g.edge_count);
    for (std::uint64_t u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u])
            if (v > u) edges.emplace_back(static_cast<Vertex>(u), v);
    return edges;
}

}  // namespace

GammaStats gamma_stats(const Graph& g, std::uint32_t k, std::uint64_t pair_budget,
                       std::uint64_t seed, std::uint64_t expansion_budget) {
    if (pair_budget < 1) throw std::domain_error("pair budget must be >= 1");
    GammaStats stats;
    if (g.n < 2) return stats;

    const std::uint64_t total_pairs = g.n * (g.n - 1) / 2;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (total_pairs <= pair_budget) {
        for (Vertex u = 0; u + 1 < g.n; ++u)
            for (Vertex v = u + 1; v < g.n; ++v) pairs.emplace_back(u, v);
    } else {
        Philox rng(seed, 0);
        pairs.reserve(pair_budget);
        for (std::uint64_t t = 0; t < pair_budget; ++t) pairs.push_back(random_pair(rng, g.n));
    }

    std::vector<std::pair<Vertex, Vertex>> edges = all_edges(g);
    if (edges.size() > pair_budget) {
        Philox rng(seed, 1);
        std::vector<std::pair<Vertex, Vertex>> sampled;
        sampled.reserve(pair_budget);
        for (std::uint64_t t = 0; t < pair_budget; ++t)
            sampled.push_back(edges[rng.uniform_below(edges.size())]);
        edges.swap(sampled);
    }

    double pair_sum = 0.0;
    for (auto [u, v] : pairs) {
        try {
            const std::uint64_t c = count_simple_paths(g, u, v, k, expansion_budget);
            stats.gamma_max = std::max(stats.gamma_max, c);
            pair_sum += static_cast<double>(c);
            ++stats.pairs_sampled;
        } catch (const resource_error&) {
            ++stats.budget_exhausted_pairs;
        }
    }
    stats.gamma_mean_pairs =
        stats.pairs_sampled ? pair_sum / static_cast<double>(stats.pairs_sampled) : 0.0;

    double edge_sum = 0.0;
    std::uint64_t edge_done = 0;
    for (auto [u, v] : edges) {
        try {
            const std::uint64_t c = count_simple_paths(g, u, v, k, expansion_budget);
            stats.gamma_max = std::max(stats.gamma_max, c);
            edge_sum += static_cast<double>(c);
            ++edge_done;
        } catch (const resource_error&) {
            ++stats.budget_exhausted_pairs;
        }
    }
    stats.edges_sampled = edge_done;
    if (edge_done > 0) stats.gamma_mean_edges = edge_sum / static_cast<double>(edge_done);
    return stats;
}

std::vector<std::optional<std::uint32_t>> sample_pair_distances(const Graph& g,
                                                                std::uint64_t budget,
                                                                std::uint64_t seed) {
    if (budget < 1) throw std::domain_error("pair budget must be >= 1");
    std::vector<std::optional<std::uint32_t>> out;
    if (g.n < 2) return out;
    const std::uint64_t total_pairs = g.n * (g.n - 1) / 2;
    if (total_pairs <= budget) {
        out.reserve(total_pairs);
        for (Vertex u = 0; u + 1 < g.n; ++u) {
            const auto dist = bfs_distances(g, u);
            for (Vertex v = u + 1; v < g.n; ++v) {
                if (dist[v] == kUnreachable)
                    out.emplace_back(std::nullopt);
                else
                    out.emplace_back(dist[v]);
            }
        }
        return out;
    }
    out.resize(budget);
    for (std::uint64_t t = 0; t < budget; ++t) {
        Philox rng(seed, t);
        auto [u, v] = random_pair(rng, g.n);
        const auto dist = bfs_distances(g, u);
        if (dist[v] == kUnreachable)
            out[t] = std::nullopt;
        else
            out[t] = dist[v];
    }
    return out;
}

namespace {

// Farthest distance seen from src, restricted to src's component.
std::pair<Vertex, std::uint32_t> bfs_eccentricity(const Graph& g, Vertex src) {
    const auto dist = bfs_distances(g, src);
    Vertex far = src;
    std::uint32_t ecc = 0;
    for (std::uint64_t v = 0; v < g.n; ++v) {
        if (dist[v] != kUnreachable && dist[v] > ecc) {
            ecc = dist[v];
            far = static_cast<Vertex>(v);
        }
    }
    return {far, ecc};
}

}  // namespace

DistanceStats distance_stats(const Graph& g, std::uint64_t pair_budget, std::uint64_t seed,
                             std::uint64_t exact_diameter_cap) {
    DistanceStats stats;
    const auto comps = connected_components(g);
    stats.largest_component_size = comps.largest_size();

    const auto distances = sample_pair_distances(g, pair_budget, seed);
    double sum = 0.0, sumsq = 0.0;
    std::uint64_t m = 0;
    for (const auto& d : distances) {
        if (!d) continue;
        const double x = static_cast<double>(*d);
        sum += x;
        sumsq += x * x;
        ++m;
    }
    stats.pair_sample_size = m;
    if (m > 0) {
        const double mean = sum / static_cast<double>(m);
        stats.epl = mean;
        if (m > 1) {
            const double var = (sumsq - sum * mean) / static_cast<double>(m - 1);
            stats.epl_stderr = std::sqrt(std::max(var, 0.0) / static_cast<double>(m));
        }
    }

    if (g.edge_count == 0) return stats;

    // Largest-component diameter: exact sweep when small, double-sweep
    // lower bound otherwise.
    std::vector<Vertex> members;
    members.reserve(stats.largest_component_size);
    for (std::uint64_t v = 0; v < g.n; ++v)
        if (comps.comp_id[v] == comps.largest) members.push_back(static_cast<Vertex>(v));
    if (members.size() <= exact_diameter_cap) {
        std::uint32_t best = 0;
        for (Vertex v : members) best = std::max(best, bfs_eccentricity(g, v).second);
        stats.component_diameter = best;
        stats.diameter_exact = true;
    } else {
        const auto [far, ecc0] = bfs_eccentricity(g, members.front());
        const auto ecc1 = bfs_eccentricity(g, far).second;
        stats.component_diameter = std::max(ecc0, ecc1);
        stats.diameter_exact = false;
    }
    return stats;
}

namespace {

struct BallResult {
    std::vector<Vertex> members;  // exactly the target size
    std::uint64_t radius = 0;
};

// Ball around center covering `target` vertices: whole BFS levels plus a
// truncated last level (lowest vertex ids first). Empty when the component
// is too small.
std::optional<BallResult> grow_ball(const Graph& g, Vertex center, std::uint64_t target) {
    std::vector<std::uint32_t> dist(g.n, kUnreachable);
    std::vector<Vertex> frontier{center};
    dist[center] = 0;
    BallResult ball;
    std::vector<Vertex> inside{center};
    if (inside.size() >= target) {
        ball.members = {center};
        ball.radius = 0;
        return ball;
    }
    std::vector<Vertex> next;
    std::uint32_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Vertex u : frontier) {
            for (Vertex v : g.adj[u]) {
                if (dist[v] == kUnreachable) {
                    dist[v] = level;
                    next.push_back(v);
                }
            }
        }
        if (next.empty()) return std::nullopt;  // component exhausted below target
        if (inside.size() + next.size() >= target) {
            std::vector<Vertex> last = next;
            std::sort(last.begin(), last.end());
            const std::uint64_t need = target - inside.size();
            inside.insert(inside.end(), last.begin(), last.begin() + need);
            ball.members = std::move(inside);
            ball.radius = level;
            return ball;
        }
        inside.insert(inside.end(), next.begin(), next.end());
        frontier.swap(next);
    }
    return std::nullopt;
}

// Exact diameter of the subgraph induced by `members` (assumed connected):
// BFS from every member within the subset.
std::uint64_t induced_diameter(const Graph& g, const std::vector<Vertex>& members) {
    std::unordered_map<Vertex, std::uint32_t> index;
    index.reserve(members.size());
    for (std::uint32_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);
    std::vector<std::vector<std::uint32_t>> sub(members.size());
    for (std::uint32_t i = 0; i < members.size(); ++i) {
        for (Vertex v : g.adj[members[i]]) {
            auto it = index.find(v);
            if (it != index.end()) sub[i].push_back(it->second);
        }
    }
    std::uint32_t best = 0;
    std::vector<std::uint32_t> dist(members.size());
    std::vector<std::uint32_t> frontier, next;
    for (std::uint32_t s = 0; s < members.size(); ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[s] = 0;
        frontier.assign(1, s);
        std::uint32_t level = 0;
        while (!frontier.empty()) {
            ++level;
            next.clear();
            for (auto u : frontier) {
                for (auto v : sub[u]) {
                    if (dist[v] == kUnreachable) {
                        dist[v] = level;
                        next.push_back(v);
                    }
                }
            }
            frontier.swap(next);
        }
        for (auto d : dist)
            if (d != kUnreachable) best = std::max(best, d);
    }
    return best;
}

}  // namespace

std::optional<EssentialDiameterEstimate> essential_diameter_upper(
    const Graph& g, double epsilon, std::uint64_t center_budget, std::uint64_t seed,
    std::uint64_t exact_induced_cap) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::domain_error("epsilon must lie in (0,1]");
    if (center_budget < 1) throw std::domain_error("center budget must be >= 1");
    if (g.n == 0) return std::nullopt;
    const auto target =
        static_cast<std::uint64_t>(std::ceil(epsilon * static_cast<double>(g.n)));
    const auto comps = connected_components(g);
    if (comps.largest_size() < target) return std::nullopt;

    // Candidate centers: highest-degree vertices, random picks, plus the
    // top-degree vertex of a largest component as a guaranteed fallback.
    std::vector<Vertex> by_degree(g.n);
    for (std::uint64_t v = 0; v < g.n; ++v) by_degree[v] = static_cast<Vertex>(v);
    std::sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
        if (g.adj[a].size() != g.adj[b].size()) return g.adj[a].size() > g.adj[b].size();
        return a < b;
    });
    std::vector<Vertex> centers;
    const std::uint64_t top = std::min<std::uint64_t>((center_budget + 1) / 2, g.n);
    centers.assign(by_degree.begin(), by_degree.begin() + top);
    Philox rng(seed, 0);
    while (centers.size() < center_budget && centers.size() < g.n)
        centers.push_back(static_cast<Vertex>(rng.uniform_below(g.n)));
    for (Vertex v : by_degree) {
        if (comps.comp_id[v] == comps.largest) {
            centers.push_back(v);
            break;
        }
    }
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

    std::optional<EssentialDiameterEstimate> best;
    for (Vertex center : centers) {
        auto ball = grow_ball(g, center, target);
        if (!ball) continue;
        EssentialDiameterEstimate est;
        est.epsilon = epsilon;
        est.witness_center = center;
        est.witness_radius = ball->radius;
        est.witness_size = ball->members.size();
        if (ball->members.size() <= exact_induced_cap) {
            est.upper_bound = induced_diameter(g, ball->members);
            est.exact_induced = true;
        } else {
            est.upper_bound = 2 * ball->radius;
            est.exact_induced = false;
        }
        if (!best || est.upper_bound < best->upper_bound ||
            (est.upper_bound == best->upper_bound && est.witness_radius < best->witness_radius))
            best = est;
    }
    return best;
}

}  // namespace cameo
