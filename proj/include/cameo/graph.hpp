// Undirected simple graph on {0..n-1} with sorted adjacency lists, plus the
// plain-text edge-list format used by the CLI.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace cameo {

using Vertex = std::uint32_t;

struct Graph {
    std::uint64_t n = 0;
    std::vector<std::vector<Vertex>> adj;
    std::uint64_t edge_count = 0;

    std::uint64_t degree(Vertex u) const { return adj[u].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    // Checks simplicity and symmetry; throws std::domain_error on violation.
    void validate() const;
};

// Builds an n-vertex graph from unordered pairs; sorts adjacency, rejects
// loops and duplicate edges.
Graph build_graph(std::uint64_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

// Generation metadata carried in the edge-list header line
//   # cameo n=<n> c=<c> alpha=<alpha> seed=<seed>
struct GraphMeta {
    std::uint64_t n = 0;
    double c = 0.0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
};

// One "u v" pair per line, 0-based, u < v, sorted lexicographically.
void write_edge_list(const Graph& g, const GraphMeta& meta, std::ostream& out);

struct LoadedGraph {
    Graph graph;
    std::optional<GraphMeta> meta;
};
LoadedGraph read_edge_list(std::istream& in);

std::map<std::uint64_t, std::uint64_t> empirical_degree_histogram(const Graph& g);

}  // namespace cameo
