#include "cameo/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cameo {

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& row = adj[u];
    return std::binary_search(row.begin(), row.end(), v);
}

void Graph::validate() const {
    if (adj.size() != n) throw std::domain_error("adjacency size mismatch");
    std::uint64_t half_edges = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
        const auto& row = adj[u];
        if (!std::is_sorted(row.begin(), row.end()))
            throw std::domain_error("adjacency list not sorted");
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::domain_error("duplicate edge");
        for (Vertex v : row) {
            if (v >= n) throw std::domain_error("neighbor out of range");
            if (v == u) throw std::domain_error("self loop");
            if (!has_edge(v, static_cast<Vertex>(u)))
                throw std::domain_error("asymmetric adjacency");
        }
        half_edges += row.size();
    }
    if (half_edges != 2 * edge_count) throw std::domain_error("edge count mismatch");
}

Graph build_graph(std::uint64_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [u, v] : edges) {
        if (u == v) throw std::domain_error("self loop");
        if (u >= n || v >= n) throw std::domain_error("vertex out of range");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& row : g.adj) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::domain_error("duplicate edge");
    }
    g.edge_count = edges.size();
    return g;
}

void write_edge_list(const Graph& g, const GraphMeta& meta, std::ostream& out) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "# cameo n=%llu c=%.17g alpha=%.17g seed=%llu\n",
                  static_cast<unsigned long long>(meta.n), meta.c, meta.alpha,
                  static_cast<unsigned long long>(meta.seed));
    out << buf;
    for (std::uint64_t u = 0; u < g.n; ++u) {
        for (Vertex v : g.adj[u]) {
            if (v <= u) continue;
            out << u << ' ' << v << '\n';
        }
    }
}

LoadedGraph read_edge_list(std::istream& in) {
    LoadedGraph result;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::optional<std::uint64_t> header_n;
    std::string line;
    bool first = true;
    Vertex max_vertex = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (first && line.rfind("# cameo ", 0) == 0) {
                GraphMeta meta;
                unsigned long long n = 0, seed = 0;
                if (std::sscanf(line.c_str(), "# cameo n=%llu c=%lg alpha=%lg seed=%llu", &n,
                                &meta.c, &meta.alpha, &seed) == 4) {
                    meta.n = n;
                    meta.seed = seed;
                    header_n = n;
                    result.meta = meta;
                }
            }
            first = false;
            continue;
        }
        first = false;
        std::istringstream row(line);
        std::uint64_t u = 0, v = 0;
        if (!(row >> u >> v)) throw std::domain_error("bad edge list line: " + line);
        if (u >= v) throw std::domain_error("edge list requires u < v: " + line);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        max_vertex = std::max(max_vertex, static_cast<Vertex>(v));
    }
    const std::uint64_t n =
        header_n ? *header_n : (edges.empty() ? 0 : static_cast<std::uint64_t>(max_vertex) + 1);
    result.graph = build_graph(n, edges);
    return result;
}

std::map<std::uint64_t, std::uint64_t> empirical_degree_histogram(const Graph& g) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t u = 0; u < g.n; ++u) ++hist[g.adj[u].size()];
    return hist;
}

}  // namespace cameo
