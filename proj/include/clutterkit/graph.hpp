#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clutterkit/bitset.hpp"
#include "clutterkit/clutter.hpp"

namespace clutterkit {

inline constexpr std::size_t kDefaultEnumCap = 1'000'000;

// Simple undirected graph, adjacency kept as one bitset row per vertex.
struct Graph {
    std::vector<std::string> labels;
    std::vector<Bitset> adj;

    static Graph make(int n);  // labels "0".."n-1"
    static Graph make(std::vector<std::string> labels);

    int vertex_count() const { return int(adj.size()); }
    int degree(int v) const { return adj[std::size_t(v)].count(); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj[std::size_t(u)].test(v); }

    // Pairs (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edge_list() const;
    int edge_count() const { return int(edge_list().size()); }
};

Graph complement(const Graph& g);

bool is_connected(const Graph& g);

// K_1 or K_{a,a} for a in {2, 3, 4}, under any vertex numbering.
bool is_excluded_exception(const Graph& g);

// All maximal independent sets, sorted by ascending member sequence.
// Throws OutputCapExceeded past `cap` sets.
std::vector<Bitset> enumerate_maximal_independent_sets(const Graph& g,
                                                       std::size_t cap = kDefaultEnumCap);

// Vertex i of the result is edge i of `edge_list(g)`; adjacency is shared
// endpoints. Second member is that edge list.
std::pair<Graph, std::vector<std::pair<int, int>>> line_graph(const Graph& g);

// All maximal matchings as sets of edge ids (positions in edge_list(g)),
// sorted by ascending member sequence.
std::vector<Bitset> enumerate_maximal_matchings(const Graph& g,
                                                std::size_t cap = kDefaultEnumCap);

// Clutter of maximal independent sets on the graph's vertices.
Clutter mis_clutter(const Graph& g, std::size_t cap = kDefaultEnumCap);

// Clutter of maximal matchings on the graph's edges; edge ids are labelled
// "<u-label>-<v-label>". Requires at least one edge.
Clutter matching_clutter(const Graph& g, std::size_t cap = kDefaultEnumCap);

}  // namespace clutterkit
