#include "clutterkit/graph.hpp"

#include <algorithm>
#include <cassert>

#include "clutterkit/error.hpp"

namespace clutterkit {

Graph Graph::make(int n) {
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels[std::size_t(v)] = std::to_string(v);
    return make(std::move(labels));
}

Graph Graph::make(std::vector<std::string> labels) {
    Graph g;
    g.adj.assign(labels.size(), Bitset(int(labels.size())));
    g.labels = std::move(labels);
    return g;
}

void Graph::add_edge(int u, int v) {
    assert(u != v);
    adj[std::size_t(u)].set(v);
    adj[std::size_t(v)].set(u);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        adj[std::size_t(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph complement(const Graph& g) {
    Graph c = Graph::make(g.labels);
    for (int v = 0; v < g.vertex_count(); ++v) {
        c.adj[std::size_t(v)] = ~g.adj[std::size_t(v)];
        c.adj[std::size_t(v)].reset(v);
    }
    return c;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    Bitset seen = Bitset::of(n, {0});
    Bitset frontier = seen;
    while (!frontier.empty()) {
        Bitset next(n);
        frontier.for_each([&](int v) { next |= g.adj[std::size_t(v)]; });
        frontier = next - seen;
        seen |= frontier;
    }
    return seen == Bitset::full(n);
}

bool is_excluded_exception(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return true;  // K_1
    if (n != 4 && n != 6 && n != 8) return false;
    int a = n / 2;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != a) return false;
    // candidate sides: vertex 0 with its non-neighbours vs its neighbours
    Bitset side_a = ~g.adj[0];
    Bitset side_b = g.adj[0];
    if (side_a.count() != a) return false;
    bool ok = true;
    side_a.for_each([&](int u) { ok = ok && g.adj[std::size_t(u)] == side_b; });
    side_b.for_each([&](int v) { ok = ok && g.adj[std::size_t(v)] == side_a; });
    return ok;
}

namespace {

// Bron-Kerbosch with pivoting on the complement: cliques there are
// independent sets here. Every branch keeps R a clique extendable inside P,
// so each maximal clique is reported exactly once.
struct CliqueEnum {
    const std::vector<Bitset>& adj;
    std::size_t cap;
    std::vector<Bitset> out;

    void expand(const Bitset& r, Bitset p, Bitset x) {
        if (p.empty() && x.empty()) {
            if (out.size() >= cap)
                throw Error(ErrorKind::OutputCapExceeded,
                            "more than " + std::to_string(cap) + " maximal sets",
                            static_cast<long long>(cap));
            out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        (p | x).for_each([&](int u) {
            int gain = (p & adj[std::size_t(u)]).count();
            if (gain > best) {
                best = gain;
                pivot = u;
            }
        });
        Bitset candidates = p - adj[std::size_t(pivot)];
        for (int v : candidates.members()) {
            Bitset rv = r;
            rv.set(v);
            expand(rv, p & adj[std::size_t(v)], x & adj[std::size_t(v)]);
            p.reset(v);
            x.set(v);
        }
    }
};

std::vector<Bitset> maximal_cliques(const Graph& g, std::size_t cap) {
    int n = g.vertex_count();
    CliqueEnum ce{g.adj, cap, {}};
    ce.expand(Bitset(n), Bitset::full(n), Bitset(n));
    std::sort(ce.out.begin(), ce.out.end(), Bitset::LexLess{});
    return std::move(ce.out);
}

}  // namespace

std::vector<Bitset> enumerate_maximal_independent_sets(const Graph& g, std::size_t cap) {
    if (g.vertex_count() == 0)
        throw Error(ErrorKind::PreconditionFailed, "graph has no vertices");
    return maximal_cliques(complement(g), cap);
}

std::pair<Graph, std::vector<std::pair<int, int>>> line_graph(const Graph& g) {
    auto edges = g.edge_list();
    std::vector<std::string> labels;
    labels.reserve(edges.size());
    for (auto [u, v] : edges)
        labels.push_back(g.labels[std::size_t(u)] + "-" + g.labels[std::size_t(v)]);
    Graph lg = Graph::make(std::move(labels));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) lg.add_edge(int(i), int(j));
        }
    return {std::move(lg), std::move(edges)};
}

std::vector<Bitset> enumerate_maximal_matchings(const Graph& g, std::size_t cap) {
    auto [lg, edges] = line_graph(g);
    if (edges.empty()) return {};
    return enumerate_maximal_independent_sets(lg, cap);
}

Clutter mis_clutter(const Graph& g, std::size_t cap) {
    return Clutter{g.labels, enumerate_maximal_independent_sets(g, cap)};
}

Clutter matching_clutter(const Graph& g, std::size_t cap) {
    auto [lg, edges] = line_graph(g);
    if (edges.empty())
        throw Error(ErrorKind::NoGraphEdges, "graph has no edges, so no matchings");
    return Clutter{lg.labels, enumerate_maximal_independent_sets(lg, cap)};
}

}  // namespace clutterkit
