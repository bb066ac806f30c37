#include <doctest.h>

#include <vector>

#include "clutterkit/constructions.hpp"
#include "clutterkit/error.hpp"
#include "clutterkit/graph.hpp"
#include "clutterkit/prng.hpp"
#include "helpers.hpp"

using namespace clutterkit;

namespace {

Graph path(int n) {
    Graph g = Graph::make(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph prism() {
    Graph g = Graph::make(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

Graph disjoint_triangles(int t) {
    Graph g = Graph::make(3 * t);
    for (int i = 0; i < t; ++i) {
        g.add_edge(3 * i, 3 * i + 1);
        g.add_edge(3 * i + 1, 3 * i + 2);
        g.add_edge(3 * i, 3 * i + 2);
    }
    return g;
}

bool same_graph(const Graph& a, const Graph& b) {
    return a.labels == b.labels && a.adj == b.adj;
}

}  // namespace

TEST_CASE("edge list is ascending with both endpoint orders accepted") {
    Graph g = Graph::make(4);
    g.add_edge(3, 1);
    g.add_edge(0, 2);
    g.add_edge(2, 0);  // repeat is absorbed
    CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(0) == 1);
    CHECK(g.labels == std::vector<std::string>{"0", "1", "2", "3"});
}

TEST_CASE("complement is an involution") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(2 + int(seed % 9), 1, 2, seed);
        CHECK(same_graph(complement(complement(g)), g));
    }
    Graph k4 = complete_graph(4);
    CHECK(complement(k4).edge_count() == 0);
    CHECK(same_graph(complement(complement(k4)), k4));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(Graph::make(1)));
    CHECK_FALSE(is_connected(Graph::make(2)));
    CHECK(is_connected(path(5)));
    CHECK(is_connected(cycle(6)));
    Graph two_edges = Graph::make(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK_FALSE(is_connected(two_edges));
    CHECK(is_connected(prism()));
}

TEST_CASE("exception detector accepts exactly K1 and balanced bicliques up to 4+4") {
    CHECK(is_excluded_exception(Graph::make(1)));
    CHECK(is_excluded_exception(complete_bipartite(2, 2)));
    CHECK(is_excluded_exception(complete_bipartite(3, 3)));
    CHECK(is_excluded_exception(complete_bipartite(4, 4)));
    // the four-cycle is the balanced biclique on 2+2 in another presentation
    CHECK(is_excluded_exception(cycle(4)));

    CHECK_FALSE(is_excluded_exception(complete_graph(2)));
    CHECK_FALSE(is_excluded_exception(complete_graph(4)));
    CHECK_FALSE(is_excluded_exception(cycle(6)));
    CHECK_FALSE(is_excluded_exception(cycle(8)));
    CHECK_FALSE(is_excluded_exception(complete_bipartite(2, 3)));
    CHECK_FALSE(is_excluded_exception(complete_bipartite(5, 5)));
    CHECK_FALSE(is_excluded_exception(prism()));

    Graph padded = Graph::make(5);  // K22 plus an isolated vertex
    padded.add_edge(0, 2);
    padded.add_edge(0, 3);
    padded.add_edge(1, 2);
    padded.add_edge(1, 3);
    CHECK_FALSE(is_excluded_exception(padded));
}

TEST_CASE("maximal independent sets on frozen graphs") {
    CHECK(enumerate_maximal_independent_sets(path(3)) ==
          std::vector<Bitset>{Bitset::of(3, {0, 2}), Bitset::of(3, {1})});
    CHECK(enumerate_maximal_independent_sets(complete_graph(3)) ==
          std::vector<Bitset>{Bitset::of(3, {0}), Bitset::of(3, {1}), Bitset::of(3, {2})});
    CHECK(enumerate_maximal_independent_sets(cycle(4)) ==
          std::vector<Bitset>{Bitset::of(4, {0, 2}), Bitset::of(4, {1, 3})});
    CHECK(enumerate_maximal_independent_sets(cycle(5)) ==
          std::vector<Bitset>{Bitset::of(5, {0, 2}), Bitset::of(5, {0, 3}),
                              Bitset::of(5, {1, 3}), Bitset::of(5, {1, 4}),
                              Bitset::of(5, {2, 4})});
    CHECK(enumerate_maximal_independent_sets(Graph::make(3)) ==
          std::vector<Bitset>{Bitset::full(3)});
    CHECK(enumerate_maximal_independent_sets(complete_graph(5)).size() == 5);
}

TEST_CASE("independent-set enumeration matches the mask sweep") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        SplitMix64 g(seed);
        int n = 2 + int(g.below(7));
        Graph graph = random_graph(n, 1 + g.below(3), 4, g.next());
        CHECK(enumerate_maximal_independent_sets(graph) == testref::brute_mis(graph));
    }
}

TEST_CASE("enumeration cap") {
    Graph g = disjoint_triangles(3);  // 27 maximal independent sets
    CHECK(enumerate_maximal_independent_sets(g, 27).size() == 27);
    CHECK_THROWS_AS(enumerate_maximal_independent_sets(g, 26), Error);
    try {
        enumerate_maximal_independent_sets(g, 26);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutputCapExceeded);
    }
}

TEST_CASE("line graph") {
    auto [lp, ep] = line_graph(path(3));
    CHECK(lp.vertex_count() == 2);
    CHECK(lp.labels == std::vector<std::string>{"0-1", "1-2"});
    CHECK(lp.has_edge(0, 1));
    CHECK(ep == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    auto [lt, et] = line_graph(complete_graph(3));
    CHECK(lt.vertex_count() == 3);
    CHECK(lt.edge_count() == 3);  // triangle turns into a triangle
    CHECK(et.size() == 3);

    auto [le, ee] = line_graph(Graph::make(2));
    CHECK(le.vertex_count() == 0);
    CHECK(ee.empty());
}

TEST_CASE("maximal matchings on frozen graphs") {
    // path on 4 vertices has edges 0:(0,1) 1:(1,2) 2:(2,3)
    CHECK(enumerate_maximal_matchings(path(4)) ==
          std::vector<Bitset>{Bitset::of(3, {0, 2}), Bitset::of(3, {1})});
    CHECK(enumerate_maximal_matchings(complete_graph(3)) ==
          std::vector<Bitset>{Bitset::of(3, {0}), Bitset::of(3, {1}), Bitset::of(3, {2})});
    CHECK(enumerate_maximal_matchings(Graph::make(3)).empty());
}

TEST_CASE("matching enumeration matches the mask sweep") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        SplitMix64 g(seed + 7);
        int n = 2 + int(g.below(6));
        Graph graph = random_graph(n, 1 + g.below(3), 4, g.next());
        if (graph.edge_count() > 18) continue;
        CHECK(enumerate_maximal_matchings(graph) == testref::brute_matchings(graph));
    }
}

TEST_CASE("independent-set clutter carries the vertex labels") {
    Graph g = Graph::make({"left", "mid", "right"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Clutter c = mis_clutter(g);
    CHECK(c.labels == std::vector<std::string>{"left", "mid", "right"});
    CHECK(c.edges == std::vector<Bitset>{Bitset::of(3, {0, 2}), Bitset::of(3, {1})});
    CHECK_NOTHROW(validate(c));
}

TEST_CASE("matching clutter names edges by their endpoints") {
    Clutter c = matching_clutter(path(4));
    CHECK(c.labels == std::vector<std::string>{"0-1", "1-2", "2-3"});
    CHECK(c.edges == std::vector<Bitset>{Bitset::of(3, {0, 2}), Bitset::of(3, {1})});
    CHECK_NOTHROW(validate(c));

    try {
        matching_clutter(Graph::make(4));
        FAIL("edgeless graph accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoGraphEdges);
    }
}

TEST_CASE("maximal-set clutters are antichains by construction") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        SplitMix64 g(seed * 13 + 1);
        int n = 3 + int(g.below(6));
        Graph graph = random_graph(n, 1, 2, g.next());
        CHECK_NOTHROW(validate(mis_clutter(graph)));
        if (graph.edge_count() > 0) CHECK_NOTHROW(validate(matching_clutter(graph)));
    }
}
