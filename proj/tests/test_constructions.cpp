#include <doctest.h>

#include <algorithm>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/constructions.hpp"
#include "clutterkit/error.hpp"
#include "clutterkit/graph.hpp"
#include "clutterkit/hardness.hpp"

using namespace clutterkit;

namespace {

ErrorKind kind_of_call(void (*f)()) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a domain error");
    return ErrorKind::ParseError;
}

std::vector<Bitset> sorted_edges(const Clutter& c) {
    std::vector<Bitset> out = c.edges;
    std::sort(out.begin(), out.end(), Bitset::LexLess{});
    return out;
}

}  // namespace

TEST_CASE("two-edge family with a shared block") {
    Clutter c3 = example1(3);
    CHECK(c3.labels == std::vector<std::string>{"1", "2", "3"});
    CHECK(c3.edges == std::vector<Bitset>{Bitset::of(3, {0, 2}), Bitset::of(3, {1, 2})});

    for (int n = 3; n <= 9; ++n) {
        Clutter c = example1(n);
        CHECK(c.vertex_count() == n);
        CHECK(c.edge_count() == 2);
        CHECK(c.edges[0].count() == n - 1);
        CHECK_FALSE(check_c1(c));  // the block sits in both edges
        CHECK(check_c2(c));
        CHECK(clutter_hardness(c).overall == Rational(1, n - 1));
    }
    CHECK(kind_of_call([] { example1(2); }) == ErrorKind::NTooSmall);
}

TEST_CASE("clique-with-pendants graph") {
    Graph g2 = extremal_graph(2);
    CHECK(g2.labels == std::vector<std::string>{"q0", "q1", "u0", "u1"});
    CHECK(g2.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});

    Graph g3 = extremal_graph(3);
    CHECK(g3.vertex_count() == 9);
    CHECK(g3.edge_count() == 9);  // 3 clique edges + 6 pendant edges
    for (int i = 0; i < 3; ++i) CHECK(g3.degree(i) == 4);
    for (int u = 3; u < 9; ++u) CHECK(g3.degree(u) == 1);
    CHECK(is_connected(g3));
    CHECK(kind_of_call([] { extremal_graph(1); }) == ErrorKind::KTooSmall);
}

TEST_CASE("extremal family lives among the independent sets of its graph") {
    for (int k = 2; k <= 4; ++k) {
        Clutter c = extremal_clutter(k);
        CHECK(c.edge_count() == k);
        CHECK(c.labels == extremal_graph(k).labels);
        std::vector<Bitset> mis = enumerate_maximal_independent_sets(extremal_graph(k));
        for (const Bitset& e : c.edges)
            CHECK(std::find(mis.begin(), mis.end(), e) != mis.end());
    }
    CHECK(kind_of_call([] { extremal_clutter(1); }) == ErrorKind::KTooSmall);
}

TEST_CASE("extremal family at k=2 is the biclique family in disguise") {
    Clutter c = relabel(extremal_clutter(2), {0, 2, 3, 1});
    Clutter mis = mis_clutter(complete_bipartite(2, 2));
    CHECK(sorted_edges(c) == sorted_edges(mis));
}

TEST_CASE("extremal hardness is exactly one over 1 + (k-1)^2") {
    for (int k = 2; k <= 5; ++k) {
        Clutter c = extremal_clutter(k);
        HardnessReport rep = clutter_hardness(c);
        CHECK(rep.overall == Rational(1, 1 + (k - 1) * (k - 1)));
        for (int i = 0; i < k; ++i) {
            CHECK(rep.per_edge[std::size_t(i)].c == rep.overall);
            CHECK(rep.per_edge[std::size_t(i)].witness == Bitset::of(k * k, {i}));
        }
    }
}

TEST_CASE("complete and complete bipartite graphs") {
    Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(complete_graph(1).edge_count() == 0);

    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.degree(0) == 3);
    CHECK(k23.degree(2) == 2);
    CHECK_FALSE(k23.has_edge(0, 1));
    CHECK_FALSE(k23.has_edge(2, 3));

    CHECK(kind_of_call([] { complete_graph(0); }) == ErrorKind::SizeTooSmall);
    CHECK(kind_of_call([] { complete_bipartite(0, 2); }) == ErrorKind::SizeTooSmall);
}

TEST_CASE("random clutters are deterministic in the seed") {
    Clutter a = random_clutter(6, 4, {2, 3}, 7);
    Clutter b = random_clutter(6, 4, {2, 3}, 7);
    CHECK(a.labels == b.labels);
    CHECK(a.edges == b.edges);
    CHECK(sorted_edges(a) ==
          std::vector<Bitset>{Bitset::of(6, {0, 2, 5}), Bitset::of(6, {1, 2, 4}),
                              Bitset::of(6, {1, 5}), Bitset::of(6, {3, 4})});
}

TEST_CASE("random clutters respect their parameters") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        int n = 4 + int(seed % 8);
        Clutter c = random_clutter(n, 5, {2, 3}, seed);
        CHECK_NOTHROW(validate(c));
        CHECK(c.vertex_count() == n);
        CHECK(c.edge_count() >= 1);
        CHECK(c.edge_count() <= 5);
        for (const Bitset& e : c.edges) {
            CHECK(e.count() >= 2);
            CHECK(e.count() <= 3);
        }
    }
}

TEST_CASE("random clutter input validation") {
    CHECK(kind_of_call([] { random_clutter(0, 1, {1, 1}, 0); }) == ErrorKind::NTooSmall);
    CHECK(kind_of_call([] { random_clutter(3, 0, {1, 1}, 0); }) == ErrorKind::SizeTooSmall);
    CHECK(kind_of_call([] { random_clutter(3, 1, {0, 1}, 0); }) == ErrorKind::SizeTooSmall);
    CHECK(kind_of_call([] { random_clutter(3, 1, {2, 1}, 0); }) == ErrorKind::SizeTooSmall);
    CHECK(kind_of_call([] { random_clutter(3, 1, {1, 4}, 0); }) == ErrorKind::SizeTooSmall);
}

TEST_CASE("condition-restricted sampling") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 5 + int(seed % 6);
        Clutter c = random_clutter_c1c2(n, 4, {2, 3}, seed);
        CHECK_NOTHROW(validate(c));
        CHECK(c.edge_count() >= 2);
        CHECK(check_c1(c));
        CHECK(check_c2(c));
    }
    Clutter a = random_clutter_c1c2(8, 4, {2, 4}, 11);
    Clutter b = random_clutter_c1c2(8, 4, {2, 4}, 11);
    CHECK(a.edges == b.edges);
    CHECK(kind_of_call([] { random_clutter_c1c2(1, 1, {1, 1}, 0, 3); }) ==
          ErrorKind::RetriesExhausted);
}

TEST_CASE("random graphs are deterministic in the seed") {
    Graph g = random_graph(5, 1, 2, 1);
    CHECK(g.edge_list() ==
          std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 4}, {3, 4}});
    Graph h = random_graph(5, 1, 2, 1);
    CHECK(g.adj == h.adj);
}

TEST_CASE("edge probability endpoints") {
    CHECK(random_graph(6, 0, 1, 9).edge_count() == 0);
    CHECK(random_graph(6, 1, 1, 9).edge_count() == 15);
    CHECK(kind_of_call([] { random_graph(0, 1, 2, 0); }) == ErrorKind::NTooSmall);
    CHECK(kind_of_call([] { random_graph(3, 3, 2, 0); }) == ErrorKind::PreconditionFailed);
    CHECK(kind_of_call([] { random_graph(3, 1, 0, 0); }) == ErrorKind::PreconditionFailed);
    CHECK(kind_of_call([] { random_graph(3, -1, 2, 0); }) == ErrorKind::PreconditionFailed);
}
