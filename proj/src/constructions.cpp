#include "clutterkit/constructions.hpp"

#include <numeric>
#include <utility>

#include "clutterkit/error.hpp"
#include "clutterkit/prng.hpp"

namespace clutterkit {

Clutter example1(int n) {
    if (n < 3)
        throw Error(ErrorKind::NTooSmall, "need n >= 3, got " + std::to_string(n), n);
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels[std::size_t(v)] = std::to_string(v + 1);
    Bitset block(n);
    for (int v = 2; v < n; ++v) block.set(v);
    Bitset e1 = block, e2 = block;
    e1.set(0);
    e2.set(1);
    return make_clutter(std::move(labels), {e1, e2});
}

namespace {

std::vector<std::string> extremal_labels(int k) {
    int n = k * k;
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) labels[std::size_t(i)] = "q" + std::to_string(i);
    for (int u = k; u < n; ++u) labels[std::size_t(u)] = "u" + std::to_string(u - k);
    return labels;
}

}  // namespace

Graph extremal_graph(int k) {
    if (k < 2)
        throw Error(ErrorKind::KTooSmall, "need k >= 2, got " + std::to_string(k), k);
    Graph g = Graph::make(extremal_labels(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    // pendant block i occupies ids [k + i(k-1), k + (i+1)(k-1))
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < k - 1; ++t) g.add_edge(i, k + i * (k - 1) + t);
    return g;
}

Clutter extremal_clutter(int k) {
    if (k < 2)
        throw Error(ErrorKind::KTooSmall, "need k >= 2, got " + std::to_string(k), k);
    int n = k * k;
    std::vector<Bitset> edges;
    edges.reserve(std::size_t(k));
    for (int i = 0; i < k; ++i) {
        Bitset e(n);
        e.set(i);
        int lo = k + i * (k - 1), hi = lo + (k - 1);
        for (int u = k; u < n; ++u)
            if (u < lo || u >= hi) e.set(u);
        edges.push_back(std::move(e));
    }
    return make_clutter(extremal_labels(k), std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1)
        throw Error(ErrorKind::SizeTooSmall, "need n >= 1, got " + std::to_string(n), n);
    Graph g = Graph::make(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw Error(ErrorKind::SizeTooSmall,
                    "need both sides >= 1, got " + std::to_string(a) + " and " + std::to_string(b));
    Graph g = Graph::make(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Clutter random_clutter(int n, int m_target, SizeRange size_range, std::uint64_t seed) {
    if (n < 1)
        throw Error(ErrorKind::NTooSmall, "need n >= 1, got " + std::to_string(n), n);
    if (m_target < 1)
        throw Error(ErrorKind::SizeTooSmall, "need m_target >= 1, got " + std::to_string(m_target));
    if (size_range.lo < 1 || size_range.lo > size_range.hi || size_range.hi > n)
        throw Error(ErrorKind::SizeTooSmall, "size range must satisfy 1 <= lo <= hi <= n");
    SplitMix64 gen(seed);
    std::vector<Bitset> sets;
    sets.reserve(std::size_t(m_target));
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int t = 0; t < m_target; ++t) {
        int sz = size_range.lo + int(gen.below(std::uint64_t(size_range.hi - size_range.lo + 1)));
        std::iota(pool.begin(), pool.end(), 0);
        Bitset s(n);
        // partial Fisher-Yates: position p takes a uniform pick from [p, n)
        for (int p = 0; p < sz; ++p) {
            int r = p + int(gen.below(std::uint64_t(n - p)));
            std::swap(pool[std::size_t(p)], pool[std::size_t(r)]);
            s.set(pool[std::size_t(p)]);
        }
        sets.push_back(std::move(s));
    }
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels[std::size_t(v)] = std::to_string(v);
    return make_clutter(std::move(labels), normalize_antichain(sets));
}

Clutter random_clutter_c1c2(int n, int m_target, SizeRange size_range, std::uint64_t seed,
                            int max_retries) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Clutter c = remove_isolated(
            random_clutter(n, m_target, size_range, derive_subseed(seed, attempt)));
        if (c.edge_count() >= 2 && check_c1(c) && check_c2(c)) return c;
    }
    throw Error(ErrorKind::RetriesExhausted,
                "no instance met both conditions in " + std::to_string(max_retries) + " attempts");
}

Graph random_graph(int n, long long p_num, long long p_den, std::uint64_t seed) {
    if (n < 1)
        throw Error(ErrorKind::NTooSmall, "need n >= 1, got " + std::to_string(n), n);
    if (p_den < 1 || p_num < 0 || p_num > p_den)
        throw Error(ErrorKind::PreconditionFailed, "edge probability must lie in [0, 1]");
    SplitMix64 gen(seed);
    Graph g = Graph::make(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (gen.below(std::uint64_t(p_den)) < std::uint64_t(p_num)) g.add_edge(u, v);
    return g;
}

}  // namespace clutterkit
