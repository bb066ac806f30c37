#pragma once

// Brute-force references shared by the unit and acceptance suites. These
// deliberately avoid the library's algorithms: masks and quantifier sweeps
// only, so they stay a genuinely independent check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "clutterkit/bitset.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/graph.hpp"

namespace testref {

using clutterkit::Bitset;
using clutterkit::Clutter;
using clutterkit::Graph;

inline Bitset from_mask(std::uint32_t mask, int n) {
    Bitset s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.set(v);
    return s;
}

inline std::uint32_t to_mask(const Bitset& s) {
    std::uint32_t mask = 0;
    s.for_each([&](int v) { mask |= 1u << v; });
    return mask;
}

inline Clutter clutter_of_masks(int n, const std::vector<std::uint32_t>& masks) {
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels[std::size_t(v)] = std::to_string(v);
    std::vector<Bitset> edges;
    edges.reserve(masks.size());
    for (std::uint32_t m : masks) edges.push_back(from_mask(m, n));
    return Clutter{std::move(labels), std::move(edges)};
}

// All maximal independent sets by sweeping every vertex mask. n <= 20.
inline std::vector<Bitset> brute_mis(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) adj[std::size_t(u)] = to_mask(g.adj[std::size_t(u)]);
    std::vector<Bitset> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (int u = 0; u < n && independent; ++u)
            if ((mask >> u & 1u) && (adj[std::size_t(u)] & mask)) independent = false;
        if (!independent) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(mask >> v & 1u) && !(adj[std::size_t(v)] & mask)) maximal = false;
        if (maximal) out.push_back(from_mask(mask, n));
    }
    std::sort(out.begin(), out.end(), Bitset::LexLess{});
    return out;
}

// All maximal matchings by sweeping every edge mask. |E| <= 20. An edgeless
// graph yields no matchings, matching the library convention.
inline std::vector<Bitset> brute_matchings(const Graph& g) {
    auto edges = g.edge_list();
    int ecount = int(edges.size());
    if (ecount == 0) return {};
    std::vector<std::uint32_t> conflict(static_cast<std::size_t>(ecount), 0);
    for (int i = 0; i < ecount; ++i)
        for (int j = 0; j < ecount; ++j) {
            if (i == j) continue;
            auto [a, b] = edges[std::size_t(i)];
            auto [c, d] = edges[std::size_t(j)];
            if (a == c || a == d || b == c || b == d) conflict[std::size_t(i)] |= 1u << j;
        }
    std::vector<Bitset> out;
    for (std::uint32_t mask = 0; mask < (1u << ecount); ++mask) {
        bool matching = true;
        for (int i = 0; i < ecount && matching; ++i)
            if ((mask >> i & 1u) && (conflict[std::size_t(i)] & mask)) matching = false;
        if (!matching) continue;
        bool maximal = true;
        for (int j = 0; j < ecount && maximal; ++j)
            if (!(mask >> j & 1u) && !(conflict[std::size_t(j)] & mask)) maximal = false;
        if (maximal) out.push_back(from_mask(mask, ecount));
    }
    std::sort(out.begin(), out.end(), Bitset::LexLess{});
    return out;
}

// Smallest hitting set, ties broken by least ascending member sequence,
// found by trying combinations of each size in lexicographic order.
inline Bitset brute_min_hitting(const std::vector<Bitset>& targets, int universe) {
    Bitset found(universe);
    bool done = false;
    std::vector<int> pick;
    auto hits_all = [&]() {
        for (const Bitset& t : targets) {
            bool hit = false;
            for (int v : pick)
                if (t.test(v)) hit = true;
            if (!hit) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int next, int k) -> void {
        if (done) return;
        if (int(pick.size()) == k) {
            if (hits_all()) {
                for (int v : pick) found.set(v);
                done = true;
            }
            return;
        }
        for (int v = next; v < universe && !done; ++v) {
            pick.push_back(v);
            self(self, v + 1, k);
            pick.pop_back();
        }
    };
    for (int k = 0; k <= universe && !done; ++k) rec(rec, 0, k);
    return found;
}

// Every antichain of nonempty subsets of [0, n), members listed in
// ascending mask order; f(masks) returning false stops the walk.
template <typename F>
inline bool antichain_walk(int n, std::uint32_t start, std::vector<std::uint32_t>& cur, F& f) {
    for (std::uint32_t mask = start; mask < (1u << n); ++mask) {
        bool comparable = false;
        for (std::uint32_t c : cur)
            if ((c & mask) == c || (c & mask) == mask) comparable = true;
        if (comparable) continue;
        cur.push_back(mask);
        bool keep = f(static_cast<const std::vector<std::uint32_t>&>(cur)) &&
                    antichain_walk(n, mask + 1, cur, f);
        cur.pop_back();
        if (!keep) return false;
    }
    return true;
}

template <typename F>
inline void for_each_antichain(int n, F f) {
    std::vector<std::uint32_t> cur;
    antichain_walk(n, 1, cur, f);
}

}  // namespace testref
