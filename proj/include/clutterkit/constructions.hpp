#pragma once

#include <cstdint>

#include "clutterkit/clutter.hpp"
#include "clutterkit/graph.hpp"

namespace clutterkit {

// Two edges sharing all of a common block: {v1} u B and {v2} u B with
// B = {v3..vn}. Hardness 1/(n-1). Labels "1".."n". Requires n >= 3.
Clutter example1(int n);

// k-clique q_0..q_{k-1}, each q_i additionally joined to its own k-1
// pendants. n = k^2 vertices. Requires k >= 2.
Graph extremal_graph(int k);

// The k maximal independent sets of extremal_graph(k) that miss exactly one
// pendant block: edge i is {q_i} u (pendants \ block_i). Hardness exactly
// 1/(1 + (k-1)^2). Requires k >= 2.
Clutter extremal_clutter(int k);

Graph complete_graph(int n);

Graph complete_bipartite(int a, int b);

struct SizeRange {
    int lo;
    int hi;
};

// m_target member sets with sizes uniform in [lo, hi], members drawn
// without replacement, reduced to the maximal antichain; the result may
// have fewer than m_target edges. Labels "0".."n-1". Deterministic in
// (n, m_target, size_range, seed).
Clutter random_clutter(int n, int m_target, SizeRange size_range, std::uint64_t seed);

// Retries random_clutter on derived subseeds, dropping isolated vertices,
// until the result has no common vertex, full coverage, and at least two
// edges. Throws RetriesExhausted after max_retries attempts.
Clutter random_clutter_c1c2(int n, int m_target, SizeRange size_range, std::uint64_t seed,
                            int max_retries = 100);

// G(n, p) with p = p_num/p_den: pairs (u, v), u < v, visited in ascending
// order, each kept when the next draw below p_den lands under p_num.
Graph random_graph(int n, long long p_num, long long p_den, std::uint64_t seed);

}  // namespace clutterkit
