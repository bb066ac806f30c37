#pragma once

#include <string>
#include <vector>

#include "clutterkit/bitset.hpp"

namespace clutterkit {

// Antichain of nonempty vertex subsets. Vertex ids are positions in
// `labels`; every edge lives on the universe [0, labels.size()).
struct Clutter {
    std::vector<std::string> labels;
    std::vector<Bitset> edges;

    int vertex_count() const { return int(labels.size()); }
    int edge_count() const { return int(edges.size()); }
};

// Resolves label lists to id sets and validates: distinct labels, known
// labels only, no empty edge, pairwise incomparable edges. Duplicate members
// within one edge collapse. Edge order is kept as given.
Clutter build_clutter(const std::vector<std::string>& labels,
                      const std::vector<std::vector<std::string>>& edge_lists);

// Same validation for edges already in id form.
Clutter make_clutter(std::vector<std::string> labels, std::vector<Bitset> edges);

// Throws if `c` breaks any Clutter invariant.
void validate(const Clutter& c);

// Keeps the inclusion-maximal sets; of equal sets only the first survives.
// Input order of survivors is preserved.
std::vector<Bitset> normalize_antichain(const std::vector<Bitset>& sets);

// No vertex lies in every edge. Requires at least one edge.
bool check_c1(const Clutter& c);

// Every vertex lies in some edge.
bool check_c2(const Clutter& c);

// Drops vertices covered by no edge and renumbers the rest, keeping label
// and edge order. Idempotent.
Clutter remove_isolated(const Clutter& c);

// Applies the vertex bijection v -> perm[v] to labels and edges.
Clutter relabel(const Clutter& c, const std::vector<int>& perm);

}  // namespace clutterkit
