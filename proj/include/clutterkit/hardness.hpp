#pragma once

#include <vector>

#include "clutterkit/bitset.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/rational.hpp"

namespace clutterkit {

struct EdgeHardness {
    Rational c;      // |witness| / |edge|
    Bitset witness;  // canonical minimum recognizing subset of the edge
};

struct HardnessReport {
    std::vector<EdgeHardness> per_edge;
    Rational overall;    // max over edges, 0/1 when there are none
    int argmax_edge;     // smallest attaining index, -1 when there are none
};

// The sets edge[i] \ edge[j] for j != i, in ascending j order, with any
// target that strictly contains another (or repeats an earlier one)
// dropped. A subset of edge i recognizes it iff it meets every target.
std::vector<Bitset> difference_targets(const Clutter& c, int i);

// Minimum hitting set of `targets` over [0, universe): smallest size, and
// among those the lexicographically least ascending member sequence.
// Empty target list yields the empty set; an empty target is an error.
Bitset min_hitting_set(const std::vector<Bitset>& targets, int universe);

// Canonical minimum recognizing subset of edge i: least size, then
// lexicographically least. The unique edge of a one-edge clutter is
// recognized by the empty set.
Bitset min_recognizing_subset(const Clutter& c, int i);

// Independent oracle: enumerates subsets of edge i by (size, lex) and
// returns the first recognizing one. Rejects edges above 20 vertices.
Bitset brute_force_min_recognizing(const Clutter& c, int i);

Rational edge_hardness(const Clutter& c, int i);

// Hardness of every edge plus the maximum. Edges are independent, so they
// are solved in parallel; results land in preallocated slots and the
// maximum is reduced in index order afterwards, so the report is identical
// to the serial one.
HardnessReport clutter_hardness(const Clutter& c);

// Single-threaded reference implementation.
HardnessReport clutter_hardness_serial(const Clutter& c);

}  // namespace clutterkit
