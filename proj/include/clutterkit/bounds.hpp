#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/error.hpp"
#include "clutterkit/graph.hpp"
#include "clutterkit/rational.hpp"

namespace clutterkit {

enum class BoundRelation { Less, Equal, Greater };

enum class BoundKind { Main, General, Mis };

// How a rational value sits against one of the bounds at a given n.
struct BoundComparison {
    BoundRelation relation;
    Rational lhs;
    BoundKind kind;
    int n;
};

// 1/(n-1), the floor for any clutter with at least two edges. n >= 2.
Rational general_lower_bound(int n);

// value vs 1/(n - 2*sqrt(n) + 2), decided exactly: the single square root
// is isolated and squared once, with the sign handled first. n >= 2.
BoundComparison compare_main_bound(const Rational& value, int n);

// value vs 1/(n-1), exact rational comparison. n >= 2.
BoundComparison compare_general_bound(const Rational& value, int n);

// value vs 1/(1 + n - 2*sqrt(n-1)), the floor for clutters of maximal
// independent sets of connected graphs other than the four known
// exceptions. Same exact squaring scheme. n >= 2.
BoundComparison compare_mis_bound(const Rational& value, int n);

struct TheoremReport {
    int n = 0;
    int m = 0;
    bool c1 = false;       // false when there are no edges
    bool c2 = false;
    Rational hardness;     // overall hardness, 0/1 for an edgeless clutter
    bool applicable = false;  // c1 && c2 && m >= 2
    std::optional<BoundComparison> comparison;  // vs main bound; absent when n < 2
};

// Carries the full evidence when a clutter that satisfies the theorem's
// hypotheses lands strictly below the bound.
class TheoremViolation : public Error {
public:
    TheoremViolation(TheoremReport report, Clutter clutter);
    const TheoremReport& report() const { return report_; }
    const Clutter& clutter() const { return clutter_; }

private:
    TheoremReport report_;
    Clutter clutter_;
};

// Checks a clutter against the main bound. Throws TheoremViolation iff the
// hypotheses hold (no common vertex, full coverage, m >= 2) and the
// hardness still compares Less.
TheoremReport verify_theorem(const Clutter& c);

// Graph on the clutter's vertices joining u and v iff no edge contains
// both. Requires at least one edge.
Graph auxiliary_graph(const Clutter& c);

// One checked inequality lhs <= rhs inside a proof trace.
struct TraceStep {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};

enum class TraceBranch { TwoPlus, AllSingletons };

// Mechanical replay of the lower-bound argument on one concrete clutter.
// Every recorded step must hold, or proof_trace throws.
struct ProofTrace {
    TraceBranch branch = TraceBranch::TwoPlus;
    int n = 0;
    int m = 0;
    Rational hardness;
    std::vector<TraceStep> chain;
    BoundComparison final_comparison{};  // hardness vs main bound

    // TwoPlus: some canonical witness has two or more vertices.
    int witness_edge = -1;
    std::optional<BoundComparison> two_bound;  // 2/(n-1) vs main bound

    // AllSingletons: every canonical witness is one vertex.
    std::vector<int> recognizer_vertices;  // witness vertex of each edge
    Graph aux_graph;
    bool clique_ok = false;
    bool coverage_ok = false;
    int z = -1;          // recognizer vertex of maximum auxiliary degree
    int degree_z = 0;
    int edge_of_z = -1;  // the unique edge containing z
};

// Requires m >= 2, no common vertex, full coverage (PreconditionFailed
// otherwise). Throws TraceAssertionFailed if any step of the replay fails.
ProofTrace proof_trace(const Clutter& c);

// True when 1/(n-1) <= 1/(n - 2*sqrt(n) + 2) <= 1/(1 + n - 2*sqrt(n-1)),
// decided exactly. n >= 3.
bool sandwich_check(int n);

}  // namespace clutterkit
