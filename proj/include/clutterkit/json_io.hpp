#pragma once

#include <json.hpp>

#include "clutterkit/bounds.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/graph.hpp"
#include "clutterkit/hardness.hpp"
#include "clutterkit/rational.hpp"

namespace clutterkit {

// Integers whose magnitude exceeds 2^53 are emitted as decimal strings so
// the numbers survive double-precision JSON consumers; both forms parse.
nlohmann::json int_to_json(long long v);
long long int_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

// {"vertices": [...], "edges": [[...], ...]}. Vertex order defines ids.
// Edges are emitted with members sorted by id and the edge list sorted by
// ascending member sequence; input order is free.
nlohmann::json clutter_to_json(const Clutter& c);
Clutter clutter_from_json(const nlohmann::json& j);
Clutter clutter_from_string(const std::string& text);

// {"vertices": [...], "adjacency": [["a","b"], ...]}, pairs sorted.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Plain text: "p <n> <m>" then m lines "e <u> <v>". When every endpoint is
// a decimal integer in [0, n) the endpoints are ids and labels default to
// "0".."n-1"; otherwise endpoints are labels, ids assigned by first
// appearance, and all n labels must appear. Lines starting with 'c' or '#'
// are comments.
Graph graph_from_text(const std::string& text);

// Accepts either format, sniffing for a leading '{'.
Graph graph_from_string(const std::string& text);

nlohmann::json hardness_report_to_json(const HardnessReport& rep, const Clutter& c,
                                       bool include_witnesses);

nlohmann::json bound_comparison_to_json(const BoundComparison& bc);
BoundComparison bound_comparison_from_json(const nlohmann::json& j);

nlohmann::json theorem_report_to_json(const TheoremReport& rep);
TheoremReport theorem_report_from_json(const nlohmann::json& j);

nlohmann::json proof_trace_to_json(const ProofTrace& t);
ProofTrace proof_trace_from_json(const nlohmann::json& j);

}  // namespace clutterkit
