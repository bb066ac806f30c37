#include "clutterkit/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "clutterkit/error.hpp"

namespace clutterkit {

using nlohmann::json;

namespace {

constexpr long long kExactDoubleLimit = 1LL << 53;

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorKind::ParseError, what);
}

std::vector<std::string> string_array(const json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) parse_fail(std::string(what) + " must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail(std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

json int_to_json(long long v) {
    if (v > kExactDoubleLimit || v < -kExactDoubleLimit) return json(std::to_string(v));
    return json(v);
}

long long int_from_json(const json& j) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            parse_fail("'" + s + "' is not an integer");
        return v;
    }
    parse_fail("expected an integer or a decimal string");
}

json rational_to_json(const Rational& r) {
    return json{{"num", int_to_json(r.num())}, {"den", int_to_json(r.den())}};
}

Rational rational_from_json(const json& j) {
    long long num = int_from_json(field(j, "num"));
    long long den = int_from_json(field(j, "den"));
    if (num < 0 || den < 1) parse_fail("rational must be non-negative with positive denominator");
    return Rational(num, den);
}

json clutter_to_json(const Clutter& c) {
    std::vector<int> order(static_cast<std::size_t>(c.edge_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return Bitset::lex_compare(c.edges[std::size_t(a)], c.edges[std::size_t(b)]) < 0;
    });
    json edges = json::array();
    for (int i : order) {
        json edge = json::array();
        c.edges[std::size_t(i)].for_each(
            [&](int v) { edge.push_back(c.labels[std::size_t(v)]); });
        edges.push_back(std::move(edge));
    }
    return json{{"vertices", c.labels}, {"edges", std::move(edges)}};
}

Clutter clutter_from_json(const json& j) {
    if (!j.is_object()) parse_fail("clutter must be a JSON object");
    std::vector<std::string> labels = string_array(field(j, "vertices"), "vertices");
    const json& edges = field(j, "edges");
    if (!edges.is_array()) parse_fail("edges must be an array");
    std::vector<std::vector<std::string>> lists;
    lists.reserve(edges.size());
    for (const auto& e : edges) lists.push_back(string_array(e, "each edge"));
    return build_clutter(labels, lists);
}

Clutter clutter_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        parse_fail(ex.what());
    }
    return clutter_from_json(j);
}

json graph_to_json(const Graph& g) {
    json pairs = json::array();
    for (auto [u, v] : g.edge_list())
        pairs.push_back(json::array({g.labels[std::size_t(u)], g.labels[std::size_t(v)]}));
    return json{{"vertices", g.labels}, {"adjacency", std::move(pairs)}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) parse_fail("graph must be a JSON object");
    std::vector<std::string> labels = string_array(field(j, "vertices"), "vertices");
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!idx.emplace(labels[i], int(i)).second)
            throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");
    Graph g = Graph::make(labels);
    const json& pairs = field(j, "adjacency");
    if (!pairs.is_array()) parse_fail("adjacency must be an array");
    for (const auto& pr : pairs) {
        auto ends = string_array(pr, "each adjacency pair");
        if (ends.size() != 2) parse_fail("each adjacency pair needs exactly two labels");
        auto a = idx.find(ends[0]), b = idx.find(ends[1]);
        if (a == idx.end() || b == idx.end())
            throw Error(ErrorKind::UnknownLabel,
                        "adjacency uses a label outside the vertex list");
        if (a->second == b->second) parse_fail("loops are not allowed");
        g.add_edge(a->second, b->second);
    }
    return g;
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<std::string, std::string>> ends;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c" || head[0] == '#') continue;
        if (head == "p") {
            if (n >= 0) parse_fail("repeated header line");
            if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail("header must read 'p <n> <m>'");
            continue;
        }
        if (head == "e") {
            if (n < 0) parse_fail("edge line before the 'p <n> <m>' header");
            std::string u, v;
            if (!(ls >> u >> v)) parse_fail("edge line must read 'e <u> <v>'");
            ends.emplace_back(std::move(u), std::move(v));
            continue;
        }
        parse_fail("unrecognised line '" + line + "'");
    }
    if (n < 0) parse_fail("missing 'p <n> <m>' header");
    if (static_cast<long long>(ends.size()) != m)
        parse_fail("header promises " + std::to_string(m) + " edges, found " +
                   std::to_string(ends.size()));

    auto as_id = [&](const std::string& s) -> int {
        if (s.empty() || (s.size() > 1 && s[0] == '0')) return -1;
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) return -1;
        return v < n ? v : -1;
    };
    bool all_ids = true;
    for (const auto& [u, v] : ends)
        if (as_id(u) < 0 || as_id(v) < 0) all_ids = false;

    Graph g = Graph::make(n);
    if (all_ids) {
        for (const auto& [u, v] : ends) {
            int a = as_id(u), b = as_id(v);
            if (a == b) parse_fail("loops are not allowed");
            g.add_edge(a, b);
        }
        return g;
    }
    // label mode: ids by first appearance, and every vertex must appear
    std::unordered_map<std::string, int> idx;
    std::vector<std::string> labels;
    auto resolve = [&](const std::string& s) {
        auto it = idx.find(s);
        if (it != idx.end()) return it->second;
        if (int(labels.size()) == n)
            parse_fail("more than " + std::to_string(n) + " distinct endpoint labels");
        idx.emplace(s, int(labels.size()));
        labels.push_back(s);
        return int(labels.size()) - 1;
    };
    std::vector<std::pair<int, int>> id_edges;
    id_edges.reserve(ends.size());
    for (const auto& [u, v] : ends) {
        int a = resolve(u), b = resolve(v);
        if (a == b) parse_fail("loops are not allowed");
        id_edges.emplace_back(a, b);
    }
    if (int(labels.size()) != n)
        parse_fail("header promises " + std::to_string(n) + " vertices, labels name only " +
                   std::to_string(labels.size()) +
                   " (isolated vertices need integer endpoints or the JSON format)");
    g = Graph::make(std::move(labels));
    for (auto [a, b] : id_edges) g.add_edge(a, b);
    return g;
}

Graph graph_from_string(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') {
            json j;
            try {
                j = json::parse(text);
            } catch (const json::exception& ex) {
                parse_fail(ex.what());
            }
            return graph_from_json(j);
        }
        break;
    }
    return graph_from_text(text);
}

namespace {

json witness_labels(const Bitset& w, const Clutter& c) {
    json arr = json::array();
    w.for_each([&](int v) { arr.push_back(c.labels[std::size_t(v)]); });
    return arr;
}

}  // namespace

json hardness_report_to_json(const HardnessReport& rep, const Clutter& c,
                             bool include_witnesses) {
    json edges = json::array();
    for (std::size_t i = 0; i < rep.per_edge.size(); ++i) {
        json entry{{"index", int(i)}, {"c", rational_to_json(rep.per_edge[i].c)}};
        if (include_witnesses) entry["witness"] = witness_labels(rep.per_edge[i].witness, c);
        edges.push_back(std::move(entry));
    }
    return json{{"overall", rational_to_json(rep.overall)},
                {"argmax_edge", rep.argmax_edge},
                {"edges", std::move(edges)}};
}

namespace {

const char* relation_name(BoundRelation r) {
    switch (r) {
        case BoundRelation::Less: return "less";
        case BoundRelation::Equal: return "equal";
        case BoundRelation::Greater: return "greater";
    }
    return "?";
}

const char* kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::Main: return "main";
        case BoundKind::General: return "general";
        case BoundKind::Mis: return "mis";
    }
    return "?";
}

BoundRelation relation_from_name(const std::string& s) {
    if (s == "less") return BoundRelation::Less;
    if (s == "equal") return BoundRelation::Equal;
    if (s == "greater") return BoundRelation::Greater;
    parse_fail("unknown relation '" + s + "'");
}

BoundKind kind_from_name(const std::string& s) {
    if (s == "main") return BoundKind::Main;
    if (s == "general") return BoundKind::General;
    if (s == "mis") return BoundKind::Mis;
    parse_fail("unknown bound kind '" + s + "'");
}

}  // namespace

json bound_comparison_to_json(const BoundComparison& bc) {
    return json{{"relation", relation_name(bc.relation)},
                {"lhs", rational_to_json(bc.lhs)},
                {"kind", kind_name(bc.kind)},
                {"n", bc.n}};
}

BoundComparison bound_comparison_from_json(const json& j) {
    return BoundComparison{relation_from_name(field(j, "relation").get<std::string>()),
                           rational_from_json(field(j, "lhs")),
                           kind_from_name(field(j, "kind").get<std::string>()),
                           int(int_from_json(field(j, "n")))};
}

json theorem_report_to_json(const TheoremReport& rep) {
    json j{{"n", rep.n},
           {"m", rep.m},
           {"c1", rep.c1},
           {"c2", rep.c2},
           {"hardness", rational_to_json(rep.hardness)},
           {"applicable", rep.applicable}};
    j["comparison"] = rep.comparison ? bound_comparison_to_json(*rep.comparison) : json(nullptr);
    return j;
}

TheoremReport theorem_report_from_json(const json& j) {
    TheoremReport rep;
    rep.n = int(int_from_json(field(j, "n")));
    rep.m = int(int_from_json(field(j, "m")));
    rep.c1 = field(j, "c1").get<bool>();
    rep.c2 = field(j, "c2").get<bool>();
    rep.hardness = rational_from_json(field(j, "hardness"));
    rep.applicable = field(j, "applicable").get<bool>();
    const json& cmp_field = field(j, "comparison");
    if (!cmp_field.is_null()) rep.comparison = bound_comparison_from_json(cmp_field);
    return rep;
}

namespace {

json chain_to_json(const std::vector<TraceStep>& chain) {
    json arr = json::array();
    for (const TraceStep& s : chain)
        arr.push_back(json{{"name", s.name},
                           {"lhs", int_to_json(s.lhs)},
                           {"rhs", int_to_json(s.rhs)},
                           {"holds", s.holds}});
    return arr;
}

std::vector<TraceStep> chain_from_json(const json& j) {
    if (!j.is_array()) parse_fail("chain must be an array");
    std::vector<TraceStep> chain;
    chain.reserve(j.size());
    for (const auto& s : j)
        chain.push_back(TraceStep{field(s, "name").get<std::string>(),
                                  int_from_json(field(s, "lhs")),
                                  int_from_json(field(s, "rhs")),
                                  field(s, "holds").get<bool>()});
    return chain;
}

}  // namespace

json proof_trace_to_json(const ProofTrace& t) {
    json j{{"branch", t.branch == TraceBranch::TwoPlus ? "two_plus" : "all_singletons"},
           {"n", t.n},
           {"m", t.m},
           {"hardness", rational_to_json(t.hardness)},
           {"chain", chain_to_json(t.chain)},
           {"final_comparison", bound_comparison_to_json(t.final_comparison)}};
    if (t.branch == TraceBranch::TwoPlus) {
        j["witness_edge"] = t.witness_edge;
        j["two_bound"] = t.two_bound ? bound_comparison_to_json(*t.two_bound) : json(nullptr);
    } else {
        json recog = json::array();
        for (int v : t.recognizer_vertices)
            recog.push_back(t.aux_graph.labels[std::size_t(v)]);
        j["recognizer_vertices"] = std::move(recog);
        j["aux_graph"] = graph_to_json(t.aux_graph);
        j["clique_ok"] = t.clique_ok;
        j["coverage_ok"] = t.coverage_ok;
        j["z"] = t.aux_graph.labels[std::size_t(t.z)];
        j["degree_z"] = t.degree_z;
        j["edge_of_z"] = t.edge_of_z;
    }
    return j;
}

ProofTrace proof_trace_from_json(const json& j) {
    ProofTrace t;
    std::string branch = field(j, "branch").get<std::string>();
    if (branch == "two_plus") t.branch = TraceBranch::TwoPlus;
    else if (branch == "all_singletons") t.branch = TraceBranch::AllSingletons;
    else parse_fail("unknown branch '" + branch + "'");
    t.n = int(int_from_json(field(j, "n")));
    t.m = int(int_from_json(field(j, "m")));
    t.hardness = rational_from_json(field(j, "hardness"));
    t.chain = chain_from_json(field(j, "chain"));
    t.final_comparison = bound_comparison_from_json(field(j, "final_comparison"));
    if (t.branch == TraceBranch::TwoPlus) {
        t.witness_edge = int(int_from_json(field(j, "witness_edge")));
        const json& tb = field(j, "two_bound");
        if (!tb.is_null()) t.two_bound = bound_comparison_from_json(tb);
        return t;
    }
    t.aux_graph = graph_from_json(field(j, "aux_graph"));
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < t.aux_graph.labels.size(); ++i)
        idx.emplace(t.aux_graph.labels[i], int(i));
    auto vertex_of = [&](const json& lab) {
        auto it = idx.find(lab.get<std::string>());
        if (it == idx.end())
            throw Error(ErrorKind::UnknownLabel, "trace names a vertex outside the graph");
        return it->second;
    };
    for (const auto& lab : field(j, "recognizer_vertices"))
        t.recognizer_vertices.push_back(vertex_of(lab));
    t.clique_ok = field(j, "clique_ok").get<bool>();
    t.coverage_ok = field(j, "coverage_ok").get<bool>();
    t.z = vertex_of(field(j, "z"));
    t.degree_z = int(int_from_json(field(j, "degree_z")));
    t.edge_of_z = int(int_from_json(field(j, "edge_of_z")));
    return t;
}

}  // namespace clutterkit
