#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "clutterkit/bounds.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/constructions.hpp"
#include "clutterkit/error.hpp"
#include "clutterkit/graph.hpp"
#include "clutterkit/hardness.hpp"
#include "clutterkit/json_io.hpp"

namespace ck = clutterkit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFalsified = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ck::Error(ck::ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j, const std::string& out) {
    std::string text = j.dump(2);
    text += '\n';
    if (out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ck::Error(ck::ErrorKind::ParseError, "cannot write '" + out + "'");
    f << text;
}

int usage_fail(const std::string& message) {
    std::cerr << "usage error: " << message << "\n";
    return kExitUsage;
}

struct GenOptions {
    std::string family;
    int n = -1;
    int k = -1;
    int a = -1;
    int b = -1;
    int m = -1;
    int min_size = -1;
    int max_size = -1;
    long long p_num = 1;
    long long p_den = 2;
    std::uint64_t seed = 0;
    int max_retries = 100;
    bool c1c2 = false;
    std::string out = "-";
};

int cmd_gen(const GenOptions& opt) {
    try {
        if (opt.family == "example1") {
            if (opt.n < 0) return usage_fail("gen example1 needs --n");
            emit(ck::clutter_to_json(ck::example1(opt.n)), opt.out);
        } else if (opt.family == "extremal") {
            if (opt.k < 0) return usage_fail("gen extremal needs --k");
            emit(ck::clutter_to_json(ck::extremal_clutter(opt.k)), opt.out);
        } else if (opt.family == "kn") {
            if (opt.n < 0) return usage_fail("gen kn needs --n");
            emit(ck::graph_to_json(ck::complete_graph(opt.n)), opt.out);
        } else if (opt.family == "kmn") {
            if (opt.a < 0 || opt.b < 0) return usage_fail("gen kmn needs --a and --b");
            emit(ck::graph_to_json(ck::complete_bipartite(opt.a, opt.b)), opt.out);
        } else if (opt.family == "random") {
            if (opt.n < 0) return usage_fail("gen random needs --n");
            int m = opt.m < 0 ? opt.n : opt.m;
            int lo = opt.min_size < 0 ? 1 : opt.min_size;
            int hi = opt.max_size < 0 ? std::max(1, opt.n - 1) : opt.max_size;
            ck::Clutter c =
                opt.c1c2
                    ? ck::random_clutter_c1c2(opt.n, m, {lo, hi}, opt.seed, opt.max_retries)
                    : ck::random_clutter(opt.n, m, {lo, hi}, opt.seed);
            emit(ck::clutter_to_json(c), opt.out);
        } else if (opt.family == "random-graph") {
            if (opt.n < 0) return usage_fail("gen random-graph needs --n");
            emit(ck::graph_to_json(ck::random_graph(opt.n, opt.p_num, opt.p_den, opt.seed)),
                 opt.out);
        } else {
            return usage_fail("unknown family '" + opt.family +
                              "' (example1, extremal, kn, kmn, random, random-graph)");
        }
    } catch (const ck::Error& e) {
        if (e.kind() == ck::ErrorKind::RetriesExhausted) throw;  // domain failure, not usage
        return usage_fail(e.what());
    }
    return kExitOk;
}

int cmd_validate(const std::string& file) {
    ck::Clutter c = ck::clutter_from_string(slurp(file));
    std::cout << "n: " << c.vertex_count() << "\n";
    std::cout << "m: " << c.edge_count() << "\n";
    std::cout << "antichain: ok\n";
    if (c.edge_count() >= 1)
        std::cout << "c1: " << (ck::check_c1(c) ? "true" : "false") << "\n";
    else
        std::cout << "c1: n/a (no edges)\n";
    std::cout << "c2: " << (ck::check_c2(c) ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_hardness(const std::string& file, int edge, bool witness, bool oracle,
                 const std::string& out) {
    ck::Clutter c = ck::clutter_from_string(slurp(file));
    if (edge != -1 && (edge < 0 || edge >= c.edge_count()))
        return usage_fail("--edge " + std::to_string(edge) + " outside [0, " +
                          std::to_string(c.edge_count()) + ")");
    auto solve_one = [&](int i) {
        ck::Bitset w = oracle ? ck::brute_force_min_recognizing(c, i)
                              : ck::min_recognizing_subset(c, i);
        return ck::EdgeHardness{ck::Rational(w.count(), c.edges[std::size_t(i)].count()),
                                std::move(w)};
    };
    if (edge != -1) {
        ck::EdgeHardness eh = solve_one(edge);
        json entry{{"index", edge}, {"c", ck::rational_to_json(eh.c)}};
        if (witness) {
            json arr = json::array();
            eh.witness.for_each([&](int v) { arr.push_back(c.labels[std::size_t(v)]); });
            entry["witness"] = std::move(arr);
        }
        emit(entry, out);
        return kExitOk;
    }
    ck::HardnessReport rep;
    if (oracle) {
        rep.overall = ck::Rational(0, 1);
        rep.argmax_edge = -1;
        for (int i = 0; i < c.edge_count(); ++i) {
            rep.per_edge.push_back(solve_one(i));
            if (rep.argmax_edge < 0 || rep.per_edge.back().c > rep.overall) {
                rep.overall = rep.per_edge.back().c;
                rep.argmax_edge = i;
            }
        }
    } else {
        rep = ck::clutter_hardness(c);
    }
    emit(ck::hardness_report_to_json(rep, c, witness), out);
    return kExitOk;
}

int cmd_from_graph(const std::string& file, const std::string& mode, std::size_t cap,
                   const std::string& out) {
    if (mode != "mis" && mode != "matchings")
        return usage_fail("--mode must be 'mis' or 'matchings'");
    ck::Graph g = ck::graph_from_string(slurp(file));
    ck::Clutter c = mode == "mis" ? ck::mis_clutter(g, cap) : ck::matching_clutter(g, cap);
    emit(ck::clutter_to_json(c), out);
    return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& bound, const std::string& out) {
    if (bound != "main" && bound != "general" && bound != "mis")
        return usage_fail("--bound must be 'main', 'general' or 'mis'");
    ck::Clutter c = ck::clutter_from_string(slurp(file));
    if (bound == "main") {
        emit(ck::theorem_report_to_json(ck::verify_theorem(c)), out);
        return kExitOk;
    }
    ck::TheoremReport rep;
    rep.n = c.vertex_count();
    rep.m = c.edge_count();
    rep.c1 = rep.m >= 1 && ck::check_c1(c);
    rep.c2 = ck::check_c2(c);
    rep.hardness = ck::clutter_hardness(c).overall;
    if (bound == "general") {
        if (rep.n >= 2) rep.comparison = ck::compare_general_bound(rep.hardness, rep.n);
        rep.applicable = rep.c1 && rep.c2 && rep.m >= 2;
        if (rep.applicable && rep.comparison->relation == ck::BoundRelation::Less)
            throw ck::TheoremViolation(rep, c);
    } else {
        // the mis floor presumes the clutter arose from a connected,
        // non-exceptional graph, which a bare clutter file cannot promise,
        // so the comparison is informational and never falsifying
        if (rep.n >= 2) rep.comparison = ck::compare_mis_bound(rep.hardness, rep.n);
        rep.applicable = false;
    }
    emit(ck::theorem_report_to_json(rep), out);
    return kExitOk;
}

int cmd_trace(const std::string& file, const std::string& out) {
    ck::Clutter c = ck::clutter_from_string(slurp(file));
    emit(ck::proof_trace_to_json(ck::proof_trace(c)), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hardness toolkit for clutters"};
    app.require_subcommand(1);

    std::string val_file = "-";
    auto* validate = app.add_subcommand("validate", "check a clutter file and report its shape");
    validate->add_option("file", val_file, "clutter JSON, '-' for standard input");

    std::string hard_file = "-", hard_out = "-";
    int hard_edge = -1;
    bool hard_witness = false, hard_oracle = false;
    auto* hardness = app.add_subcommand("hardness", "compute edge and overall hardness");
    hardness->add_option("file", hard_file, "clutter JSON, '-' for standard input");
    hardness->add_option("--edge", hard_edge, "report a single edge index");
    hardness->add_flag("--witness", hard_witness, "include witness vertex sets");
    hardness->add_flag("--oracle", hard_oracle, "use the exhaustive reference solver");
    hardness->add_option("--out", hard_out, "output file, '-' for standard output");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate instance families");
    gen->add_option("family", gen_opt.family,
                    "example1 | extremal | kn | kmn | random | random-graph")
        ->required();
    gen->add_option("--n", gen_opt.n, "vertex count");
    gen->add_option("--k", gen_opt.k, "extremal parameter, n = k^2");
    gen->add_option("--a", gen_opt.a, "first side of kmn");
    gen->add_option("--b", gen_opt.b, "second side of kmn");
    gen->add_option("--m", gen_opt.m, "target edge count (default n)");
    gen->add_option("--min-size", gen_opt.min_size, "smallest edge size (default 1)");
    gen->add_option("--max-size", gen_opt.max_size, "largest edge size (default n-1)");
    gen->add_option("--p-num", gen_opt.p_num, "edge probability numerator (default 1)");
    gen->add_option("--p-den", gen_opt.p_den, "edge probability denominator (default 2)");
    gen->add_option("--seed", gen_opt.seed, "generator seed (default 0)");
    gen->add_option("--max-retries", gen_opt.max_retries,
                    "attempts for --c1c2 before giving up (default 100)");
    gen->add_flag("--c1c2", gen_opt.c1c2,
                  "retry until no common vertex, full coverage, and two edges");
    gen->add_option("--out", gen_opt.out, "output file, '-' for standard output");

    std::string fg_file = "-", fg_mode, fg_out = "-";
    std::size_t fg_cap = ck::kDefaultEnumCap;
    auto* from_graph = app.add_subcommand("from-graph", "derive a clutter from a graph");
    from_graph->add_option("file", fg_file, "graph JSON or text, '-' for standard input");
    from_graph->add_option("--mode", fg_mode, "mis | matchings")->required();
    from_graph->add_option("--cap", fg_cap, "enumeration cap (default 1000000)");
    from_graph->add_option("--out", fg_out, "output file, '-' for standard output");

    std::string ver_file = "-", ver_bound = "main", ver_out = "-";
    auto* verify = app.add_subcommand("verify", "compare hardness against a lower bound");
    verify->add_option("file", ver_file, "clutter JSON, '-' for standard input");
    verify->add_option("--bound", ver_bound, "main | general | mis (default main)");
    verify->add_option("--out", ver_out, "output file, '-' for standard output");

    std::string tr_file = "-", tr_out = "-";
    auto* trace = app.add_subcommand("trace", "replay the lower-bound proof on one clutter");
    trace->add_option("file", tr_file, "clutter JSON, '-' for standard input");
    trace->add_option("--out", tr_out, "output file, '-' for standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(val_file);
        if (hardness->parsed())
            return cmd_hardness(hard_file, hard_edge, hard_witness, hard_oracle, hard_out);
        if (gen->parsed()) return cmd_gen(gen_opt);
        if (from_graph->parsed()) return cmd_from_graph(fg_file, fg_mode, fg_cap, fg_out);
        if (verify->parsed()) return cmd_verify(ver_file, ver_bound, ver_out);
        if (trace->parsed()) return cmd_trace(tr_file, tr_out);
    } catch (const ck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool falsified = e.kind() == ck::ErrorKind::TheoremViolated ||
                         e.kind() == ck::ErrorKind::TraceAssertionFailed;
        return falsified ? kExitFalsified : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
