#include "clutterkit/bounds.hpp"

#include <gmpxx.h>

#include "clutterkit/hardness.hpp"

namespace clutterkit {

namespace {

void require_n(int n, int least) {
    if (n < least)
        throw Error(ErrorKind::NTooSmall,
                    "need n >= " + std::to_string(least) + ", got " + std::to_string(n), n);
}

BoundRelation relation_of(const mpz_class& lhs, const mpz_class& rhs) {
    int cmp_result = cmp(lhs, rhs);
    if (cmp_result < 0) return BoundRelation::Less;
    if (cmp_result > 0) return BoundRelation::Greater;
    return BoundRelation::Equal;
}

}  // namespace

Rational general_lower_bound(int n) {
    require_n(n, 2);
    return Rational(1, n - 1);
}

BoundComparison compare_main_bound(const Rational& value, int n) {
    require_n(n, 2);
    // p/q vs 1/(n - 2 sqrt(n) + 2): the divisor is (sqrt(n)-1)^2 + 1 > 0,
    // so the question becomes p(n+2) - q vs 2p sqrt(n). A negative left
    // side settles it; otherwise both sides are nonnegative and squaring
    // is faithful.
    mpz_class p(static_cast<long>(value.num())), q(static_cast<long>(value.den())), nn(n);
    mpz_class a = p * (nn + 2) - q;
    BoundRelation rel;
    if (a < 0)
        rel = BoundRelation::Less;
    else
        rel = relation_of(a * a, 4 * p * p * nn);
    return BoundComparison{rel, value, BoundKind::Main, n};
}

BoundComparison compare_general_bound(const Rational& value, int n) {
    require_n(n, 2);
    Rational bound = general_lower_bound(n);
    BoundRelation rel = value < bound   ? BoundRelation::Less
                        : value > bound ? BoundRelation::Greater
                                        : BoundRelation::Equal;
    return BoundComparison{rel, value, BoundKind::General, n};
}

BoundComparison compare_mis_bound(const Rational& value, int n) {
    require_n(n, 2);
    // p/q vs 1/(1 + n - 2 sqrt(n-1)): the divisor is (sqrt(n-1)-1)^2 + 1,
    // positive, so compare p(1+n) - q with 2p sqrt(n-1) the same way.
    mpz_class p(static_cast<long>(value.num())), q(static_cast<long>(value.den())), nn(n);
    mpz_class a = p * (nn + 1) - q;
    BoundRelation rel;
    if (a < 0)
        rel = BoundRelation::Less;
    else
        rel = relation_of(a * a, 4 * p * p * (nn - 1));
    return BoundComparison{rel, value, BoundKind::Mis, n};
}

TheoremViolation::TheoremViolation(TheoremReport report, Clutter clutter)
    : Error(ErrorKind::TheoremViolated,
            "hardness " + report.hardness.str() + " falls below the bound at n = " +
                std::to_string(report.n)),
      report_(std::move(report)),
      clutter_(std::move(clutter)) {}

TheoremReport verify_theorem(const Clutter& c) {
    TheoremReport rep;
    rep.n = c.vertex_count();
    rep.m = c.edge_count();
    rep.c1 = rep.m >= 1 && check_c1(c);
    rep.c2 = check_c2(c);
    rep.hardness = clutter_hardness(c).overall;
    if (rep.n >= 2) rep.comparison = compare_main_bound(rep.hardness, rep.n);
    rep.applicable = rep.c1 && rep.c2 && rep.m >= 2;
    if (rep.applicable && rep.comparison->relation == BoundRelation::Less)
        throw TheoremViolation(rep, c);
    return rep;
}

Graph auxiliary_graph(const Clutter& c) {
    if (c.edge_count() == 0)
        throw Error(ErrorKind::NoEdges, "auxiliary graph needs at least one edge");
    int n = c.vertex_count();
    Graph g = Graph::make(c.labels);
    // cooccur[u]: union of edges through u, so v sits in cooccur[u] exactly
    // when some edge holds both
    std::vector<Bitset> cooccur(static_cast<std::size_t>(n), Bitset(n));
    for (const Bitset& e : c.edges)
        e.for_each([&](int u) { cooccur[std::size_t(u)] |= e; });
    for (int u = 0; u < n; ++u) {
        g.adj[std::size_t(u)] = ~cooccur[std::size_t(u)];
        g.adj[std::size_t(u)].reset(u);
    }
    return g;
}

namespace {

TraceStep step(std::string name, long long lhs, long long rhs) {
    return TraceStep{std::move(name), lhs, rhs, lhs <= rhs};
}

void enforce(const ProofTrace& t) {
    for (const TraceStep& s : t.chain)
        if (!s.holds)
            throw Error(ErrorKind::TraceAssertionFailed,
                        "step '" + s.name + "' fails: " + std::to_string(s.lhs) + " > " +
                            std::to_string(s.rhs));
    if (t.branch == TraceBranch::AllSingletons) {
        if (!t.clique_ok)
            throw Error(ErrorKind::TraceAssertionFailed,
                        "recognizer vertices are not an auxiliary clique");
        if (!t.coverage_ok)
            throw Error(ErrorKind::TraceAssertionFailed,
                        "a vertex has no auxiliary neighbour among the recognizers");
    }
    if (t.two_bound && t.two_bound->relation == BoundRelation::Less)
        throw Error(ErrorKind::TraceAssertionFailed, "2/(n-1) falls below the bound");
    if (t.final_comparison.relation == BoundRelation::Less)
        throw Error(ErrorKind::TraceAssertionFailed, "hardness falls below the bound");
}

}  // namespace

ProofTrace proof_trace(const Clutter& c) {
    const int n = c.vertex_count();
    const int m = c.edge_count();
    if (m < 2)
        throw Error(ErrorKind::PreconditionFailed, "trace needs at least two edges");
    if (m > 50000)
        throw Error(ErrorKind::PreconditionFailed,
                    "trace records 64-bit inequalities, capped at 50000 edges");
    if (!check_c1(c))
        throw Error(ErrorKind::PreconditionFailed, "trace needs edges with no common vertex");
    if (!check_c2(c))
        throw Error(ErrorKind::PreconditionFailed, "trace needs every vertex covered");

    HardnessReport hr = clutter_hardness(c);
    ProofTrace t;
    t.n = n;
    t.m = m;
    t.hardness = hr.overall;
    t.final_comparison = compare_main_bound(hr.overall, n);

    int wide = -1;
    for (int i = 0; i < m && wide < 0; ++i)
        if (hr.per_edge[std::size_t(i)].witness.count() >= 2) wide = i;

    if (wide >= 0) {
        // Some edge needs two witness vertices; together with |e| <= n-1
        // (another edge must own a vertex outside e) this already clears
        // the bound.
        t.branch = TraceBranch::TwoPlus;
        t.witness_edge = wide;
        const Bitset& e = c.edges[std::size_t(wide)];
        const Bitset& w = hr.per_edge[std::size_t(wide)].witness;
        t.chain.push_back(step("edge_size", e.count(), n - 1));
        t.chain.push_back(step("witness_size", 2, w.count()));
        // cleared-denominator form of 2/(n-1) <= c(L)
        t.chain.push_back(step("hardness_floor", 2 * t.hardness.den(),
                               t.hardness.num() * static_cast<long long>(n - 1)));
        t.two_bound = compare_main_bound(Rational(2, n - 1), n);
        enforce(t);
        return t;
    }

    t.branch = TraceBranch::AllSingletons;
    t.recognizer_vertices.reserve(std::size_t(m));
    for (int i = 0; i < m; ++i)
        t.recognizer_vertices.push_back(hr.per_edge[std::size_t(i)].witness.min_element());
    t.aux_graph = auxiliary_graph(c);

    t.clique_ok = true;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int u = t.recognizer_vertices[std::size_t(i)];
            int v = t.recognizer_vertices[std::size_t(j)];
            if (u == v || !t.aux_graph.has_edge(u, v)) t.clique_ok = false;
        }

    Bitset q_set(n);
    for (int v : t.recognizer_vertices) q_set.set(v);
    t.coverage_ok = true;
    for (int v = 0; v < n; ++v)
        if (!q_set.test(v) && !t.aux_graph.adj[std::size_t(v)].intersects(q_set))
            t.coverage_ok = false;

    // recognizer vertex of maximum auxiliary degree, lowest id on ties
    q_set.for_each([&](int v) {
        int d = t.aux_graph.degree(v);
        if (t.z < 0 || d > t.degree_z) {
            t.z = v;
            t.degree_z = d;
        }
    });

    int owner = -1;
    bool unique_owner = true;
    for (int i = 0; i < m; ++i)
        if (c.edges[std::size_t(i)].test(t.z)) {
            if (owner >= 0) unique_owner = false;
            owner = i;
        }
    if (owner < 0 || !unique_owner)
        throw Error(ErrorKind::TraceAssertionFailed,
                    "chosen recognizer vertex must lie in exactly one edge");
    t.edge_of_z = owner;

    const long long LL_n = n, LL_m = m, LL_d = t.degree_z;
    long long edge_size = c.edges[std::size_t(owner)].count();
    long long denom = LL_m * (LL_n + 2) - LL_m * LL_m - LL_n;
    // clique neighbours plus z's share of the outside coverage, times m
    t.chain.push_back(step("degree_floor", LL_m * (LL_m - 1) + (LL_n - LL_m), LL_m * LL_d));
    t.chain.push_back(step("edge_size", edge_size, LL_n - LL_d));
    t.chain.push_back(step("edge_count", LL_m, LL_n));
    t.chain.push_back(step("square_nonneg", 0, (LL_m * LL_m - LL_n) * (LL_m * LL_m - LL_n)));
    t.chain.push_back(step("denominator_positive", 1, denom));
    // cleared-denominator form of m/denom <= c(L)
    t.chain.push_back(step("intermediate", t.hardness.den() * LL_m, t.hardness.num() * denom));
    enforce(t);
    return t;
}

bool sandwich_check(int n) {
    require_n(n, 3);
    // left piece: 1/(n-1) <= 1/(n - 2 sqrt(n) + 2), both divisors positive,
    // reduces to 9 <= 4n; delegated to the exact comparator
    bool left = compare_main_bound(Rational(1, n - 1), n).relation != BoundRelation::Greater;
    // right piece: divisors positive, reduces to 2 sqrt(n) <= 1 + 2 sqrt(n-1),
    // and squaring twice leaves 9 <= 16(n-1)
    bool right = 9 <= 16LL * (n - 1);
    return left && right;
}

}  // namespace clutterkit
