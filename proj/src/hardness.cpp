#include "clutterkit/hardness.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "clutterkit/error.hpp"

namespace clutterkit {

namespace {

void check_edge_index(const Clutter& c, int i) {
    if (i < 0 || i >= c.edge_count())
        throw Error(ErrorKind::IndexOutOfRange,
                    "edge index " + std::to_string(i) + " outside [0, " +
                        std::to_string(c.edge_count()) + ")",
                    i);
}

// Keeps the inclusion-minimal targets; of equal targets only the first
// survives. A hitting set meets a dropped superset for free.
std::vector<Bitset> dominance_reduce(const std::vector<Bitset>& targets) {
    std::vector<Bitset> out;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < targets.size() && !drop; ++j) {
            if (j == i) continue;
            if (targets[j].is_proper_subset_of(targets[i])) drop = true;
            else if (j < i && targets[j] == targets[i]) drop = true;
        }
        if (!drop) out.push_back(targets[i]);
    }
    return out;
}

// Upper bound: repeatedly pick the vertex meeting the most unhit targets,
// lowest id on ties.
int greedy_cover_size(const std::vector<Bitset>& targets, int universe) {
    std::vector<char> hit(targets.size(), 0);
    std::size_t remaining = targets.size();
    int picked = 0;
    while (remaining > 0) {
        int best_v = -1, best_cover = 0;
        for (int v = 0; v < universe; ++v) {
            int cover = 0;
            for (std::size_t t = 0; t < targets.size(); ++t)
                if (!hit[t] && targets[t].test(v)) ++cover;
            if (cover > best_cover) {
                best_cover = cover;
                best_v = v;
            }
        }
        ++picked;
        for (std::size_t t = 0; t < targets.size(); ++t)
            if (!hit[t] && targets[t].test(best_v)) {
                hit[t] = 1;
                --remaining;
            }
    }
    return picked;
}

// Lower bound: pairwise disjoint targets need one vertex each.
int disjoint_lower_bound(const std::vector<Bitset>& targets, int universe) {
    Bitset used(universe);
    int count = 0;
    for (const Bitset& t : targets)
        if (!t.intersects(used)) {
            used |= t;
            ++count;
        }
    return count;
}

// Phase one: exact minimum size. Branches on the members of a smallest
// remaining target; the k-th branch commits member k to the cover and bans
// the earlier members from the whole subtree, so no cover is visited twice.
struct MinSizeSearch {
    int universe;
    int best;

    void run(const std::vector<Bitset>& targets) {
        dfs(targets, 0);
    }

    void dfs(const std::vector<Bitset>& remaining, int chosen) {
        if (remaining.empty()) {
            best = std::min(best, chosen);
            return;
        }
        if (chosen + disjoint_lower_bound(remaining, universe) >= best) return;
        std::size_t pick = 0;
        for (std::size_t t = 1; t < remaining.size(); ++t)
            if (remaining[t].count() < remaining[pick].count()) pick = t;
        Bitset banned(universe);
        for (int v : remaining[pick].members()) {
            std::vector<Bitset> child;
            child.reserve(remaining.size());
            bool feasible = true;
            for (const Bitset& tg : remaining) {
                if (tg.test(v)) continue;
                Bitset r = tg - banned;
                if (r.empty()) {  // target lost all members; branch is dead
                    feasible = false;
                    break;
                }
                child.push_back(std::move(r));
            }
            if (feasible) dfs(child, chosen + 1);
            banned.set(v);
        }
    }
};

// Phase two: first depth-first solution with candidates tried in ascending
// id order is the lexicographically least cover of the known minimum size.
// Candidates are drawn from the union of unmet targets: a vertex outside it
// would be dead weight, contradicting minimality.
struct LexSearch {
    int universe;
    int k;
    std::vector<int> chosen;
    std::vector<int> result;

    bool dfs(int min_v, const std::vector<Bitset>& remaining) {
        if (remaining.empty()) {
            result = chosen;
            return true;
        }
        if (int(chosen.size()) == k) return false;
        if (int(chosen.size()) + disjoint_lower_bound(remaining, universe) > k) return false;
        Bitset pool(universe);
        for (const Bitset& t : remaining) pool |= t;
        for (int v : pool.members()) {
            if (v < min_v) continue;
            std::vector<Bitset> child;
            child.reserve(remaining.size());
            for (const Bitset& t : remaining)
                if (!t.test(v)) child.push_back(t);
            chosen.push_back(v);
            if (dfs(v + 1, child)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

EdgeHardness solve_edge(const Clutter& c, int i) {
    Bitset w = min_recognizing_subset(c, i);
    return EdgeHardness{Rational(w.count(), c.edges[std::size_t(i)].count()), std::move(w)};
}

HardnessReport assemble(std::vector<EdgeHardness> per_edge) {
    HardnessReport rep{std::move(per_edge), Rational(0, 1), -1};
    for (std::size_t i = 0; i < rep.per_edge.size(); ++i)
        if (rep.argmax_edge < 0 || rep.per_edge[i].c > rep.overall) {
            rep.overall = rep.per_edge[i].c;
            rep.argmax_edge = int(i);
        }
    return rep;
}

}  // namespace

std::vector<Bitset> difference_targets(const Clutter& c, int i) {
    check_edge_index(c, i);
    std::vector<Bitset> targets;
    targets.reserve(std::size_t(c.edge_count()) - 1);
    for (int j = 0; j < c.edge_count(); ++j) {
        if (j == i) continue;
        // nonempty because edges form an antichain
        targets.push_back(c.edges[std::size_t(i)] - c.edges[std::size_t(j)]);
    }
    return dominance_reduce(targets);
}

Bitset min_hitting_set(const std::vector<Bitset>& targets, int universe) {
    for (std::size_t t = 0; t < targets.size(); ++t)
        if (targets[t].empty())
            throw Error(ErrorKind::EmptyTarget,
                        "target " + std::to_string(t) + " is empty, nothing can hit it",
                        static_cast<long long>(t));
    std::vector<Bitset> reduced = dominance_reduce(targets);
    Bitset result(universe);
    if (reduced.empty()) return result;

    MinSizeSearch size_search{universe, greedy_cover_size(reduced, universe)};
    size_search.run(reduced);

    LexSearch lex{universe, size_search.best, {}, {}};
    bool found = lex.dfs(0, reduced);
    (void)found;
    assert(found && int(lex.result.size()) == size_search.best);
    for (int v : lex.result) result.set(v);
    return result;
}

Bitset min_recognizing_subset(const Clutter& c, int i) {
    return min_hitting_set(difference_targets(c, i), c.vertex_count());
}

Bitset brute_force_min_recognizing(const Clutter& c, int i) {
    check_edge_index(c, i);
    const Bitset& e = c.edges[std::size_t(i)];
    if (e.count() > 20)
        throw Error(ErrorKind::EdgeTooLarge,
                    "edge " + std::to_string(i) + " has " + std::to_string(e.count()) +
                        " vertices, oracle is capped at 20",
                    i);
    std::vector<int> members = e.members();
    int sz = int(members.size());
    auto recognizes = [&](const Bitset& s) {
        for (int j = 0; j < c.edge_count(); ++j)
            if (j != i && s.is_subset_of(c.edges[std::size_t(j)])) return false;
        return true;
    };
    // subsets of size k in lexicographic order of ascending member tuples
    std::vector<int> idx;
    Bitset found(c.vertex_count());
    bool done = false;
    auto step = [&](auto&& self, int next, int k) -> void {
        if (done) return;
        if (int(idx.size()) == k) {
            Bitset s(c.vertex_count());
            for (int p : idx) s.set(members[std::size_t(p)]);
            if (recognizes(s)) {
                found = std::move(s);
                done = true;
            }
            return;
        }
        for (int p = next; p < sz && !done; ++p) {
            idx.push_back(p);
            self(self, p + 1, k);
            idx.pop_back();
        }
    };
    for (int k = 0; k <= sz && !done; ++k) step(step, 0, k);
    assert(done);  // the edge itself always recognizes
    return found;
}

Rational edge_hardness(const Clutter& c, int i) {
    return solve_edge(c, i).c;
}

HardnessReport clutter_hardness_serial(const Clutter& c) {
    std::vector<EdgeHardness> per_edge(static_cast<std::size_t>(c.edge_count()));
    for (int i = 0; i < c.edge_count(); ++i) per_edge[std::size_t(i)] = solve_edge(c, i);
    return assemble(std::move(per_edge));
}

HardnessReport clutter_hardness(const Clutter& c) {
    const int m = c.edge_count();
    std::vector<EdgeHardness> per_edge(static_cast<std::size_t>(m));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(m));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < m; ++i) {
        try {
            per_edge[std::size_t(i)] = solve_edge(c, i);
        } catch (...) {
            errors[std::size_t(i)] = std::current_exception();
        }
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return assemble(std::move(per_edge));
}

}  // namespace clutterkit
