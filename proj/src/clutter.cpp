#include "clutterkit/clutter.hpp"

#include <unordered_map>

#include "clutterkit/error.hpp"

namespace clutterkit {

namespace {

void check_antichain(const std::vector<Bitset>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].is_subset_of(edges[j]) || edges[j].is_subset_of(edges[i]))
                throw Error(ErrorKind::AntichainViolation,
                            "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                " are comparable",
                            static_cast<long long>(i), static_cast<long long>(j));
}

std::unordered_map<std::string, int> label_index(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, int> idx;
    idx.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = idx.emplace(labels[i], int(i));
        if (!fresh)
            throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice",
                        it->second, static_cast<long long>(i));
    }
    return idx;
}

}  // namespace

Clutter build_clutter(const std::vector<std::string>& labels,
                      const std::vector<std::vector<std::string>>& edge_lists) {
    auto idx = label_index(labels);
    int n = int(labels.size());
    std::vector<Bitset> edges;
    edges.reserve(edge_lists.size());
    for (std::size_t e = 0; e < edge_lists.size(); ++e) {
        Bitset s(n);
        for (const std::string& lab : edge_lists[e]) {
            auto it = idx.find(lab);
            if (it == idx.end())
                throw Error(ErrorKind::UnknownLabel,
                            "edge " + std::to_string(e) + " uses unknown label '" + lab + "'",
                            static_cast<long long>(e));
            s.set(it->second);
        }
        if (s.empty())
            throw Error(ErrorKind::EmptyEdge, "edge " + std::to_string(e) + " is empty",
                        static_cast<long long>(e));
        edges.push_back(std::move(s));
    }
    check_antichain(edges);
    return Clutter{labels, std::move(edges)};
}

Clutter make_clutter(std::vector<std::string> labels, std::vector<Bitset> edges) {
    label_index(labels);
    int n = int(labels.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].universe() != n)
            throw Error(ErrorKind::PreconditionFailed,
                        "edge " + std::to_string(e) + " lives on the wrong universe",
                        static_cast<long long>(e));
        if (edges[e].empty())
            throw Error(ErrorKind::EmptyEdge, "edge " + std::to_string(e) + " is empty",
                        static_cast<long long>(e));
    }
    check_antichain(edges);
    return Clutter{std::move(labels), std::move(edges)};
}

void validate(const Clutter& c) {
    make_clutter(c.labels, c.edges);
}

std::vector<Bitset> normalize_antichain(const std::vector<Bitset>& sets) {
    std::vector<Bitset> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < sets.size() && !drop; ++j) {
            if (j == i) continue;
            // drop strict subsets, and later copies of an equal set
            if (sets[i].is_proper_subset_of(sets[j])) drop = true;
            else if (j < i && sets[j] == sets[i]) drop = true;
        }
        if (!drop) out.push_back(sets[i]);
    }
    return out;
}

bool check_c1(const Clutter& c) {
    if (c.edge_count() == 0)
        throw Error(ErrorKind::NoEdges, "no edges, the common-vertex test is undefined");
    Bitset common = c.edges[0];
    for (int i = 1; i < c.edge_count(); ++i) common &= c.edges[i];
    return common.empty();
}

bool check_c2(const Clutter& c) {
    Bitset covered(c.vertex_count());
    for (const Bitset& e : c.edges) covered |= e;
    return covered == Bitset::full(c.vertex_count());
}

Clutter remove_isolated(const Clutter& c) {
    Bitset covered(c.vertex_count());
    for (const Bitset& e : c.edges) covered |= e;
    std::vector<int> new_id(c.vertex_count(), -1);
    std::vector<std::string> labels;
    covered.for_each([&](int v) {
        new_id[v] = int(labels.size());
        labels.push_back(c.labels[v]);
    });
    int n = int(labels.size());
    std::vector<Bitset> edges;
    edges.reserve(c.edges.size());
    for (const Bitset& e : c.edges) {
        Bitset s(n);
        e.for_each([&](int v) { s.set(new_id[v]); });
        edges.push_back(std::move(s));
    }
    return Clutter{std::move(labels), std::move(edges)};
}

Clutter relabel(const Clutter& c, const std::vector<int>& perm) {
    int n = c.vertex_count();
    if (int(perm.size()) != n)
        throw Error(ErrorKind::NotAPermutation, "permutation length differs from vertex count");
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v])
            throw Error(ErrorKind::NotAPermutation, "not a bijection on [0, n)");
        seen[v] = 1;
    }
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) labels[std::size_t(perm[v])] = c.labels[v];
    std::vector<Bitset> edges;
    edges.reserve(c.edges.size());
    for (const Bitset& e : c.edges) {
        Bitset s(n);
        e.for_each([&](int v) { s.set(perm[v]); });
        edges.push_back(std::move(s));
    }
    return Clutter{std::move(labels), std::move(edges)};
}

}  // namespace clutterkit
