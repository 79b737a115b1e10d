#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "property.hpp"

namespace oisa {

inline constexpr int kDefaultOptBound = 25;

// Maximum-cardinality vertex set whose induced subgraph satisfies a hereditary
// property. Branch and bound over the vertex order; a branch that already
// violates is cut, which skips every superset of a violating set.
inline std::uint64_t max_property_subset(const Graph& g, const PropertySpec& p,
                                         int bound = kDefaultOptBound) {
    if (!p.hereditary()) throw input_error("max_property_subset: property not hereditary");
    if (g.size() > bound) throw resource_error("max_property_subset: graph above brute-force bound");

    std::uint64_t best_mask = 0;
    int best = 0;
    std::vector<int> chosen; // insertion order, for back-edge masks

    std::function<void(int, std::uint64_t, const IncrementalChecker&)> go =
        [&](int v, std::uint64_t mask, const IncrementalChecker& chk) {
            int held = popcount(mask);
            if (held > best) {
                best = held;
                best_mask = mask;
            }
            if (v == g.size()) return;
            if (held + (g.size() - v) <= best) return;
            // include v
            std::uint64_t back = 0;
            for (std::size_t t = 0; t < chosen.size(); ++t)
                if (g.has_edge(chosen[t], v)) back |= std::uint64_t{1} << t;
            IncrementalChecker next = chk.with_vertex(back);
            if (next.satisfied()) {
                chosen.push_back(v);
                go(v + 1, mask | (std::uint64_t{1} << v), next);
                chosen.pop_back();
            }
            // exclude v
            go(v + 1, mask, chk);
        };

    go(0, 0, IncrementalChecker(p));
    return best_mask;
}

// Minimum-cardinality vertex set whose induced subgraph satisfies a cohereditary
// property, or nullopt when the whole graph does not (by cohereditary closure no
// subset can then either). Equals a smallest occurrence of an obligatory subgraph.
inline std::optional<std::uint64_t> min_property_subset(const Graph& g, const PropertySpec& p,
                                                        int bound = kDefaultOptBound) {
    if (!p.cohereditary()) throw input_error("min_property_subset: property not cohereditary");
    if (g.size() > bound) throw resource_error("min_property_subset: graph above brute-force bound");
    if (!satisfies(g, p)) return std::nullopt;

    if (p.mode == PropertyMode::cohereditary_obligatory) {
        std::vector<const Graph*> ws;
        for (const auto& w : p.witnesses) ws.push_back(&w);
        std::stable_sort(ws.begin(), ws.end(),
                         [](const Graph* a, const Graph* b) { return a->size() < b->size(); });
        for (const Graph* w : ws)
            if (auto m = find_induced(g, *w)) return m;
        return std::nullopt; // unreachable: satisfies(g,p) held
    }

    for (int k = 1; k <= g.size(); ++k) {
        std::optional<std::uint64_t> hit;
        for_each_subset_of_size(g.size(), k, [&](std::uint64_t s) {
            if (!hit && p.predicate(induced_subgraph(g, s))) hit = s;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

} // namespace oisa
