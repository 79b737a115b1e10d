#pragma once

#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace oisa {

enum class PropertyMode {
    hereditary_forbidden,    // membership = no witness occurs induced
    cohereditary_obligatory, // membership = some witness occurs induced
    hereditary_predicate,
    cohereditary_predicate,
};

// A hereditary or cohereditary graph property, given either by a finite witness
// list or by a predicate. `min_witness_size` is the size of a smallest forbidden
// (resp. obligatory) subgraph; for witness lists it is derived, for predicates
// it must be supplied (e.g. 3 for "contains a cycle", whose witness family is
// all chordless cycles and therefore infinite).
struct PropertySpec {
    std::string name;
    PropertyMode mode = PropertyMode::hereditary_forbidden;
    std::vector<Graph> witnesses;
    std::function<bool(const Graph&)> predicate;
    int min_witness_size = 0;

    bool hereditary() const {
        return mode == PropertyMode::hereditary_forbidden ||
               mode == PropertyMode::hereditary_predicate;
    }
    bool cohereditary() const { return !hereditary(); }
    bool witness_based() const {
        return mode == PropertyMode::hereditary_forbidden ||
               mode == PropertyMode::cohereditary_obligatory;
    }
};

namespace detail {
inline int min_size(const std::vector<Graph>& ws) {
    if (ws.empty()) throw input_error("property: empty witness list");
    int k = ws.front().size();
    for (const auto& w : ws) k = std::min(k, w.size());
    if (k <= 0) throw input_error("property: empty witness graph");
    return k;
}
} // namespace detail

inline PropertySpec make_forbidden(std::string name, std::vector<Graph> witnesses) {
    PropertySpec p;
    p.name = std::move(name);
    p.mode = PropertyMode::hereditary_forbidden;
    p.min_witness_size = detail::min_size(witnesses);
    p.witnesses = std::move(witnesses);
    return p;
}

inline PropertySpec make_obligatory(std::string name, std::vector<Graph> witnesses) {
    PropertySpec p;
    p.name = std::move(name);
    p.mode = PropertyMode::cohereditary_obligatory;
    p.min_witness_size = detail::min_size(witnesses);
    p.witnesses = std::move(witnesses);
    return p;
}

inline PropertySpec make_hereditary_predicate(std::string name,
                                              std::function<bool(const Graph&)> pred, int k) {
    PropertySpec p;
    p.name = std::move(name);
    p.mode = PropertyMode::hereditary_predicate;
    p.predicate = std::move(pred);
    p.min_witness_size = k;
    return p;
}

inline PropertySpec make_cohereditary_predicate(std::string name,
                                                std::function<bool(const Graph&)> pred, int k) {
    PropertySpec p;
    p.name = std::move(name);
    p.mode = PropertyMode::cohereditary_predicate;
    p.predicate = std::move(pred);
    p.min_witness_size = k;
    return p;
}

inline bool satisfies(const Graph& g, const PropertySpec& p) {
    switch (p.mode) {
        case PropertyMode::hereditary_forbidden:
            for (const auto& w : p.witnesses)
                if (contains_induced(g, w)) return false;
            return true;
        case PropertyMode::cohereditary_obligatory:
            for (const auto& w : p.witnesses)
                if (contains_induced(g, w)) return true;
            return false;
        case PropertyMode::hereditary_predicate:
        case PropertyMode::cohereditary_predicate:
            return p.predicate(g);
    }
    return false;
}

// Cycle test via union-find; a repeated component join means a cycle.
inline bool is_acyclic(const Graph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            if (!g.has_edge(u, v)) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[static_cast<std::size_t>(ru)] = rv;
        }
    }
    return true;
}

// ----- shipped properties -----

inline PropertySpec independent_set_property() {
    return make_forbidden("independent-set", {Graph::complete(2)});
}

inline PropertySpec triangle_free_property() {
    return make_forbidden("triangle-free", {Graph::complete(3)});
}

inline PropertySpec clique_property() {
    return make_forbidden("clique", {Graph::edgeless(2)});
}

inline PropertySpec forest_property() {
    return make_hereditary_predicate("forest", [](const Graph& g) { return is_acyclic(g); }, 3);
}

inline PropertySpec contains_cycle_property() {
    return make_cohereditary_predicate(
        "contains-cycle", [](const Graph& g) { return !is_acyclic(g); }, 3);
}

// Predicate twins of the witness-based properties, used to cross-check the two
// encodings against each other.
inline PropertySpec independent_set_predicate() {
    return make_hereditary_predicate(
        "independent-set-pred", [](const Graph& g) { return g.edge_count() == 0; }, 2);
}

inline PropertySpec triangle_free_predicate() {
    return make_hereditary_predicate(
        "triangle-free-pred",
        [](const Graph& g) {
            for (int a = 0; a < g.size(); ++a)
                for (int b = a + 1; b < g.size(); ++b) {
                    if (!g.has_edge(a, b)) continue;
                    if (g.neighbors(a) & g.neighbors(b)) return false;
                }
            return true;
        },
        3);
}

inline PropertySpec clique_predicate() {
    return make_hereditary_predicate(
        "clique-pred",
        [](const Graph& g) { return g.edge_count() == g.size() * (g.size() - 1) / 2; }, 2);
}

inline PropertySpec property_by_name(const std::string& name) {
    if (name == "independent-set") return independent_set_property();
    if (name == "triangle-free") return triangle_free_property();
    if (name == "clique") return clique_property();
    if (name == "forest") return forest_property();
    if (name == "contains-cycle") return contains_cycle_property();
    throw input_error("unknown property: " + name);
}

// Complement property: forbidden/obligatory witnesses get complemented.
inline PropertySpec complement_property(const PropertySpec& p) {
    if (!p.witness_based()) throw input_error("complement_property: needs witness form");
    PropertySpec q = p;
    q.name = p.name + "-complement";
    for (auto& w : q.witnesses) w = complement(w);
    return q;
}

// ----- incremental membership -----
// Tracks satisfaction of an accepted set as vertices are appended. In forbidden
// mode only embeddings through the new vertex are searched; obligatory mode
// stays satisfied once satisfied; predicate modes re-evaluate. Values are
// immutable: with_vertex returns a new state.
class IncrementalChecker {
public:
    explicit IncrementalChecker(const PropertySpec& p)
        : prop_(&p), accepted_(0), ok_(satisfies(accepted_, p)) {}

    bool satisfied() const { return ok_; }
    const Graph& accepted_graph() const { return accepted_; }

    // back_edges: mask over the current accepted vertices (in insertion order).
    IncrementalChecker with_vertex(std::uint64_t back_edges) const {
        IncrementalChecker next(*this);
        int v = next.accepted_.size();
        Graph grown(v + 1);
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (next.accepted_.has_edge(a, b)) grown.add_edge(a, b);
        for (int a = 0; a < v; ++a)
            if ((back_edges >> a) & 1u) grown.add_edge(a, v);
        next.accepted_ = std::move(grown);
        switch (prop_->mode) {
            case PropertyMode::hereditary_forbidden:
                if (next.ok_) {
                    for (const auto& w : prop_->witnesses)
                        if (contains_induced_at(next.accepted_, w, v)) {
                            next.ok_ = false;
                            break;
                        }
                }
                break;
            case PropertyMode::cohereditary_obligatory:
                if (!next.ok_) {
                    for (const auto& w : prop_->witnesses)
                        if (contains_induced_at(next.accepted_, w, v)) {
                            next.ok_ = true;
                            break;
                        }
                }
                break;
            case PropertyMode::hereditary_predicate:
            case PropertyMode::cohereditary_predicate:
                next.ok_ = prop_->predicate(next.accepted_);
                break;
        }
        return next;
    }

private:
    const PropertySpec* prop_;
    Graph accepted_;
    bool ok_;
};

enum class SatisfiedFamily { cliques, independent_sets, both };

// Which of K_i / co-K_i satisfy a hereditary property, checked for all i up to
// `bound`. For a non-trivial hereditary property at least one family passes;
// neither passing means the property was shipped misconfigured.
inline SatisfiedFamily clique_or_independent(const PropertySpec& p, int bound) {
    if (!p.hereditary()) throw input_error("clique_or_independent: property not hereditary");
    bool cliques_ok = true, indep_ok = true;
    for (int i = 1; i <= bound; ++i) {
        if (cliques_ok && !satisfies(Graph::complete(i), p)) cliques_ok = false;
        if (indep_ok && !satisfies(Graph::edgeless(i), p)) indep_ok = false;
    }
    if (cliques_ok && indep_ok) return SatisfiedFamily::both;
    if (cliques_ok) return SatisfiedFamily::cliques;
    if (indep_ok) return SatisfiedFamily::independent_sets;
    throw misconfiguration_error("property '" + p.name +
                                 "' satisfies neither all cliques nor all independent sets");
}

} // namespace oisa
