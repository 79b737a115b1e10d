#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "optima.hpp"
#include "property.hpp"
#include "ramsey.hpp"

namespace oisa {

// ----- bit-string masked instance (non-preemptive reduction gadget) -----
// Start from a certified base graph; every zero position loses all its forward
// edges (independent orientation), so the zero positions induce an edgeless set
// while any property-satisfying set keeps at most threshold-1 vertices among
// the one positions. The clique orientation is the same construction with
// edges and non-edges swapped, for properties satisfied by all cliques.

struct MaskedInstance {
    OnlineInstance instance;
    std::uint64_t inside = 0; // the zero positions
    int threshold = 0;
    SatisfiedFamily orientation = SatisfiedFamily::independent_sets;
    RamseyCertificate base;
};

inline MaskedInstance build_masked_instance(const std::vector<int>& bits,
                                            const RamseyCertificate& base,
                                            SatisfiedFamily orientation) {
    if (!base.verified) throw input_error("build_masked_instance: base certificate not verified");
    if (static_cast<int>(bits.size()) != base.graph.size())
        throw input_error("build_masked_instance: bit string length mismatch");
    if (orientation == SatisfiedFamily::both)
        throw input_error("build_masked_instance: pick one orientation");
    int n = base.graph.size();
    Graph g = base.graph;
    std::uint64_t inside = 0;
    for (int i = 0; i < n; ++i) {
        int b = bits[static_cast<std::size_t>(i)];
        if (b != 0 && b != 1) throw input_error("build_masked_instance: bits must be 0/1");
        if (b == 0) {
            inside |= std::uint64_t{1} << i;
            for (int j = i + 1; j < n; ++j) g.remove_edge(i, j);
        }
    }
    if (orientation == SatisfiedFamily::cliques) g = complement(g);
    MaskedInstance mi;
    mi.instance = make_instance(std::move(g));
    mi.inside = inside;
    mi.threshold = base.threshold;
    mi.orientation = orientation;
    mi.base = base;
    return mi;
}

// The base graph for the clique orientation must certify the complemented
// forbidden graph; callers route through here.
inline SatisfiedFamily orientation_for(const PropertySpec& p, int bound = 8) {
    SatisfiedFamily f = clique_or_independent(p, bound);
    return f == SatisfiedFamily::both ? SatisfiedFamily::independent_sets : f;
}

// Checks the two structural claims of the masked instance exhaustively: the
// inside set induces an edgeless graph (a clique in the swapped orientation),
// and every property-satisfying subset has at most threshold-1 vertices outside.
inline void verify_masked_instance(const MaskedInstance& mi, const PropertySpec& p) {
    const Graph& g = mi.instance.graph;
    Graph inside_graph = induced_subgraph(g, mi.inside);
    bool inside_ok = mi.orientation == SatisfiedFamily::independent_sets
                         ? inside_graph.edge_count() == 0
                         : inside_graph.edge_count() ==
                               inside_graph.size() * (inside_graph.size() - 1) / 2;
    if (!inside_ok) throw soundness_error("masked instance: inside set has the wrong shape");
    if (!satisfies(inside_graph, p))
        throw soundness_error("masked instance: inside set does not satisfy the property");
    std::uint64_t all = g.vertex_mask();
    for (std::uint64_t s = 0; s <= all; ++s) {
        if (popcount(s & ~mi.inside) <= mi.threshold - 1) continue;
        if (satisfies(induced_subgraph(g, s), p))
            throw soundness_error("masked instance: satisfying subset with too many outside vertices");
        if (s == all) break;
    }
}

// ----- layered instances (preemptive reduction gadgets) -----

struct LayeredInstance {
    OnlineInstance instance;
    std::vector<std::pair<int, int>> layers; // [start, end), consecutive
    std::vector<int> special;                // absolute vertex per layer, -1 if none
    std::string construction;                // "thm8" | "clique-layers" | "thm10"
    nlohmann::json params;
    std::vector<RamseyCertificate> certificates;

    int layer_count() const { return static_cast<int>(layers.size()); }
    int layer_of(int v) const {
        for (int i = 0; i < layer_count(); ++i)
            if (v >= layers[static_cast<std::size_t>(i)].first &&
                v < layers[static_cast<std::size_t>(i)].second)
                return i;
        throw input_error("layer_of: vertex outside all layers");
    }
};

// Pre-embedding skeleton: a certified layer graph repeated n' times, joined by
// a sparsified complete multipartite cross graph whose transversal condition
// was verified exhaustively.
struct LayeredBase {
    int sigma = 0;
    int nprime = 0;
    Graph h;
    double kappa1 = 0.0, kappa2 = 0.0;
    RamseyCertificate layer_cert; // graph on sigma vertices
    Graph cross;                  // on sigma*nprime vertices, cross-layer edges only
    int threshold1 = 0, threshold2 = 0;
    std::uint64_t cross_seed = 0;
    int cross_attempts = 0;
    bool cross_verified = false;
    Graph assembled; // cross + a layer-graph copy inside every layer

    int layer_start(int i) const { return i * sigma; }
};

// Every set picking one vertex from `threshold` distinct layers must contain
// the target induced. These picks are exactly the cliques of the unsparsified
// cross graph.
inline bool verify_transversal_condition(const Graph& cross, int nprime, int sigma,
                                         const Graph& target, int threshold,
                                         long long work_budget = 50'000'000) {
    if (threshold > nprime) return true;
    std::vector<int> layers_chosen;
    long long work = 0;
    bool ok = true;
    std::vector<int> pick;
    std::function<void(int)> pick_vertices = [&](int depth) {
        if (!ok) return;
        if (depth == threshold) {
            Graph t = induced_subgraph(
                cross, [&] {
                    std::uint64_t m = 0;
                    for (int v : pick) m |= std::uint64_t{1} << v;
                    return m;
                }());
            if (!contains_induced(t, target)) ok = false;
            return;
        }
        for (int s = 0; s < sigma; ++s) {
            pick.push_back(layers_chosen[static_cast<std::size_t>(depth)] * sigma + s);
            if (++work > work_budget) throw resource_error("transversal verification budget");
            pick_vertices(depth + 1);
            pick.pop_back();
        }
    };
    std::function<void(int, int)> choose_layers = [&](int from, int left) {
        if (!ok) return;
        if (left == 0) {
            pick_vertices(0);
            return;
        }
        for (int i = from; i + left <= nprime; ++i) {
            layers_chosen.push_back(i);
            choose_layers(i + 1, left - 1);
            layers_chosen.pop_back();
        }
    };
    choose_layers(0, threshold);
    return ok;
}

inline LayeredBase build_layered_base(int nprime, int sigma, const Graph& h, double kappa1,
                                      double kappa2, std::uint64_t seed, int layer_budget,
                                      int cross_budget) {
    if (nprime < 2 || sigma < 2) throw input_error("build_layered_base: need nprime,sigma >= 2");
    int n = nprime * sigma;
    if (n > kMaxVertices) throw input_error("build_layered_base: instance too large");

    LayeredBase base;
    base.sigma = sigma;
    base.nprime = nprime;
    base.h = h;
    base.kappa1 = kappa1;
    base.kappa2 = kappa2;
    base.layer_cert = ramsey_like_graph(sigma, h, kappa1, seed, layer_budget);
    base.threshold1 = base.layer_cert.threshold;
    base.threshold2 = ramsey_threshold(n, kappa2, h.size());
    if (!base.layer_cert.verified)
        throw resource_error("build_layered_base: no layer certificate within budget");

    // Sparsify the complement of nprime disjoint sigma-cliques until every
    // large transversal contains the target induced.
    std::uint64_t cross_seed_base = seed ^ 0xa5a5a5a5a5a5a5a5ULL;
    for (int attempt = 1; attempt <= cross_budget; ++attempt) {
        std::uint64_t s = cross_seed_base + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(s);
        Graph cross(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (u / sigma != v / sigma && (rng() & 1u)) cross.add_edge(u, v);
        base.cross_attempts = attempt;
        if (verify_transversal_condition(cross, nprime, sigma, h, base.threshold2)) {
            base.cross = std::move(cross);
            base.cross_verified = true;
            base.cross_seed = s;
            break;
        }
    }
    if (!base.cross_verified)
        throw resource_error("build_layered_base: no cross graph within budget");

    base.assembled = base.cross;
    for (int layer = 0; layer < nprime; ++layer)
        for (int a = 0; a < sigma; ++a)
            for (int b = a + 1; b < sigma; ++b)
                if (base.layer_cert.graph.has_edge(a, b))
                    base.assembled.add_edge(layer * sigma + a, layer * sigma + b);

    // The transversal condition only involves cross-layer pairs, so it holds
    // verbatim for the assembled graph too; check both readings anyway.
    if (!verify_transversal_condition(base.assembled, nprime, sigma, h, base.threshold2))
        throw soundness_error("build_layered_base: assembled graph lost the transversal condition");
    return base;
}

// Plants a guess string: symbol q_i picks the distinguished vertex of layer i,
// which is then disconnected from every later vertex. The last layer stays
// specialless (there is no symbol for it); this leaves the distinguished set
// plus any last-layer vertex independent, and lets each layer be built from the
// preceding symbols only.
inline LayeredInstance embed_guess_string(const LayeredBase& base, const std::vector<int>& q) {
    if (static_cast<int>(q.size()) != base.nprime - 1)
        throw input_error("embed_guess_string: need exactly nprime-1 symbols");
    int n = base.nprime * base.sigma;
    Graph g = base.assembled;
    LayeredInstance li;
    li.special.assign(static_cast<std::size_t>(base.nprime), -1);
    for (int i = 0; i < base.nprime - 1; ++i) {
        int sym = q[static_cast<std::size_t>(i)];
        if (sym < 1 || sym > base.sigma) throw input_error("embed_guess_string: symbol out of range");
        int s = base.layer_start(i) + (sym - 1);
        li.special[static_cast<std::size_t>(i)] = s;
        for (int w = base.layer_start(i + 1); w < n; ++w) g.remove_edge(s, w);
    }
    li.instance = make_instance(std::move(g));
    for (int i = 0; i < base.nprime; ++i)
        li.layers.emplace_back(base.layer_start(i), base.layer_start(i) + base.sigma);
    li.construction = "thm8";
    li.params = {{"sigma", base.sigma},
                 {"nprime", base.nprime},
                 {"kappa1", base.kappa1},
                 {"kappa2", base.kappa2},
                 {"threshold1", base.threshold1},
                 {"threshold2", base.threshold2},
                 {"q", q},
                 {"cross_seed", base.cross_seed},
                 {"cross_attempts", base.cross_attempts},
                 {"cross_graph", graph_to_text(base.cross)},
                 {"target", graph_to_text(base.h)}};
    li.certificates.push_back(base.layer_cert);
    return li;
}

// ----- clique layers -----
// n' cliques of size sigma; the designated vertex of each non-final layer is
// disconnected from everything revealed later, every other vertex is connected
// to everything revealed later. The designated vertices plus any final-layer
// vertex form an independent set of size n'.

inline LayeredInstance build_clique_layers(const std::vector<int>& q, int sigma) {
    int nprime = static_cast<int>(q.size()) + 1;
    int n = nprime * sigma;
    if (sigma < 2) throw input_error("build_clique_layers: sigma must be at least 2");
    if (n > kMaxVertices) throw input_error("build_clique_layers: instance too large");
    Graph g(n);
    LayeredInstance li;
    li.special.assign(static_cast<std::size_t>(nprime), -1);
    for (int i = 0; i < nprime; ++i)
        for (int a = 0; a < sigma; ++a)
            for (int b = a + 1; b < sigma; ++b) g.add_edge(i * sigma + a, i * sigma + b);
    for (int i = 0; i + 1 < nprime; ++i) {
        int sym = q[static_cast<std::size_t>(i)];
        if (sym < 1 || sym > sigma) throw input_error("build_clique_layers: symbol out of range");
        int designated = i * sigma + (sym - 1);
        li.special[static_cast<std::size_t>(i)] = designated;
        for (int w = (i + 1) * sigma; w < n; ++w)
            for (int v = i * sigma; v < (i + 1) * sigma; ++v)
                if (v != designated) g.add_edge(v, w);
    }
    li.instance = make_instance(std::move(g));
    for (int i = 0; i < nprime; ++i) li.layers.emplace_back(i * sigma, (i + 1) * sigma);
    li.construction = "clique-layers";
    li.params = {{"sigma", sigma}, {"nprime", nprime}, {"q", q}};
    return li;
}

// ----- anti-guessing layers -----
// One layer of k vertices per string position; a layer induces the forbidden
// graph exactly, and cross-layer adjacency copies a certified base graph except
// that each layer's x-slot vertex is cut from everything later. The x-slot
// vertices form an independent set of size n.

struct AntiLayeredInstance {
    LayeredInstance layered;
    std::vector<int> x_vertices; // absolute vertex per layer
    int k = 0;
    int threshold = 0;
    Graph h;
    RamseyCertificate base;
};

inline AntiLayeredInstance build_anti_layers(const std::vector<int>& nu, const Graph& h,
                                             const RamseyCertificate& gtilde) {
    if (!gtilde.verified) throw input_error("build_anti_layers: base certificate not verified");
    int n = static_cast<int>(nu.size());
    if (n != gtilde.graph.size()) throw input_error("build_anti_layers: string length mismatch");
    int k = h.size();
    if (k < 1) throw input_error("build_anti_layers: empty forbidden graph");
    if (n * k > kMaxVertices) throw input_error("build_anti_layers: instance too large");

    Graph g(n * k);
    for (int i = 0; i < n; ++i) {
        int sym = nu[static_cast<std::size_t>(i)];
        if (sym < 1 || sym > k) throw input_error("build_anti_layers: symbol out of range");
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (h.has_edge(a, b)) g.add_edge(i * k + a, i * k + b);
    }
    for (int i = 0; i < n; ++i)
        for (int ip = i + 1; ip < n; ++ip) {
            if (!gtilde.graph.has_edge(i, ip)) continue;
            for (int j = 0; j < k; ++j) {
                if (j == nu[static_cast<std::size_t>(i)] - 1) continue; // x-slot is cut from later
                for (int jp = 0; jp < k; ++jp) g.add_edge(i * k + j, ip * k + jp);
            }
        }

    AntiLayeredInstance out;
    out.k = k;
    out.threshold = gtilde.threshold;
    out.h = h;
    out.base = gtilde;
    out.layered.instance = make_instance(std::move(g));
    for (int i = 0; i < n; ++i) {
        out.layered.layers.emplace_back(i * k, (i + 1) * k);
        int xv = i * k + nu[static_cast<std::size_t>(i)] - 1;
        out.x_vertices.push_back(xv);
        out.layered.special.push_back(xv);
    }
    out.layered.construction = "thm10";
    out.layered.params = {{"k", k},
                          {"n", n},
                          {"nu", nu},
                          {"threshold", gtilde.threshold},
                          {"alpha", gtilde.alpha}};
    out.layered.certificates.push_back(gtilde);
    return out;
}

// The three structural observations the anti construction rests on, checked
// exhaustively at desk scale.
inline void verify_anti_layers(const AntiLayeredInstance& ai, const PropertySpec& p) {
    const Graph& g = ai.layered.instance.graph;
    int n = ai.layered.layer_count();
    int k = ai.k;

    std::uint64_t xmask = 0;
    for (int v : ai.x_vertices) xmask |= std::uint64_t{1} << v;
    if (induced_subgraph(g, xmask).edge_count() != 0)
        throw soundness_error("anti layers: x-set is not edgeless");
    if (popcount(xmask) != n) throw soundness_error("anti layers: x-set has the wrong size");

    for (int i = 0; i < n; ++i) {
        std::uint64_t lm = 0;
        for (int a = 0; a < k; ++a) lm |= std::uint64_t{1} << (i * k + a);
        if (!(induced_subgraph(g, lm) == ai.h))
            throw soundness_error("anti layers: layer does not induce the forbidden graph exactly");
    }

    // Any x-disjoint set of size >= k*threshold spans enough layers to realize
    // the base graph's guarantee, so it must violate the property.
    std::vector<int> non_x;
    for (int v = 0; v < g.size(); ++v)
        if (!((xmask >> v) & 1u)) non_x.push_back(v);
    int m = static_cast<int>(non_x.size());
    for (int size = k * ai.threshold; size <= m; ++size) {
        for_each_subset_of_size(m, size, [&](std::uint64_t idx) {
            std::uint64_t mask = 0;
            for (int t = 0; t < m; ++t)
                if ((idx >> t) & 1u) mask |= std::uint64_t{1} << non_x[static_cast<std::size_t>(t)];
            if (satisfies(induced_subgraph(g, mask), p))
                throw soundness_error("anti layers: large x-disjoint set satisfies the property");
        });
    }
}

} // namespace oisa
