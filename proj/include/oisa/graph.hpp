#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace oisa {

// Vertex sets are uint64 masks, which caps graphs at 64 vertices. Every
// construction and exhaustive kernel in this project lives well below that.
inline constexpr int kMaxVertices = 64;

inline int popcount(std::uint64_t m) { return std::popcount(m); }

inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

// Next subset of the same popcount in increasing numeric order (Gosper's hack).
inline std::uint64_t next_same_size_subset(std::uint64_t v) {
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::uint64_t limit = full_mask(n);
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s <= limit) {
        fn(s);
        if (s == (limit & ~(full_mask(n - k)))) break; // highest k-subset
        s = next_same_size_subset(s);
    }
}

// Finite simple undirected graph with 0-based vertices internally.
// File formats and reports use 1-based indices.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > kMaxVertices) throw input_error("Graph: vertex count out of range");
    }

    int size() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("Graph: self-loop");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return popcount(neighbors(v)); }

    int edge_count() const {
        int total = 0;
        for (auto row : adj_) total += popcount(row);
        return total / 2;
    }

    std::uint64_t vertex_mask() const { return full_mask(n_); }

    bool operator==(const Graph&) const = default;

    static Graph complete(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }

    static Graph edgeless(int n) { return Graph(n); }

    static Graph cycle(int n) {
        Graph g(n);
        if (n >= 3)
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        else if (n == 2)
            g.add_edge(0, 1);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }

    // G(n,p) with a fixed engine so samples are reproducible across platforms.
    static Graph random(int n, double p, std::uint64_t seed) {
        if (p < 0.0 || p > 1.0) throw input_error("Graph::random: p outside [0,1]");
        Graph g(n);
        std::mt19937_64 rng(seed);
        auto threshold = static_cast<std::uint64_t>(p * 18446744073709551615.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() <= threshold) g.add_edge(i, j);
        return g;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("Graph: vertex index out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Subgraph induced by the set bits of `mask`, reindexed order-preservingly.
inline Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    if (mask & ~g.vertex_mask()) throw input_error("induced_subgraph: vertex out of range");
    std::vector<int> verts;
    for (int v = 0; v < g.size(); ++v)
        if ((mask >> v) & 1u) verts.push_back(v);
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::uint64_t mask = 0;
    for (int v : vs) {
        if (v < 0 || v >= g.size()) throw input_error("induced_subgraph: vertex out of range");
        mask |= std::uint64_t{1} << v;
    }
    return induced_subgraph(g, mask);
}

inline Graph complement(const Graph& g) {
    Graph h(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (!g.has_edge(i, j)) h.add_edge(i, j);
    return h;
}

namespace detail {

struct InducedSearch {
    const Graph* host;
    const Graph* pat;
    std::vector<int> order;      // pattern vertices, descending degree, ties by index
    std::vector<int> image;      // order[d] -> host vertex
    std::uint64_t used = 0;
    int anchor = -1;             // host vertex that must be in the image, or -1
    int anchor_slot = -1;        // order position forced onto the anchor, or -1

    bool run(int d) {
        if (d == static_cast<int>(order.size())) return true;
        int pu = order[d];
        int pdeg = pat->degree(pu);
        for (int hv = 0; hv < host->size(); ++hv) {
            if ((used >> hv) & 1u) continue;
            if (d == anchor_slot && hv != anchor) continue;
            if (d != anchor_slot && anchor_slot >= 0 && hv == anchor) continue;
            if (host->degree(hv) < pdeg) continue;
            bool ok = true;
            for (int t = 0; t < d; ++t) {
                if (host->has_edge(hv, image[t]) != pat->has_edge(pu, order[t])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[d] = hv;
            used |= std::uint64_t{1} << hv;
            if (run(d + 1)) return true;
            used &= ~(std::uint64_t{1} << hv);
        }
        return false;
    }
};

inline std::vector<int> pattern_order(const Graph& pat) {
    std::vector<int> order(static_cast<std::size_t>(pat.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (pat.degree(a) != pat.degree(b)) return pat.degree(a) > pat.degree(b);
        return a < b;
    });
    return order;
}

inline std::optional<std::uint64_t> find_induced_impl(const Graph& g, const Graph& h, int anchor) {
    if (h.size() == 0) return std::uint64_t{0};
    if (h.size() > g.size()) return std::nullopt;
    InducedSearch s;
    s.host = &g;
    s.pat = &h;
    s.order = pattern_order(h);
    s.image.assign(s.order.size(), -1);
    if (anchor < 0) {
        if (s.run(0)) {
            std::uint64_t mask = 0;
            for (int v : s.image) mask |= std::uint64_t{1} << v;
            return mask;
        }
        return std::nullopt;
    }
    // Some pattern vertex must land on the anchor; try each slot.
    for (int slot = 0; slot < static_cast<int>(s.order.size()); ++slot) {
        s.image.assign(s.order.size(), -1);
        s.used = 0;
        s.anchor = anchor;
        s.anchor_slot = slot;
        if (s.run(0)) {
            std::uint64_t mask = 0;
            for (int v : s.image) mask |= std::uint64_t{1} << v;
            return mask;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Backtracking search for h as an induced subgraph of g: partial injective maps
// preserving both edges and non-edges, candidates pruned by degree.
inline bool contains_induced(const Graph& g, const Graph& h) {
    return detail::find_induced_impl(g, h, -1).has_value();
}

// As above, but the embedding must use host vertex `anchor`.
inline bool contains_induced_at(const Graph& g, const Graph& h, int anchor) {
    if (anchor < 0 || anchor >= g.size()) throw input_error("contains_induced_at: bad anchor");
    return detail::find_induced_impl(g, h, anchor).has_value();
}

// Host-vertex mask of one embedding, if any.
inline std::optional<std::uint64_t> find_induced(const Graph& g, const Graph& h) {
    return detail::find_induced_impl(g, h, -1);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    return contains_induced(a, b);
}

// ----- text format -----
// Line 1: n. Lines 2..n+1: line i lists the neighbors j < i of vertex i
// (1-based, space separated, possibly empty). '#' starts a comment; a line whose
// first non-space character is '#' is skipped entirely. An instance file may
// carry a 'blind' keyword line before n. This mirrors online revelation order.

struct ParsedInstanceText {
    Graph graph;
    bool blind = false;
};

inline ParsedInstanceText parse_instance_text(std::string_view text) {
    std::vector<std::pair<std::string, std::size_t>> lines; // stripped line, original number
    {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            std::string_view raw = text.substr(
                start, end == std::string_view::npos ? std::string_view::npos : end - start);
            ++line_no;
            std::size_t first = raw.find_first_not_of(" \t\r");
            bool pure_comment = first != std::string_view::npos && raw[first] == '#';
            if (!pure_comment) {
                std::size_t hash = raw.find('#');
                std::string kept(raw.substr(0, hash));
                while (!kept.empty() && (kept.back() == '\r' || kept.back() == ' ' || kept.back() == '\t'))
                    kept.pop_back();
                lines.emplace_back(kept, line_no);
            }
            if (end == std::string_view::npos) break;
            start = end + 1;
        }
    }

    std::size_t idx = 0;
    auto next_nonblank = [&]() -> std::pair<std::string, std::size_t> {
        while (idx < lines.size() &&
               lines[idx].first.find_first_not_of(" \t") == std::string::npos)
            ++idx;
        if (idx >= lines.size()) throw parse_error("unexpected end of input");
        return lines[idx++];
    };

    ParsedInstanceText out;
    auto [head, head_line] = next_nonblank();
    {
        std::istringstream is(head);
        std::string word;
        is >> word;
        if (word == "blind") {
            out.blind = true;
            std::tie(head, head_line) = next_nonblank();
        }
    }
    int n = 0;
    {
        std::istringstream is(head);
        if (!(is >> n)) throw parse_error("expected vertex count", head_line);
        std::string extra;
        if (is >> extra) throw parse_error("trailing tokens after vertex count", head_line);
        if (n < 0 || n > kMaxVertices) throw parse_error("vertex count out of range", head_line);
    }
    out.graph = Graph(n);
    for (int v = 1; v <= n; ++v) {
        if (idx >= lines.size())
            throw parse_error("missing adjacency line for vertex " + std::to_string(v));
        auto [line, line_no] = lines[idx++];
        std::istringstream is(line);
        int j = 0;
        while (is >> j) {
            if (j < 1 || j >= v)
                throw parse_error("neighbor of vertex " + std::to_string(v) +
                                      " must be an earlier vertex",
                                  line_no);
            out.graph.add_edge(v - 1, j - 1);
        }
        if (!is.eof()) throw parse_error("bad token in adjacency line", line_no);
    }
    for (; idx < lines.size(); ++idx)
        if (lines[idx].first.find_first_not_of(" \t") != std::string::npos)
            throw parse_error("trailing content after last vertex line", lines[idx].second);
    return out;
}

inline Graph parse_graph_text(std::string_view text) {
    ParsedInstanceText p = parse_instance_text(text);
    return p.graph;
}

inline std::string instance_to_text(const Graph& g, bool blind) {
    std::ostringstream os;
    if (blind) os << "blind\n";
    os << g.size() << "\n";
    for (int v = 0; v < g.size(); ++v) {
        bool first = true;
        for (int j = 0; j < v; ++j) {
            if (g.has_edge(v, j)) {
                if (!first) os << ' ';
                os << (j + 1);
                first = false;
            }
        }
        os << "\n";
    }
    return os.str();
}

inline std::string graph_to_text(const Graph& g) { return instance_to_text(g, false); }

} // namespace oisa
