#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include <oisa/graph.hpp>

using namespace oisa;

namespace {

// Test-only oracle: exhaustive subset + permutation check for induced
// containment, independent of the backtracking search.
bool contains_induced_exhaustive(const Graph& g, const Graph& h) {
    if (h.size() == 0) return true;
    if (h.size() > g.size()) return false;
    bool found = false;
    for_each_subset_of_size(g.size(), h.size(), [&](std::uint64_t mask) {
        if (found) return;
        Graph sub = induced_subgraph(g, mask);
        std::vector<int> perm(static_cast<std::size_t>(h.size()));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool match = true;
            for (int a = 0; a < h.size() && match; ++a)
                for (int b = a + 1; b < h.size() && match; ++b)
                    if (sub.has_edge(a, b) != h.has_edge(perm[static_cast<std::size_t>(a)],
                                                         perm[static_cast<std::size_t>(b)]))
                        match = false;
            if (match) found = true;
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
    });
    return found;
}

} // namespace

TEST_CASE("induced subgraphs keep exactly the inner edges") {
    Graph k4 = Graph::complete(4);
    Graph k3 = induced_subgraph(k4, std::vector<int>{0, 1, 2});
    CHECK(k3 == Graph::complete(3));

    CHECK(induced_subgraph(Graph::cycle(5), std::uint64_t{0}) == Graph(0));

    // C5 restricted to {1,2,4} (1-based): one edge plus an isolated vertex.
    Graph c5 = Graph::cycle(5);
    Graph sub = induced_subgraph(c5, std::vector<int>{0, 1, 3});
    CHECK(sub.size() == 3);
    CHECK(sub.edge_count() == 1);
    CHECK(sub.has_edge(0, 1));

    CHECK_THROWS_AS(induced_subgraph(c5, std::vector<int>{7}), input_error);
}

TEST_CASE("complement is an involution and maps the named graphs") {
    CHECK(complement(Graph::complete(6)) == Graph::edgeless(6));
    CHECK(complement(Graph(0)) == Graph(0));
    Graph c5 = Graph::cycle(5);
    CHECK(isomorphic(complement(c5), c5));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = Graph::random(8, 0.5, seed);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced containment matches the exhaustive oracle") {
    CHECK_FALSE(contains_induced(Graph::complete(3), Graph::path(3)));
    CHECK(contains_induced(Graph::complete(1), Graph(1)));
    CHECK(contains_induced(Graph::cycle(6), Graph::path(4)));

    std::vector<Graph> patterns = {Graph::complete(2), Graph::edgeless(2), Graph::path(3),
                                   Graph::complete(3), Graph::cycle(4),   Graph::path(4),
                                   Graph::edgeless(3), Graph::complete(4)};
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = Graph::random(8, 0.4 + 0.02 * static_cast<double>(seed), seed * 77);
        for (const Graph& h : patterns)
            REQUIRE(contains_induced(g, h) == contains_induced_exhaustive(g, h));
    }
}

TEST_CASE("anchored containment only reports embeddings through the anchor") {
    Graph g(4); // triangle 0-1-2 plus isolated 3
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    CHECK(contains_induced_at(g, Graph::complete(3), 0));
    CHECK_FALSE(contains_induced_at(g, Graph::complete(3), 3));
    CHECK(contains_induced_at(g, Graph::edgeless(2), 3));
}

TEST_CASE("graph text format round-trips and reports parse errors by line") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 4);
    std::string text = graph_to_text(g);
    CHECK(parse_graph_text(text) == g);

    ParsedInstanceText p = parse_instance_text("blind\n3\n\n1\n2\n");
    CHECK(p.blind);
    CHECK(p.graph.size() == 3);
    CHECK(p.graph.has_edge(0, 1));
    CHECK(p.graph.has_edge(1, 2));

    CHECK(parse_graph_text("# header comment\n2\n\n1 # inline\n").edge_count() == 1);

    try {
        parse_graph_text("2\n\n2\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_graph_text("2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph_text("x\n"), parse_error);
}

TEST_CASE("subset enumeration covers exactly the binomial coefficient") {
    int count = 0;
    for_each_subset_of_size(6, 3, [&](std::uint64_t m) {
        ++count;
        CHECK(popcount(m) == 3);
    });
    CHECK(count == 20);
    count = 0;
    for_each_subset_of_size(5, 5, [&](std::uint64_t) { ++count; });
    CHECK(count == 1);
    count = 0;
    for_each_subset_of_size(5, 0, [&](std::uint64_t) { ++count; });
    CHECK(count == 1);
}
