#include <catch2/catch_amalgamated.hpp>

#include <oisa/optima.hpp>

using namespace oisa;

namespace {

// Test-only oracle: plain subset enumeration.
int max_size_exhaustive(const Graph& g, const PropertySpec& p) {
    int best = 0;
    std::uint64_t all = g.vertex_mask();
    for (std::uint64_t s = 0;; ++s) {
        if (popcount(s) > best && satisfies(induced_subgraph(g, s), p))
            best = popcount(s);
        if (s == all) break;
    }
    return best;
}

} // namespace

TEST_CASE("maximum subsets on the named graphs") {
    CHECK(popcount(max_property_subset(Graph::cycle(5), independent_set_property())) == 2);
    CHECK(popcount(max_property_subset(Graph::edgeless(9), independent_set_property())) == 9);
    CHECK(popcount(max_property_subset(Graph::complete(4), forest_property())) == 2);
}

TEST_CASE("maximum subset output satisfies the property and nothing larger does") {
    std::vector<PropertySpec> props = {independent_set_property(), triangle_free_property(),
                                       forest_property()};
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = Graph::random(12, 0.5, seed * 101);
        for (const auto& p : props) {
            std::uint64_t m = max_property_subset(g, p);
            REQUIRE(satisfies(induced_subgraph(g, m), p));
            REQUIRE(popcount(m) == max_size_exhaustive(g, p));
        }
    }
}

TEST_CASE("maximum subset guards its preconditions") {
    CHECK_THROWS_AS(max_property_subset(Graph(5), contains_cycle_property()), input_error);
    CHECK_THROWS_AS(max_property_subset(Graph(10), independent_set_property(), 8),
                    resource_error);
}

TEST_CASE("minimum subsets on the named graphs") {
    Graph triangle_plus(8);
    triangle_plus.add_edge(0, 1);
    triangle_plus.add_edge(1, 2);
    triangle_plus.add_edge(0, 2);
    auto m = min_property_subset(triangle_plus, contains_cycle_property());
    REQUIRE(m.has_value());
    CHECK(popcount(*m) == 3);

    CHECK_FALSE(min_property_subset(Graph::path(6), contains_cycle_property()).has_value());

    auto c7 = min_property_subset(Graph::cycle(7), contains_cycle_property());
    REQUIRE(c7.has_value());
    CHECK(popcount(*c7) == 7);
}

TEST_CASE("minimum subsets in witness mode find a smallest occurrence") {
    PropertySpec has_triangle = make_obligatory("has-triangle", {Graph::complete(3)});
    Graph g = Graph::complete(5);
    auto m = min_property_subset(g, has_triangle);
    REQUIRE(m.has_value());
    CHECK(popcount(*m) == 3);
    CHECK(satisfies(induced_subgraph(g, *m), has_triangle));

    CHECK_FALSE(min_property_subset(Graph::edgeless(4), has_triangle).has_value());
    CHECK_THROWS_AS(min_property_subset(Graph(3), independent_set_property()), input_error);
}

TEST_CASE("minimum subsets agree with exhaustive search on seeded instances") {
    PropertySpec cyc = contains_cycle_property();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = Graph::random(9, 0.3, seed * 997);
        auto m = min_property_subset(g, cyc);
        int brute = -1;
        std::uint64_t all = g.vertex_mask();
        for (std::uint64_t s = 0;; ++s) {
            if ((brute < 0 || popcount(s) < brute) && satisfies(induced_subgraph(g, s), cyc))
                brute = popcount(s);
            if (s == all) break;
        }
        if (brute < 0)
            REQUIRE_FALSE(m.has_value());
        else {
            REQUIRE(m.has_value());
            REQUIRE(popcount(*m) == brute);
        }
    }
}
