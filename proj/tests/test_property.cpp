#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <oisa/property.hpp>

using namespace oisa;

TEST_CASE("shipped properties answer the obvious membership questions") {
    PropertySpec is = independent_set_property();
    PropertySpec cyc = contains_cycle_property();
    PropertySpec forest = forest_property();

    CHECK(satisfies(Graph::edgeless(5), is));
    CHECK_FALSE(satisfies(Graph::complete(2), is));
    CHECK(satisfies(Graph::complete(3), cyc));
    CHECK_FALSE(satisfies(Graph::path(4), cyc));
    CHECK(satisfies(Graph::path(4), forest));
    CHECK_FALSE(satisfies(Graph::cycle(4), forest));
    CHECK(is.min_witness_size == 2);
    CHECK(cyc.min_witness_size == 3);
}

TEST_CASE("triangle-freeness agrees with the brute triple scan on a seeded sample") {
    PropertySpec tf = triangle_free_property();
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = Graph::random(8, 0.5, seed);
        bool brute = true;
        for (int a = 0; a < 8 && brute; ++a)
            for (int b = a + 1; b < 8 && brute; ++b)
                for (int c = b + 1; c < 8 && brute; ++c)
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) brute = false;
        REQUIRE(satisfies(g, tf) == brute);
    }
}

TEST_CASE("witness properties agree with their predicate twins on a seeded corpus") {
    auto pairs = {std::pair{independent_set_property(), independent_set_predicate()},
                  std::pair{triangle_free_property(), triangle_free_predicate()},
                  std::pair{clique_property(), clique_predicate()}};
    for (const auto& [wit, pred] : pairs) {
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            int n = 1 + static_cast<int>(seed % 8);
            Graph g = Graph::random(n, 0.45, seed * 131);
            REQUIRE(satisfies(g, wit) == satisfies(g, pred));
        }
    }
}

TEST_CASE("hereditary and cohereditary closure hold exhaustively on small graphs") {
    PropertySpec forb = triangle_free_property();
    PropertySpec oblig = contains_cycle_property();
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = Graph::random(7, 0.5, seed * 17);
        std::uint64_t all = g.vertex_mask();
        for (std::uint64_t big = 0; big <= all; ++big) {
            bool big_forb = satisfies(induced_subgraph(g, big), forb);
            bool big_oblig = satisfies(induced_subgraph(g, big), oblig);
            for (std::uint64_t small = big;; small = (small - 1) & big) {
                if (big_forb)
                    REQUIRE(satisfies(induced_subgraph(g, small), forb));
                if (satisfies(induced_subgraph(g, small), oblig))
                    REQUIRE(big_oblig);
                if (small == 0) break;
            }
            if (big == all) break;
        }
    }
}

TEST_CASE("empty graph satisfies forbidden-mode and fails obligatory-mode properties") {
    CHECK(satisfies(Graph(0), independent_set_property()));
    CHECK(satisfies(Graph(0), triangle_free_property()));
    CHECK_FALSE(satisfies(Graph(0), contains_cycle_property()));
}

TEST_CASE("complement pairing: satisfies(g, p) == satisfies(complement(g), complement(p))") {
    PropertySpec is = independent_set_property();
    PropertySpec cl = clique_property();
    CHECK(complement_property(is).witnesses[0] == Graph::edgeless(2));
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Graph g = Graph::random(7, 0.5, seed * 3 + 1);
        REQUIRE(satisfies(g, is) == satisfies(complement(g), cl));
        REQUIRE(satisfies(g, cl) == satisfies(complement(g), is));
    }
}

TEST_CASE("incremental membership agrees with the batch test along accept sequences") {
    PropertySpec tf = triangle_free_property();
    PropertySpec cyc = contains_cycle_property();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Graph g = Graph::random(10, 0.5, seed * 7919);
        std::mt19937_64 rng(seed);
        std::vector<int> accepted;
        IncrementalChecker inc_tf(tf);
        IncrementalChecker inc_cyc(cyc);
        for (int v = 0; v < g.size(); ++v) {
            if (rng() & 1u) continue;
            std::uint64_t back = 0;
            for (std::size_t t = 0; t < accepted.size(); ++t)
                if (g.has_edge(accepted[t], v)) back |= std::uint64_t{1} << t;
            IncrementalChecker next_tf = inc_tf.with_vertex(back);
            IncrementalChecker next_cyc = inc_cyc.with_vertex(back);
            accepted.push_back(v);
            std::uint64_t mask = 0;
            for (int a : accepted) mask |= std::uint64_t{1} << a;
            REQUIRE(next_tf.satisfied() == satisfies(induced_subgraph(g, mask), tf));
            REQUIRE(next_cyc.satisfied() == satisfies(induced_subgraph(g, mask), cyc));
            // the old states stay valid
            REQUIRE(inc_tf.accepted_graph().size() == static_cast<int>(accepted.size()) - 1);
            inc_tf = next_tf;
            inc_cyc = next_cyc;
        }
    }
}

TEST_CASE("incremental membership on the trivial prefixes") {
    IncrementalChecker chk(independent_set_property());
    CHECK(chk.satisfied());
    IncrementalChecker one = chk.with_vertex(0);
    CHECK(one.satisfied());
    IncrementalChecker two = one.with_vertex(1); // adjacent to the held vertex
    CHECK_FALSE(two.satisfied());
}

TEST_CASE("clique-or-independent dispatch matches the property definitions") {
    CHECK(clique_or_independent(independent_set_property(), 8) ==
          SatisfiedFamily::independent_sets);
    CHECK(clique_or_independent(clique_property(), 8) == SatisfiedFamily::cliques);
    CHECK(clique_or_independent(forest_property(), 8) == SatisfiedFamily::independent_sets);
    CHECK(clique_or_independent(triangle_free_property(), 8) ==
          SatisfiedFamily::independent_sets);

    PropertySpec broken = make_hereditary_predicate(
        "at-most-one-vertex", [](const Graph& g) { return g.size() <= 1; }, 2);
    CHECK_THROWS_AS(clique_or_independent(broken, 8), misconfiguration_error);
}
