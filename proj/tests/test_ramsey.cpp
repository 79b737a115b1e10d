#include <catch2/catch_amalgamated.hpp>

#include <oisa/optima.hpp>
#include <oisa/property.hpp>
#include <oisa/ramsey.hpp>

using namespace oisa;

TEST_CASE("thresholds follow ceil(alpha log2 n), floored at the target size") {
    CHECK(ramsey_threshold(16, 2.0, 2) == 8);
    CHECK(ramsey_threshold(16, 0.5, 2) == 2);
    CHECK(ramsey_threshold(12, 1.0, 2) == 4);
    CHECK(ramsey_threshold(1, 2.0, 2) == 2); // degenerate order: floor kicks in
    CHECK(ramsey_threshold(12, 1.5, 2) == 6);
}

TEST_CASE("a verified edge certificate bounds the independence number") {
    RamseyCertificate cert = ramsey_like_graph(16, Graph::complete(2), 2.0, 1, 2000);
    REQUIRE(cert.verified);
    CHECK(cert.threshold == 8);
    // Cross-check with an independent oracle: the largest independent set of
    // the sampled graph must stay below the threshold.
    long long independence =
        popcount(max_property_subset(cert.graph, independent_set_property()));
    CHECK(independence <= cert.threshold - 1);
    CHECK(reverify(cert));
}

TEST_CASE("single-vertex orders verify vacuously") {
    RamseyCertificate cert = ramsey_like_graph(1, Graph::complete(2), 2.0, 5, 3);
    CHECK(cert.verified);
    CHECK(cert.threshold > 1);
}

TEST_CASE("threshold two demands a complete sample, which p=1/2 will not produce") {
    RamseyCertificate cert = ramsey_like_graph(16, Graph::complete(2), 0.5, 7, 100);
    CHECK(cert.threshold == 2);
    CHECK_FALSE(cert.verified);
    CHECK(cert.attempts == 100);
    // Every unverified sample really has a non-adjacent pair.
    CHECK_FALSE(verify_ramsey_condition(cert.graph, cert.target, cert.threshold));
}

TEST_CASE("verification is honest about failures") {
    Graph g = Graph::edgeless(6);
    CHECK_FALSE(verify_ramsey_condition(g, Graph::complete(2), 3));
    CHECK(verify_ramsey_condition(g, Graph::complete(2), 7)); // vacuous above the order
    CHECK(verify_ramsey_condition(Graph::complete(6), Graph::complete(2), 2));
}

TEST_CASE("the search guards its inputs") {
    CHECK_THROWS_AS(ramsey_like_graph(25, Graph::complete(2), 2.0, 1, 10), resource_error);
    CHECK_THROWS_AS(ramsey_like_graph(8, Graph(0), 2.0, 1, 10), input_error);
    CHECK_THROWS_AS(ramsey_like_graph(8, Graph::complete(2), 2.0, 1, 0), input_error);
}
