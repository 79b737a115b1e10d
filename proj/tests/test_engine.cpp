#include <catch2/catch_amalgamated.hpp>

#include <oisa/engine.hpp>
#include <oisa/optima.hpp>
#include <oisa/transforms.hpp>

using namespace oisa;

namespace {

OnlineInstance two_vertex_edge() {
    Graph g(2);
    g.add_edge(0, 1);
    return make_instance(std::move(g));
}

} // namespace

TEST_CASE("a property-violating accept poisons a maximum game") {
    PropertySpec is = independent_set_property();
    Transcript t = run_game(two_vertex_edge(), accept_all_algorithm(), is, GameMode::plain,
                            AdviceTape{}, Objective::maximize);
    CHECK(t.objective == Score::neg_inf());
    CHECK_FALSE(t.feasible_throughout);
}

TEST_CASE("reject-all scores zero and stays feasible") {
    PropertySpec is = independent_set_property();
    Transcript t = run_game(two_vertex_edge(), reject_all_algorithm(), is, GameMode::plain,
                            AdviceTape{}, Objective::maximize);
    CHECK(t.objective == Score::finite(0));
    CHECK(t.feasible_throughout);
    CHECK(t.bits_read == 0);
}

TEST_CASE("bitmap advice reproduces the optimum on seeded instances") {
    PropertySpec is = independent_set_property();
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = Graph::random(8, 0.5, seed * 991);
        std::uint64_t opt = max_property_subset(g, is);
        OnlineInstance inst = make_instance(g);
        Transcript t = run_game(inst, bitmap_algorithm(), is, GameMode::plain,
                                AdviceTape(bitmap_advice_for(detail::mask_to_list(opt), 8)),
                                Objective::maximize);
        REQUIRE(t.objective == Score::finite(popcount(opt)));
        REQUIRE(t.bits_read == 8);
        REQUIRE(competitive_ratio(t, popcount(opt), Objective::maximize) == Rational(1));
    }
}

TEST_CASE("protocol violations are rejected") {
    PropertySpec is = independent_set_property();
    OnlineAlgorithm preempt_in_plain = [](const History& h, AdviceTape&) {
        Decision d{true, {}};
        if (h.step == 1) d.preempt = {0};
        return d;
    };
    CHECK_THROWS_AS(run_game(two_vertex_edge(), preempt_in_plain, is, GameMode::plain,
                             AdviceTape{}, Objective::maximize),
                    protocol_error);

    OnlineAlgorithm preempt_unheld = [](const History& h, AdviceTape&) {
        Decision d{false, {}};
        if (h.step == 1) d.preempt = {0}; // vertex 0 was rejected, not held
        return d;
    };
    CHECK_THROWS_AS(run_game(two_vertex_edge(), preempt_unheld, is, GameMode::preemptive,
                             AdviceTape{}, Objective::maximize),
                    protocol_error);
}

TEST_CASE("preemption before accept keeps a step feasible") {
    PropertySpec is = independent_set_property();
    // Accept everything, preempting all held vertices first: always feasible.
    OnlineAlgorithm swap_alg = [](const History& h, AdviceTape&) {
        Decision d{true, detail::mask_to_list(h.surviving)};
        return d;
    };
    Graph g = Graph::complete(5);
    Transcript t = run_game(make_instance(g), swap_alg, is, GameMode::preemptive, AdviceTape{},
                            Objective::maximize);
    CHECK(t.feasible_throughout);
    CHECK(t.objective == Score::finite(1));
}

TEST_CASE("monotone discard: survivors only shrink or gain the new vertex") {
    PropertySpec is = independent_set_property();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = Graph::random(10, 0.5, seed);
        Transcript t = run_game(make_instance(g), greedy_algorithm(is), is, GameMode::plain,
                                AdviceTape{}, Objective::maximize);
        std::uint64_t prev = 0;
        for (int step = 0; step < 10; ++step) {
            std::uint64_t cur = 0;
            for (int v : t.steps[static_cast<std::size_t>(step)].survivors)
                cur |= std::uint64_t{1} << v;
            REQUIRE((cur & ~(prev | (std::uint64_t{1} << step))) == 0);
            prev = cur;
        }
        // profit equals the final surviving size on feasible maximum runs
        REQUIRE(t.objective == Score::finite(static_cast<long long>(t.final_set.size())));
    }
}

TEST_CASE("plain transcripts never carry preemptions") {
    PropertySpec is = independent_set_property();
    Graph g = Graph::random(9, 0.4, 5);
    Transcript t = run_game(make_instance(g), greedy_algorithm(is), is, GameMode::plain,
                            AdviceTape{}, Objective::maximize);
    for (const auto& s : t.steps) CHECK(s.preempted.empty());
}

TEST_CASE("minimum games only require the final set to satisfy") {
    PropertySpec cyc = contains_cycle_property();
    Graph g = Graph::complete(3);
    Transcript win = run_game(make_instance(g), accept_all_algorithm(), cyc, GameMode::plain,
                              AdviceTape{}, Objective::minimize);
    CHECK(win.objective == Score::finite(3));
    CHECK_FALSE(win.feasible_throughout); // prefixes lack a cycle; only the end matters

    Transcript lose = run_game(make_instance(Graph::path(3)), accept_all_algorithm(), cyc,
                               GameMode::plain, AdviceTape{}, Objective::minimize);
    CHECK(lose.objective == Score::pos_inf());
}

TEST_CASE("determinism: identical runs serialize byte-for-byte") {
    PropertySpec is = independent_set_property();
    Graph g = Graph::random(10, 0.5, 424242);
    auto play = [&] {
        return transcript_to_json(run_game(make_instance(g), greedy_algorithm(is), is,
                                           GameMode::plain, AdviceTape{}, Objective::maximize))
            .dump();
    };
    CHECK(play() == play());
}

TEST_CASE("transcript JSON round-trips") {
    PropertySpec is = independent_set_property();
    Graph g = Graph::random(7, 0.5, 99);
    Transcript t = run_game(make_instance(g), greedy_algorithm(is), is, GameMode::plain,
                            AdviceTape{}, Objective::maximize);
    Transcript back = transcript_from_json(transcript_to_json(t));
    CHECK(back.final_set == t.final_set);
    CHECK(back.objective == t.objective);
    CHECK(back.bits_read == t.bits_read);
    CHECK(back.feasible_throughout == t.feasible_throughout);
    CHECK(transcript_to_json(back).dump() == transcript_to_json(t).dump());
}

TEST_CASE("competitive ratios, including the infinite cases") {
    Transcript t;
    t.objective = Score::finite(5);
    CHECK(competitive_ratio(t, 10, Objective::maximize) == Rational(2));
    t.objective = Score::finite(10);
    CHECK(competitive_ratio(t, 10, Objective::maximize) == Rational(1));
    t.objective = Score::finite(6);
    CHECK(competitive_ratio(t, 3, Objective::minimize) == Rational(2));
    t.objective = Score::finite(0);
    CHECK(competitive_ratio(t, 4, Objective::maximize).is_infinite());
    t.objective = Score::neg_inf();
    CHECK(competitive_ratio(t, 4, Objective::maximize).is_infinite());
    t.objective = Score::pos_inf();
    CHECK(competitive_ratio(t, 4, Objective::minimize).is_infinite());
    t.objective = Score::finite(1);
    CHECK_THROWS_AS(competitive_ratio(t, 0, Objective::maximize), input_error);
}

TEST_CASE("blind instances expose only the step count") {
    Graph g = Graph::random(6, 0.5, 3);
    OnlineInstance inst = make_instance(g, {}, true);
    OnlineAlgorithm probe = [](const History& h, AdviceTape&) {
        REQUIRE(h.blind);
        REQUIRE(h.revealed->size() == 0);
        return Decision{false, {}};
    };
    run_game(inst, probe, independent_set_property(), GameMode::plain, AdviceTape{},
             Objective::maximize);
}

TEST_CASE("instance text with the blind flag round-trips") {
    Graph g = Graph::random(5, 0.5, 11);
    std::string text = instance_to_text(g, true);
    ParsedInstanceText p = parse_instance_text(text);
    CHECK(p.blind);
    CHECK(p.graph == g);
}
