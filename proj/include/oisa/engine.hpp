#pragma once

#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"
#include "property.hpp"
#include "rational.hpp"
#include "tape.hpp"

namespace oisa {

// One online input: a graph plus the order its vertices are revealed in. In a
// blind instance the algorithm is shown nothing but the step count.
struct OnlineInstance {
    Graph graph;
    std::vector<int> order; // permutation of 0..n-1
    bool blind = false;
};

inline OnlineInstance make_instance(Graph g, std::vector<int> order = {}, bool blind = false) {
    OnlineInstance inst;
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(g.size()));
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != g.size())
        throw input_error("make_instance: order length mismatch");
    std::uint64_t seen = 0;
    for (int v : order) {
        if (v < 0 || v >= g.size() || ((seen >> v) & 1u))
            throw input_error("make_instance: order is not a permutation");
        seen |= std::uint64_t{1} << v;
    }
    inst.graph = std::move(g);
    inst.order = std::move(order);
    inst.blind = blind;
    return inst;
}

// The revealed graph, re-labelled by revelation position: vertex i of the
// result is the i-th revealed vertex.
inline Graph revealed_prefix(const OnlineInstance& inst, int steps) {
    Graph g(steps);
    for (int a = 0; a < steps; ++a)
        for (int b = a + 1; b < steps; ++b)
            if (inst.graph.has_edge(inst.order[static_cast<std::size_t>(a)],
                                    inst.order[static_cast<std::size_t>(b)]))
                g.add_edge(a, b);
    return g;
}

// What an algorithm may look at when deciding step `step` (0-based): the
// revealed induced subgraph (never the full instance) and its own held set.
// Blind games carry an empty graph, so future-peeking is impossible by type.
struct History {
    int step = 0;
    bool blind = false;
    const Graph* revealed = nullptr; // step+1 vertices in revelation labelling
    std::uint64_t surviving = 0;     // mask over revelation positions < step
};

struct Decision {
    bool accept = false;
    std::vector<int> preempt; // revelation positions; must be currently held
};

using OnlineAlgorithm = std::function<Decision(const History&, AdviceTape&)>;

enum class GameMode { plain, preemptive };
enum class Objective { maximize, minimize };

// Finite value or an infinity sentinel.
struct Score {
    enum class Kind { finite, plus_inf, minus_inf };
    Kind kind = Kind::finite;
    long long value = 0;

    static Score finite(long long v) { return Score{Kind::finite, v}; }
    static Score pos_inf() { return Score{Kind::plus_inf, 0}; }
    static Score neg_inf() { return Score{Kind::minus_inf, 0}; }
    bool is_finite() const { return kind == Kind::finite; }
    bool operator==(const Score&) const = default;
};

struct StepRecord {
    bool accepted = false;
    std::vector<int> preempted; // revelation positions, ascending
    std::vector<int> survivors; // revelation positions, ascending
};

struct Transcript {
    std::vector<StepRecord> steps;
    std::vector<int> final_set; // revelation positions, ascending
    Score objective;
    std::size_t bits_read = 0;
    bool feasible_throughout = true;
};

namespace detail {
inline std::vector<int> mask_to_list(std::uint64_t m) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((m >> i) & 1u) out.push_back(i);
    return out;
}
} // namespace detail

// Plays one game. Per step: the algorithm decides, preemption is applied before
// the accept, and the post-state is checked against the property. In a maximum
// game any per-step violation poisons the transcript to -inf (the run still
// completes so the decision history stays inspectable); in a minimum game only
// the final set must satisfy the property, else cost is +inf.
inline Transcript run_game(const OnlineInstance& inst, const OnlineAlgorithm& alg,
                           const PropertySpec& prop, GameMode mode, AdviceTape tape,
                           Objective objective) {
    int n = inst.graph.size();
    Transcript t;
    t.steps.reserve(static_cast<std::size_t>(n));
    std::uint64_t surviving = 0;
    Graph empty(0);
    for (int step = 0; step < n; ++step) {
        Graph revealed = inst.blind ? Graph(0) : revealed_prefix(inst, step + 1);
        History h;
        h.step = step;
        h.blind = inst.blind;
        h.revealed = inst.blind ? &empty : &revealed;
        h.surviving = surviving;
        Decision d = alg(h, tape);

        if (!d.preempt.empty() && mode == GameMode::plain)
            throw protocol_error("preemption in plain mode");
        std::uint64_t preempt_mask = 0;
        for (int v : d.preempt) {
            if (v < 0 || v >= step || !((surviving >> v) & 1u))
                throw protocol_error("preempting a vertex that is not currently held");
            preempt_mask |= std::uint64_t{1} << v;
        }
        surviving &= ~preempt_mask;
        if (d.accept) surviving |= std::uint64_t{1} << step;

        StepRecord rec;
        rec.accepted = d.accept;
        rec.preempted = detail::mask_to_list(preempt_mask);
        rec.survivors = detail::mask_to_list(surviving);
        t.steps.push_back(std::move(rec));

        std::uint64_t inst_mask = 0;
        for (int pos = 0; pos <= step; ++pos)
            if ((surviving >> pos) & 1u)
                inst_mask |= std::uint64_t{1} << inst.order[static_cast<std::size_t>(pos)];
        if (!satisfies(induced_subgraph(inst.graph, inst_mask), prop))
            t.feasible_throughout = false;
    }
    t.final_set = detail::mask_to_list(surviving);
    t.bits_read = tape.bits_read();

    long long held = static_cast<long long>(t.final_set.size());
    if (objective == Objective::maximize) {
        t.objective = t.feasible_throughout ? Score::finite(held) : Score::neg_inf();
    } else {
        std::uint64_t inst_mask = 0;
        for (int pos : t.final_set)
            inst_mask |= std::uint64_t{1} << inst.order[static_cast<std::size_t>(pos)];
        bool final_ok = satisfies(induced_subgraph(inst.graph, inst_mask), prop);
        t.objective = final_ok ? Score::finite(held) : Score::pos_inf();
    }
    return t;
}

// Eq-style ratio: OPT/ALG for maximization, ALG/OPT for minimization. A zero
// or infinite objective maps to an infinite ratio, not an error.
inline Rational competitive_ratio(const Transcript& t, long long opt_value, Objective objective) {
    if (opt_value < 1) throw input_error("competitive_ratio: opt_value must be >= 1");
    if (!t.objective.is_finite()) return Rational::infinity();
    if (objective == Objective::maximize) {
        if (t.objective.value == 0) return Rational::infinity();
        return Rational(opt_value, t.objective.value);
    }
    return Rational(t.objective.value, opt_value);
}

// ----- serialization -----

inline nlohmann::json score_to_json(const Score& s) {
    switch (s.kind) {
        case Score::Kind::plus_inf: return "+inf";
        case Score::Kind::minus_inf: return "-inf";
        default: return s.value;
    }
}

inline Score score_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        if (j == "+inf") return Score::pos_inf();
        if (j == "-inf") return Score::neg_inf();
        throw parse_error("bad score string");
    }
    return Score::finite(j.get<long long>());
}

namespace detail {
inline nlohmann::json positions_1based(const std::vector<int>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}
inline std::vector<int> positions_0based(const nlohmann::json& a) {
    std::vector<int> v;
    for (const auto& x : a) v.push_back(x.get<int>() - 1);
    return v;
}
} // namespace detail

inline nlohmann::json transcript_to_json(const Transcript& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"accepted", s.accepted},
                         {"preempted", detail::positions_1based(s.preempted)},
                         {"survivors", detail::positions_1based(s.survivors)}});
    }
    return nlohmann::json{{"steps", steps},
                          {"objective", score_to_json(t.objective)},
                          {"bits_read", t.bits_read},
                          {"feasible_throughout", t.feasible_throughout}};
}

inline Transcript transcript_from_json(const nlohmann::json& j) {
    Transcript t;
    for (const auto& s : j.at("steps")) {
        StepRecord r;
        r.accepted = s.at("accepted").get<bool>();
        r.preempted = detail::positions_0based(s.at("preempted"));
        r.survivors = detail::positions_0based(s.at("survivors"));
        t.steps.push_back(std::move(r));
    }
    if (!t.steps.empty()) t.final_set = t.steps.back().survivors;
    t.objective = score_from_json(j.at("objective"));
    t.bits_read = j.at("bits_read").get<std::size_t>();
    t.feasible_throughout = j.at("feasible_throughout").get<bool>();
    return t;
}

// ----- stock algorithms -----

inline OnlineAlgorithm reject_all_algorithm() {
    return [](const History&, AdviceTape&) { return Decision{false, {}}; };
}

inline OnlineAlgorithm accept_all_algorithm() {
    return [](const History&, AdviceTape&) { return Decision{true, {}}; };
}

// Accepts whenever the grown set still satisfies the property; advice-free.
inline OnlineAlgorithm greedy_algorithm(PropertySpec p) {
    return [p = std::move(p)](const History& h, AdviceTape&) {
        if (h.blind) return Decision{false, {}};
        std::uint64_t mask = h.surviving | (std::uint64_t{1} << h.step);
        return Decision{satisfies(induced_subgraph(*h.revealed, mask), p), {}};
    };
}

// Reads one advice bit per vertex and accepts on 1.
inline OnlineAlgorithm bitmap_algorithm() {
    return [](const History&, AdviceTape& tape) { return Decision{tape.read_bit() == 1, {}}; };
}

// Per-vertex indicator of a maximum solution, for bitmap_algorithm.
inline BitString bitmap_advice_for(const std::vector<int>& opt_positions, int n) {
    BitString b;
    std::uint64_t mask = 0;
    for (int v : opt_positions) mask |= std::uint64_t{1} << v;
    for (int i = 0; i < n; ++i) b.push_back((mask >> i) & 1u);
    return b;
}

} // namespace oisa
