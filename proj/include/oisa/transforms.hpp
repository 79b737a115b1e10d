#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

#include "bits.hpp"
#include "constructions.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "guessing.hpp"
#include "optima.hpp"
#include "tape.hpp"

namespace oisa {

inline int ceil_log2(long long n) {
    if (n <= 1) return 0;
    return std::bit_width(static_cast<std::uint64_t>(n - 1));
}

// ----- blind asymmetric guesser -> subgraph algorithm -----
// Accepts a vertex exactly when the guesser answers 0 to a dummy request, and
// reads exactly the bits the guesser reads (they share the tape).

inline OnlineAlgorithm lift_blind_guesser(GuessAlgorithm asg) {
    return [asg = std::move(asg)](const History& h, AdviceTape& tape) {
        GuessHistory gh;
        gh.step = h.step + 1;
        gh.sigma = 2;
        gh.announced_n = -1;
        gh.blind = true;
        int y = asg(gh, tape);
        if (y != 0 && y != 1) throw protocol_error("blind guesser answered outside {0,1}");
        return Decision{y == 0, {}};
    };
}

// One bit per vertex, set exactly off the optimum: the bit-tape guesser answers
// it, so 0-answers reproduce the optimal solution.
inline BitString outside_optimum_bits(const Graph& g, const PropertySpec& p,
                                      int bound = kDefaultOptBound) {
    std::uint64_t opt = max_property_subset(g, p, bound);
    BitString b;
    for (int v = 0; v < g.size(); ++v) b.push_back(!((opt >> v) & 1u));
    return b;
}

// ----- shared step-by-step simulator for wrapped subgraph algorithms -----

class PiSimulator {
public:
    PiSimulator(OnlineAlgorithm alg, GameMode mode) : alg_(std::move(alg)), mode_(mode) {}

    // Feeds one vertex whose back edges (mask over revelation positions) are
    // given; applies the decision and returns whether the vertex was accepted.
    bool feed(std::uint64_t back_edges, AdviceTape& tape) {
        int step = revealed_.size();
        Graph grown(step + 1);
        for (int a = 0; a < step; ++a)
            for (int b = a + 1; b < step; ++b)
                if (revealed_.has_edge(a, b)) grown.add_edge(a, b);
        for (int a = 0; a < step; ++a)
            if ((back_edges >> a) & 1u) grown.add_edge(a, step);
        revealed_ = std::move(grown);

        History h;
        h.step = step;
        h.blind = false;
        h.revealed = &revealed_;
        h.surviving = surviving_;
        Decision d = alg_(h, tape);
        if (!d.preempt.empty() && mode_ == GameMode::plain)
            throw protocol_error("preemption in plain mode");
        for (int v : d.preempt) {
            if (v < 0 || v >= step || !((surviving_ >> v) & 1u))
                throw protocol_error("preempting a vertex that is not currently held");
            surviving_ &= ~(std::uint64_t{1} << v);
        }
        if (d.accept) surviving_ |= std::uint64_t{1} << step;
        return d.accept;
    }

    std::uint64_t surviving() const { return surviving_; }
    int steps() const { return revealed_.size(); }
    const Graph& revealed() const { return revealed_; }

private:
    OnlineAlgorithm alg_;
    GameMode mode_;
    Graph revealed_{0};
    std::uint64_t surviving_ = 0;
};

// ----- correction string -----
// Patches a subgraph solution S into an exactly balanced guessing output:
// s_out lists the members of S outside the planted zero set, s_in tops the
// remainder back up so that |(S minus s_out) union s_in| = min(|S|, |inside|).

struct CorrectionString {
    std::vector<int> s_out;
    std::vector<int> s_in;
    BitString encoded;
};

inline BitString encode_correction(const std::vector<int>& s_out, const std::vector<int>& s_in,
                                   int n) {
    int w = ceil_log2(n);
    BitString b;
    b.append(encode_self_delimited(s_out.size()));
    for (int v : s_out) b.append_uint(static_cast<std::uint64_t>(v), w);
    b.append(encode_self_delimited(s_in.size()));
    for (int v : s_in) b.append_uint(static_cast<std::uint64_t>(v), w);
    return b;
}

inline CorrectionString make_correction(std::uint64_t solution, std::uint64_t inside, int threshold,
                                        int n) {
    CorrectionString c;
    for (int v = 0; v < n; ++v)
        if (((solution >> v) & 1u) && !((inside >> v) & 1u)) c.s_out.push_back(v);
    if (static_cast<int>(c.s_out.size()) > threshold)
        throw soundness_error("correction: solution has too many vertices outside the planted set");
    long long target = std::min<long long>(popcount(solution), popcount(inside));
    long long have = popcount(solution & inside);
    long long need = target - have;
    for (int v = 0; v < n && need > 0; ++v)
        if (((inside >> v) & 1u) && !((solution >> v) & 1u)) {
            c.s_in.push_back(v);
            --need;
        }
    if (need != 0) throw soundness_error("correction: balancing is impossible");
    long long patched = static_cast<long long>(popcount(solution & inside)) +
                        static_cast<long long>(c.s_in.size());
    if (patched != target) throw soundness_error("correction: balancing identity failed");
    c.encoded = encode_correction(c.s_out, c.s_in, n);
    return c;
}

struct DecodedCorrection {
    std::vector<int> s_out;
    std::vector<int> s_in;
};

inline DecodedCorrection decode_correction(AdviceTape& tape, int n) {
    int w = ceil_log2(n);
    DecodedCorrection d;
    std::uint64_t c_out = tape.read_self_delimited();
    for (std::uint64_t i = 0; i < c_out; ++i)
        d.s_out.push_back(static_cast<int>(tape.read_uint(w)));
    std::uint64_t c_in = tape.read_self_delimited();
    for (std::uint64_t i = 0; i < c_in; ++i) d.s_in.push_back(static_cast<int>(tape.read_uint(w)));
    return d;
}

// ----- masked instance pipeline: subgraph algorithm -> known-history guesser -----

struct KnownAsgDerivation {
    BitString advice;             // enc(n) || correction || inner advice
    CorrectionString correction;
    std::uint64_t pi_solution = 0;
    long long expected_profit = 0;
    std::size_t header_bits = 0;  // advice minus the inner algorithm's part
};

inline KnownAsgDerivation derive_known_asg(const MaskedInstance& mi, const OnlineAlgorithm& pi_alg,
                                           const BitString& pi_advice, const PropertySpec& p) {
    Transcript t = run_game(mi.instance, pi_alg, p, GameMode::plain, AdviceTape(pi_advice),
                            Objective::maximize);
    std::uint64_t s = 0;
    for (int v : t.final_set) s |= std::uint64_t{1} << v;
    KnownAsgDerivation d;
    d.pi_solution = s;
    d.correction = make_correction(s, mi.inside, mi.threshold, mi.instance.graph.size());
    d.expected_profit = std::min<long long>(popcount(s), popcount(mi.inside));
    BitString advice = encode_self_delimited(static_cast<std::uint64_t>(mi.instance.graph.size()));
    advice.append(d.correction.encoded);
    d.header_bits = advice.size();
    advice.append(pi_advice);
    d.advice = std::move(advice);
    return d;
}

// The derived guesser rebuilds the masked instance online from the requests it
// has seen, replays the subgraph algorithm on it, and answers through the
// correction sets. Always feasible; profit is exactly min(|S|, |inside|).
inline GuessAlgorithm make_known_asg_player(const RamseyCertificate& base,
                                            SatisfiedFamily orientation,
                                            const OnlineAlgorithm& pi_alg) {
    struct State {
        bool started = false;
        std::vector<int> s_out, s_in;
        std::unique_ptr<PiSimulator> sim;
    };
    auto st = std::make_shared<State>();
    return [st, base, orientation, pi_alg](const GuessHistory& h, AdviceTape& tape) -> int {
        if (!st->started) {
            std::uint64_t n = tape.read_self_delimited();
            if (static_cast<int>(n) != base.graph.size())
                throw soundness_error("derived guesser: advice length header mismatch");
            DecodedCorrection c = decode_correction(tape, static_cast<int>(n));
            st->s_out = c.s_out;
            st->s_in = c.s_in;
            st->sim = std::make_unique<PiSimulator>(pi_alg, GameMode::plain);
            st->started = true;
        }
        int i = h.step - 1; // 0-based vertex of the masked instance
        std::uint64_t back = 0;
        for (int j = 0; j < i; ++j) {
            bool edge = base.graph.has_edge(j, i) && h.prefix[static_cast<std::size_t>(j)] != 0;
            if (orientation == SatisfiedFamily::cliques) edge = !edge;
            if (edge) back |= std::uint64_t{1} << j;
        }
        bool accepted = st->sim->feed(back, tape);
        if (std::find(st->s_in.begin(), st->s_in.end(), i) != st->s_in.end()) return 0;
        if (std::find(st->s_out.begin(), st->s_out.end(), i) != st->s_out.end()) return 1;
        return accepted ? 0 : 1;
    };
}

// ----- layered instance pipeline: preemptive subgraph algorithm -> guesser -----

struct LayeredGuessOutcome {
    std::vector<std::vector<int>> cand_slots; // per layer, 1-based, ascending
    int good_sets = 0;
    int surviving_special = 0;
    int best_j = 1;
    long long best_correct = 0;
    std::vector<long long> correct_by_j; // index j-1
    std::vector<int> answers;            // answers for best_j
    Transcript transcript;
    bool poisoned = false;
};

namespace detail {
inline std::vector<int> padded_slots(const std::vector<int>& cand, int sigma) {
    std::vector<int> out = cand;
    for (int s = 1; s <= sigma; ++s)
        if (std::find(cand.begin(), cand.end(), s) == cand.end()) out.push_back(s);
    return out; // candidates in order, then the unused slots ascending
}
} // namespace detail

inline LayeredGuessOutcome run_layered_guess_reduction(const LayeredBase& base,
                                                       const std::vector<int>& q,
                                                       const OnlineAlgorithm& pi_alg,
                                                       const BitString& pi_advice,
                                                       const PropertySpec& p) {
    LayeredInstance li = embed_guess_string(base, q);
    LayeredGuessOutcome out;
    out.transcript = run_game(li.instance, pi_alg, p, GameMode::preemptive, AdviceTape(pi_advice),
                              Objective::maximize);
    out.poisoned = !out.transcript.feasible_throughout;
    int guesses = base.nprime - 1;
    for (int i = 0; i < base.nprime; ++i) {
        int end_step = li.layers[static_cast<std::size_t>(i)].second - 1;
        const auto& surv = out.transcript.steps[static_cast<std::size_t>(end_step)].survivors;
        std::vector<int> slots;
        for (int v : surv)
            if (v >= li.layers[static_cast<std::size_t>(i)].first && v <= end_step)
                slots.push_back(v - li.layers[static_cast<std::size_t>(i)].first + 1);
        if (!out.poisoned && static_cast<int>(slots.size()) > base.threshold1)
            throw soundness_error("layered reduction: candidate set exceeds the layer threshold");
        out.cand_slots.push_back(std::move(slots));
    }
    for (int i = 0; i < guesses; ++i) {
        int special_slot = li.special[static_cast<std::size_t>(i)] -
                           li.layers[static_cast<std::size_t>(i)].first + 1;
        const auto& cand = out.cand_slots[static_cast<std::size_t>(i)];
        if (std::find(cand.begin(), cand.end(), special_slot) != cand.end()) ++out.good_sets;
    }
    for (int v : out.transcript.final_set) {
        int layer = li.layer_of(v);
        if (layer < guesses && li.special[static_cast<std::size_t>(layer)] == v)
            ++out.surviving_special;
    }
    out.correct_by_j.assign(static_cast<std::size_t>(base.threshold1), 0);
    for (int j = 1; j <= base.threshold1; ++j) {
        long long correct = 0;
        for (int i = 0; i < guesses; ++i) {
            std::vector<int> padded =
                detail::padded_slots(out.cand_slots[static_cast<std::size_t>(i)], base.sigma);
            int idx = std::min(j, static_cast<int>(padded.size())) - 1;
            if (padded[static_cast<std::size_t>(idx)] == q[static_cast<std::size_t>(i)]) ++correct;
        }
        out.correct_by_j[static_cast<std::size_t>(j - 1)] = correct;
        if (correct > out.best_correct) {
            out.best_correct = correct;
            out.best_j = j;
        }
    }
    // Answers for the best slot index, as the online player would emit them.
    for (int i = 0; i < guesses; ++i) {
        std::vector<int> padded =
            detail::padded_slots(out.cand_slots[static_cast<std::size_t>(i)], base.sigma);
        int idx = std::min(out.best_j, static_cast<int>(padded.size())) - 1;
        out.answers.push_back(padded[static_cast<std::size_t>(idx)]);
    }
    // A distinguished vertex alive at the end was alive when its layer closed.
    if (out.good_sets < out.surviving_special)
        throw soundness_error("layered reduction: good sets undercount surviving specials");
    return out;
}

inline BitString layered_guess_advice(int j, int threshold1, const BitString& pi_advice) {
    BitString b;
    b.append_uint(static_cast<std::uint64_t>(j - 1), ceil_log2(threshold1));
    b.append(pi_advice);
    return b;
}

// Online form of the same reduction: reads the slot index from the tape, feeds
// one layer per request (buildable from the revealed symbols alone), and
// answers the j-th surviving candidate, padded with the unused slots.
inline GuessAlgorithm make_layered_guess_player(const LayeredBase& base,
                                                const OnlineAlgorithm& pi_alg) {
    struct State {
        bool started = false;
        int j = 1;
        std::unique_ptr<PiSimulator> sim;
    };
    auto st = std::make_shared<State>();
    return [st, base, pi_alg](const GuessHistory& h, AdviceTape& tape) -> int {
        if (!st->started) {
            st->j = static_cast<int>(tape.read_uint(ceil_log2(base.threshold1))) + 1;
            st->sim = std::make_unique<PiSimulator>(pi_alg, GameMode::preemptive);
            st->started = true;
        }
        int i = h.step - 1; // 0-based layer being fed
        std::vector<int> specials;
        for (int m = 0; m < i; ++m)
            specials.push_back(base.layer_start(m) + h.prefix[static_cast<std::size_t>(m)] - 1);
        for (int s = 0; s < base.sigma; ++s) {
            int v = base.layer_start(i) + s;
            std::uint64_t back = 0;
            for (int t = 0; t < v; ++t) {
                bool edge = base.assembled.has_edge(t, v);
                if (edge &&
                    std::find(specials.begin(), specials.end(), t) != specials.end())
                    edge = false; // planted vertices are cut from everything later
                if (edge) back |= std::uint64_t{1} << t;
            }
            st->sim->feed(back, tape);
        }
        std::vector<int> cand;
        for (int s = 0; s < base.sigma; ++s)
            if ((st->sim->surviving() >> (base.layer_start(i) + s)) & 1u) cand.push_back(s + 1);
        std::vector<int> padded = detail::padded_slots(cand, base.sigma);
        int idx = std::min(st->j, static_cast<int>(padded.size())) - 1;
        return padded[static_cast<std::size_t>(idx)];
    };
}

// ----- clique layers pipeline: preemptive independent-set algorithm -> guesser -----

// Makes the dominance normalization operational: any held vertex from an
// earlier layer that is adjacent to the arriving vertex was not designated
// (designated vertices see nothing later), so it is preempted on the spot.
inline OnlineAlgorithm normalize_clique_layer_alg(OnlineAlgorithm alg, int sigma) {
    return [alg = std::move(alg), sigma](const History& h, AdviceTape& tape) {
        Decision d = alg(h, tape);
        int layer_begin = (h.step / sigma) * sigma;
        std::set<int> preempt(d.preempt.begin(), d.preempt.end());
        for (int v = 0; v < layer_begin; ++v)
            if (((h.surviving >> v) & 1u) && h.revealed->has_edge(v, h.step)) preempt.insert(v);
        d.preempt.assign(preempt.begin(), preempt.end());
        return d;
    };
}

struct CliqueLayerOutcome {
    std::vector<int> answers; // one per non-final layer
    long long correct = 0;
    long long profit = 0;
    bool last_layer_held = false;
    Transcript transcript;
};

inline CliqueLayerOutcome run_clique_layer_reduction(const std::vector<int>& q, int sigma,
                                                     const OnlineAlgorithm& alg,
                                                     const BitString& advice) {
    LayeredInstance li = build_clique_layers(q, sigma);
    PropertySpec is = independent_set_property();
    CliqueLayerOutcome out;
    out.transcript = run_game(li.instance, normalize_clique_layer_alg(alg, sigma), is,
                              GameMode::preemptive, AdviceTape(advice), Objective::maximize);
    int nprime = li.layer_count();
    for (int i = 0; i + 1 < nprime; ++i) {
        int end_step = li.layers[static_cast<std::size_t>(i)].second - 1;
        const auto& surv = out.transcript.steps[static_cast<std::size_t>(end_step)].survivors;
        int answer = 1; // fixed fallback when the layer kept nothing
        for (int v : surv)
            if (v >= li.layers[static_cast<std::size_t>(i)].first && v <= end_step)
                answer = v - li.layers[static_cast<std::size_t>(i)].first + 1;
        out.answers.push_back(answer);
        if (answer == q[static_cast<std::size_t>(i)]) ++out.correct;
    }
    for (int v : out.transcript.final_set)
        if (v >= li.layers[static_cast<std::size_t>(nprime - 1)].first) out.last_layer_held = true;
    out.profit = out.transcript.objective.is_finite() ? out.transcript.objective.value : -1;
    return out;
}

// Reads ceil(log2 sigma) bits at each layer start and accepts that slot only.
inline OnlineAlgorithm slot_advice_algorithm(int sigma) {
    struct State {
        int target = -1;
    };
    auto st = std::make_shared<State>();
    return [st, sigma](const History& h, AdviceTape& tape) {
        int in_layer = h.step % sigma;
        if (in_layer == 0) st->target = static_cast<int>(tape.read_uint(ceil_log2(sigma)));
        return Decision{in_layer == st->target, {}};
    };
}

inline BitString slot_advice_for(const std::vector<int>& q, int sigma, int last_layer_slot = 1) {
    BitString b;
    for (int sym : q) b.append_uint(static_cast<std::uint64_t>(sym - 1), ceil_log2(sigma));
    b.append_uint(static_cast<std::uint64_t>(last_layer_slot - 1), ceil_log2(sigma));
    return b;
}

// Always proposes the first vertex of every layer.
inline OnlineAlgorithm first_slot_algorithm(int sigma) {
    return [sigma](const History& h, AdviceTape&) { return Decision{h.step % sigma == 0, {}}; };
}

// Accepts on a tape coin unless a same-layer vertex is already held.
inline OnlineAlgorithm guarded_coin_algorithm(int sigma) {
    return [sigma](const History& h, AdviceTape& tape) {
        int layer_begin = (h.step / sigma) * sigma;
        bool held_here = false;
        for (int v = layer_begin; v < h.step; ++v)
            if ((h.surviving >> v) & 1u) held_here = true;
        int coin = tape.read_bit();
        return Decision{!held_here && coin == 1, {}};
    };
}

// ----- anti layers pipeline: preemptive subgraph algorithm -> anti guesser -----

struct AntiOutcome {
    std::vector<int> raw_answers;   // smallest non-surviving slot per layer
    std::vector<int> error_indices; // positions where the raw answer matched, capped
    std::vector<int> final_answers; // raw answers with the listed positions flipped
    long long raw_cost = 0;
    long long final_cost = 0;
    BitString advice;               // enc(n) || error list || inner advice
    std::size_t header_bits = 0;
    Transcript transcript;
    long long pi_profit = 0;        // -1 when the run was poisoned
};

inline AntiOutcome run_anti_reduction(const AntiLayeredInstance& ai, const std::vector<int>& nu,
                                      const OnlineAlgorithm& pi_alg, const BitString& pi_advice,
                                      const PropertySpec& p) {
    AntiOutcome out;
    out.transcript = run_game(ai.layered.instance, pi_alg, p, GameMode::preemptive,
                              AdviceTape(pi_advice), Objective::maximize);
    int n = ai.layered.layer_count();
    int k = ai.k;
    for (int i = 0; i < n; ++i) {
        int end_step = ai.layered.layers[static_cast<std::size_t>(i)].second - 1;
        const auto& surv = out.transcript.steps[static_cast<std::size_t>(end_step)].survivors;
        std::uint64_t here = 0;
        for (int v : surv)
            if (v >= i * k && v <= end_step) here |= std::uint64_t{1} << (v - i * k);
        int w = 0;
        while (w < k && ((here >> w) & 1u)) ++w;
        if (w == k)
            throw soundness_error("anti reduction: a whole layer survived, which violates the property");
        out.raw_answers.push_back(w + 1);
        if (w + 1 == nu[static_cast<std::size_t>(i)]) ++out.raw_cost;
    }
    long long cap = static_cast<long long>(k) * ai.threshold;
    for (int i = 0; i < n && static_cast<long long>(out.error_indices.size()) < cap; ++i)
        if (out.raw_answers[static_cast<std::size_t>(i)] == nu[static_cast<std::size_t>(i)])
            out.error_indices.push_back(i);
    out.final_answers = out.raw_answers;
    for (int i : out.error_indices) {
        int& a = out.final_answers[static_cast<std::size_t>(i)];
        a = a == 1 ? 2 : 1; // lowest legal symbol different from the raw answer
    }
    out.final_cost = 0;
    for (int i = 0; i < n; ++i)
        if (out.final_answers[static_cast<std::size_t>(i)] == nu[static_cast<std::size_t>(i)])
            ++out.final_cost;

    BitString advice = encode_self_delimited(static_cast<std::uint64_t>(n));
    advice.append(encode_self_delimited(out.error_indices.size()));
    int w = ceil_log2(n);
    for (int i : out.error_indices) advice.append_uint(static_cast<std::uint64_t>(i), w);
    out.header_bits = advice.size();
    advice.append(pi_advice);
    out.advice = std::move(advice);
    out.pi_profit = out.transcript.objective.is_finite() ? out.transcript.objective.value : -1;
    return out;
}

inline GuessAlgorithm make_anti_player(const Graph& h, const RamseyCertificate& gtilde,
                                       const OnlineAlgorithm& pi_alg) {
    struct State {
        bool started = false;
        std::vector<int> errors;
        std::unique_ptr<PiSimulator> sim;
    };
    auto st = std::make_shared<State>();
    int k = h.size();
    return [st, h, gtilde, pi_alg, k](const GuessHistory& gh, AdviceTape& tape) -> int {
        if (!st->started) {
            std::uint64_t n = tape.read_self_delimited();
            if (static_cast<int>(n) != gtilde.graph.size())
                throw soundness_error("anti player: advice length header mismatch");
            std::uint64_t cnt = tape.read_self_delimited();
            int w = ceil_log2(static_cast<long long>(n));
            for (std::uint64_t t = 0; t < cnt; ++t)
                st->errors.push_back(static_cast<int>(tape.read_uint(w)));
            st->sim = std::make_unique<PiSimulator>(pi_alg, GameMode::preemptive);
            st->started = true;
        }
        int i = gh.step - 1; // 0-based layer
        for (int a = 0; a < k; ++a) {
            int v = i * k + a;
            std::uint64_t back = 0;
            for (int m = 0; m < i; ++m) {
                for (int j = 0; j < k; ++j) {
                    if (j == gh.prefix[static_cast<std::size_t>(m)] - 1) continue;
                    if (gtilde.graph.has_edge(m, i))
                        back |= std::uint64_t{1} << (m * k + j);
                }
            }
            for (int b = 0; b < a; ++b)
                if (h.has_edge(b, a)) back |= std::uint64_t{1} << (i * k + b);
            st->sim->feed(back, tape);
        }
        int w = 0;
        while (w < k && ((st->sim->surviving() >> (i * k + w)) & 1u)) ++w;
        if (w == k) throw soundness_error("anti player: a whole layer survived");
        int answer = w + 1;
        if (std::find(st->errors.begin(), st->errors.end(), i) != st->errors.end())
            answer = answer == 1 ? 2 : 1;
        return answer;
    };
}

// Accepts exactly a planted vertex set; a test-side oracle algorithm.
inline OnlineAlgorithm planted_set_algorithm(std::vector<int> vertices) {
    return [vertices = std::move(vertices)](const History& h, AdviceTape&) {
        bool in = std::find(vertices.begin(), vertices.end(), h.step) != vertices.end();
        return Decision{in, {}};
    };
}

// ----- obligatory-subgraph minimum algorithm -----
// The oracle writes enc(n) and the sorted vertices of one optimal solution in
// ceil(log2 n)-bit fields; enc(0) alone signals that no solution exists. The
// player accepts listed vertices and stops reading once its held set satisfies
// the property, so exactly |OPT| fields are consumed.

inline BitString obligatory_min_advice(const Graph& g, const PropertySpec& p,
                                       int bound = kDefaultOptBound) {
    std::optional<std::uint64_t> opt = min_property_subset(g, p, bound);
    if (!opt) return encode_self_delimited(0);
    BitString b = encode_self_delimited(static_cast<std::uint64_t>(g.size()));
    int w = ceil_log2(g.size());
    for (int v = 0; v < g.size(); ++v)
        if ((*opt >> v) & 1u) b.append_uint(static_cast<std::uint64_t>(v), w);
    return b;
}

inline OnlineAlgorithm obligatory_min_player(const PropertySpec& p) {
    struct State {
        PropertySpec prop;
        bool started = false;
        bool refusal = false;
        int n = 0;
        int next_target = -1;
        IncrementalChecker checker;
        explicit State(const PropertySpec& property) : prop(property), checker(prop) {}
    };
    auto st = std::make_shared<State>(p);
    return [st](const History& h, AdviceTape& tape) {
        if (!st->started) {
            std::uint64_t n = tape.read_self_delimited();
            st->refusal = n == 0;
            st->n = static_cast<int>(n);
            if (!st->refusal) st->next_target = static_cast<int>(tape.read_uint(ceil_log2(st->n)));
            st->started = true;
        }
        if (st->refusal) return Decision{true, {}};
        if (st->checker.satisfied() || h.step != st->next_target) return Decision{false, {}};
        std::uint64_t back = 0;
        int held_index = 0;
        for (int v = 0; v < h.step; ++v) {
            if (!((h.surviving >> v) & 1u)) continue;
            if (h.revealed->has_edge(v, h.step)) back |= std::uint64_t{1} << held_index;
            ++held_index;
        }
        st->checker = st->checker.with_vertex(back);
        if (!st->checker.satisfied())
            st->next_target = static_cast<int>(tape.read_uint(ceil_log2(st->n)));
        return Decision{true, {}};
    };
}

} // namespace oisa
