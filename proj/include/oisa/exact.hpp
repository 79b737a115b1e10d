#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "errors.hpp"
#include "guessing.hpp"
#include "rational.hpp"

namespace oisa {

// Exact advice complexity for tiny instance families: deterministic strategies
// are decision trees over observation histories, advice is class selection, and
// the minimum class count is found by exhaustive partition search. At fixed n
// this is the finite reading of the tape model: interleaved reads collapse to
// an upfront choice among at most 2^b strategies.

inline constexpr int kDefaultFamilyBound = 256;
inline constexpr int kExactSearchLimit = 20; // partition search is exact up to here

struct ExactFamily {
    std::string name;
    int count = 0;
    std::function<int(int)> length;                 // steps of instance t
    std::function<int(int, int)> observe;           // seen before answering step s (1-based)
    int outputs = 2;                                // answers are 0..outputs-1
    std::function<bool(int, const std::vector<int>&)> accepts; // full output meets the target
    // With only the first `prefix` outputs fixed, could the target still be met?
    std::function<bool(int, const std::vector<int>&, int)> viable;
};

// ----- family constructors -----

inline std::vector<std::vector<int>> all_strings(int symbols, int n, int first_symbol) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), first_symbol);
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == first_symbol + symbols - 1) {
            cur[static_cast<std::size_t>(i)] = first_symbol;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

// Asymmetric guessing at target ratio c: output feasibility is y >= x bitwise
// and the zero count must reach zeros(x)/c. Outputs are the answers themselves.
inline ExactFamily make_maxasg_family(std::vector<std::vector<int>> strings, bool known_history,
                                      Rational c) {
    if (static_cast<int>(strings.size()) > kDefaultFamilyBound)
        throw resource_error("exact family above the configured bound");
    auto xs = std::make_shared<std::vector<std::vector<int>>>(std::move(strings));
    ExactFamily f;
    f.name = known_history ? "maxasg-known" : "maxasg-blind";
    f.count = static_cast<int>(xs->size());
    f.length = [xs](int t) { return static_cast<int>((*xs)[static_cast<std::size_t>(t)].size()); };
    f.observe = [xs, known_history](int t, int s) {
        if (!known_history || s <= 1) return 0;
        return (*xs)[static_cast<std::size_t>(t)][static_cast<std::size_t>(s - 2)];
    };
    f.outputs = 2;
    auto ratio_ok = [c](long long zeros_y, long long zeros_x) {
        if (c.is_infinite()) return true;
        // zeros_y >= zeros_x / c
        return Rational(zeros_y) * c >= Rational(zeros_x);
    };
    f.accepts = [xs, ratio_ok](int t, const std::vector<int>& y) {
        const auto& x = (*xs)[static_cast<std::size_t>(t)];
        long long zeros_y = 0, zeros_x = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] > y[i]) return false;
            if (y[i] == 0) ++zeros_y;
            if (x[i] == 0) ++zeros_x;
        }
        return ratio_ok(zeros_y, zeros_x);
    };
    f.viable = [xs, ratio_ok](int t, const std::vector<int>& y, int prefix) {
        const auto& x = (*xs)[static_cast<std::size_t>(t)];
        long long zeros_y = 0, zeros_x = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (static_cast<int>(i) < prefix) {
                if (x[i] > y[i]) return false;
                if (y[i] == 0) ++zeros_y;
            } else if (x[i] == 0) {
                ++zeros_y; // optimistic: every remaining zero position answered 0
            }
            if (x[i] == 0) ++zeros_x;
        }
        return ratio_ok(zeros_y, zeros_x);
    };
    return f;
}

// Classic guessing with a floor on correct answers; outputs are symbols - 1.
inline ExactFamily make_sgkh_family(int sigma, std::vector<std::vector<int>> strings,
                                    long long min_correct) {
    if (static_cast<int>(strings.size()) > kDefaultFamilyBound)
        throw resource_error("exact family above the configured bound");
    auto xs = std::make_shared<std::vector<std::vector<int>>>(std::move(strings));
    ExactFamily f;
    f.name = "sgkh";
    f.count = static_cast<int>(xs->size());
    f.length = [xs](int t) { return static_cast<int>((*xs)[static_cast<std::size_t>(t)].size()); };
    f.observe = [xs](int t, int s) {
        if (s <= 1) return static_cast<int>((*xs)[static_cast<std::size_t>(t)].size()); // x0 = n
        return (*xs)[static_cast<std::size_t>(t)][static_cast<std::size_t>(s - 2)];
    };
    f.outputs = sigma;
    f.accepts = [xs, min_correct](int t, const std::vector<int>& y) {
        const auto& x = (*xs)[static_cast<std::size_t>(t)];
        long long correct = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (y[i] + 1 == x[i]) ++correct;
        return correct >= min_correct;
    };
    f.viable = [xs, min_correct](int t, const std::vector<int>& y, int prefix) {
        const auto& x = (*xs)[static_cast<std::size_t>(t)];
        long long correct = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (static_cast<int>(i) < prefix) {
                if (y[i] + 1 == x[i]) ++correct;
            } else {
                ++correct; // optimistic
            }
        }
        return correct >= min_correct;
    };
    return f;
}

// Anti guessing with a cap on matches.
inline ExactFamily make_anti_family(int sigma, std::vector<std::vector<int>> strings,
                                    long long max_matches) {
    if (static_cast<int>(strings.size()) > kDefaultFamilyBound)
        throw resource_error("exact family above the configured bound");
    auto xs = std::make_shared<std::vector<std::vector<int>>>(std::move(strings));
    ExactFamily f;
    f.name = "anti-sgkh";
    f.count = static_cast<int>(xs->size());
    f.length = [xs](int t) { return static_cast<int>((*xs)[static_cast<std::size_t>(t)].size()); };
    f.observe = [xs](int t, int s) {
        if (s <= 1) return static_cast<int>((*xs)[static_cast<std::size_t>(t)].size());
        return (*xs)[static_cast<std::size_t>(t)][static_cast<std::size_t>(s - 2)];
    };
    f.outputs = sigma;
    f.accepts = [xs, max_matches](int t, const std::vector<int>& y) {
        const auto& x = (*xs)[static_cast<std::size_t>(t)];
        long long matches = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (y[i] + 1 == x[i]) ++matches;
        return matches <= max_matches;
    };
    f.viable = [xs, max_matches](int t, const std::vector<int>& y, int prefix) {
        const auto& x = (*xs)[static_cast<std::size_t>(t)];
        long long matches = 0;
        for (int i = 0; i < prefix; ++i)
            if (y[static_cast<std::size_t>(i)] + 1 == x[static_cast<std::size_t>(i)]) ++matches;
        return matches <= max_matches; // optimistic: no further matches
    };
    return f;
}

// Plain (non-preemptive) online subgraph games. The observation is the new
// vertex's back-edge mask into the revealed prefix; outputs are accept bits.
inline ExactFamily make_subgraph_family(std::vector<OnlineInstance> instances, PropertySpec prop,
                                        Objective objective, Rational c, int opt_bound = 25) {
    if (static_cast<int>(instances.size()) > kDefaultFamilyBound)
        throw resource_error("exact family above the configured bound");
    struct Data {
        std::vector<OnlineInstance> insts;
        PropertySpec prop;
        std::vector<long long> opt; // optimum value per instance; -1 for none (min games)
    };
    auto d = std::make_shared<Data>();
    d->insts = std::move(instances);
    d->prop = std::move(prop);
    for (const auto& inst : d->insts) {
        if (objective == Objective::maximize) {
            d->opt.push_back(popcount(max_property_subset(inst.graph, d->prop, opt_bound)));
        } else {
            auto m = min_property_subset(inst.graph, d->prop, opt_bound);
            d->opt.push_back(m ? popcount(*m) : -1);
        }
    }
    ExactFamily f;
    f.name = "subgraph";
    f.count = static_cast<int>(d->insts.size());
    f.length = [d](int t) { return d->insts[static_cast<std::size_t>(t)].graph.size(); };
    f.observe = [d](int t, int s) {
        const OnlineInstance& inst = d->insts[static_cast<std::size_t>(t)];
        int step = s - 1;
        int obs = 0;
        for (int j = 0; j < step; ++j)
            if (inst.graph.has_edge(inst.order[static_cast<std::size_t>(j)],
                                    inst.order[static_cast<std::size_t>(step)]))
                obs |= 1 << j;
        return obs;
    };
    f.outputs = 2;
    auto evaluate = [d, objective, c](int t, const std::vector<int>& y) {
        const OnlineInstance& inst = d->insts[static_cast<std::size_t>(t)];
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (y[i]) mask |= std::uint64_t{1} << inst.order[i];
        bool ok = satisfies(induced_subgraph(inst.graph, mask), d->prop);
        long long held = popcount(mask);
        long long opt = d->opt[static_cast<std::size_t>(t)];
        if (objective == Objective::maximize) {
            if (!ok) return false;
            if (c.is_infinite()) return true;
            return Rational(held) * c >= Rational(opt);
        }
        if (opt < 0) return true; // nothing satisfies; every output is vacuously fine
        if (!ok) return false;
        if (c.is_infinite()) return true;
        return Rational(held) <= Rational(opt) * c;
    };
    f.accepts = evaluate;
    f.viable = [d, objective, evaluate](int t, const std::vector<int>& y, int prefix) {
        // Optimistic completion: accept everything later (max) / follow an
        // optimal completion later (min); exact pruning is not required here.
        (void)d;
        (void)objective;
        (void)prefix;
        (void)evaluate;
        return true;
    };
    return f;
}

// ----- strategy tries and the partition search -----

struct StrategyWitness {
    // Observation-history prefix (one entry per answered step) -> output.
    std::map<std::vector<int>, int> moves;
};

namespace detail {

struct Trie {
    struct Node {
        std::vector<int> obs_path;
        std::vector<std::pair<int, int>> touches; // (instance, step answered at this node)
    };
    std::vector<Node> nodes; // breadth-first order

    static Trie build(const ExactFamily& f, const std::vector<int>& members) {
        Trie trie;
        std::map<std::vector<int>, int> index;
        int max_len = 0;
        for (int t : members) max_len = std::max(max_len, f.length(t));
        for (int depth = 1; depth <= max_len; ++depth) {
            for (int t : members) {
                if (f.length(t) < depth) continue;
                std::vector<int> path;
                for (int s = 1; s <= depth; ++s) path.push_back(f.observe(t, s));
                auto [it, fresh] = index.try_emplace(path, static_cast<int>(trie.nodes.size()));
                if (fresh) trie.nodes.push_back(Node{path, {}});
                trie.nodes[static_cast<std::size_t>(it->second)].touches.emplace_back(t, depth);
            }
        }
        return trie;
    }
};

} // namespace detail

// One output per reachable observation node such that every member instance
// meets its target, found by backtracking with per-instance viability pruning;
// nullopt certifies by exhaustion that no such strategy exists.
inline std::optional<StrategyWitness> group_feasible(const ExactFamily& f,
                                                     const std::vector<int>& members,
                                                     std::size_t node_budget = 200000) {
    detail::Trie trie = detail::Trie::build(f, members);
    if (trie.nodes.size() > node_budget)
        throw resource_error("group_feasible: observation trie above budget");

    std::vector<int> choice(trie.nodes.size(), -1);
    std::vector<std::vector<int>> outputs(static_cast<std::size_t>(f.count));
    for (int t : members) outputs[static_cast<std::size_t>(t)].assign(f.length(t), -1);

    std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
        if (idx == trie.nodes.size()) {
            for (int t : members)
                if (!f.accepts(t, outputs[static_cast<std::size_t>(t)])) return false;
            return true;
        }
        const auto& node = trie.nodes[idx];
        for (int o = 0; o < f.outputs; ++o) {
            choice[idx] = o;
            for (auto [t, step] : node.touches)
                outputs[static_cast<std::size_t>(t)][static_cast<std::size_t>(step - 1)] = o;
            bool ok = true;
            for (auto [t, step] : node.touches)
                if (!f.viable(t, outputs[static_cast<std::size_t>(t)], step)) {
                    ok = false;
                    break;
                }
            if (ok && assign(idx + 1)) return true;
        }
        choice[idx] = -1;
        for (auto [t, step] : node.touches)
            outputs[static_cast<std::size_t>(t)][static_cast<std::size_t>(step - 1)] = -1;
        return false;
    };

    if (!assign(0)) return std::nullopt;
    StrategyWitness w;
    for (std::size_t i = 0; i < trie.nodes.size(); ++i)
        w.moves[trie.nodes[i].obs_path] = choice[i];
    return w;
}

struct CoverResult {
    int m = 0;
    int bits = 0;
    std::vector<int> assignment;           // instance -> class
    std::vector<StrategyWitness> witnesses; // one per class
    bool optimal = true;
};

inline int ceil_log2_int(int m) {
    int b = 0;
    while ((1 << b) < m) ++b;
    return b;
}

enum class PartitionOrder { submask_descending, submask_ascending };

// Exact minimum partition of the family into feasible groups; branch and bound
// over subsets containing the lowest unassigned instance, with memoized group
// feasibility. The minimum is order independent; the order parameter exists so
// an independent recomputation can cross-check it.
inline CoverResult min_advice_bits(const ExactFamily& f,
                                   PartitionOrder order = PartitionOrder::submask_descending,
                                   std::size_t node_budget = 200000) {
    if (f.count > kExactSearchLimit)
        throw resource_error("min_advice_bits: family too large for the exact search");
    int n = f.count;
    std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);

    std::map<std::uint32_t, bool> feasible_memo;
    auto feasible = [&](std::uint32_t mask) {
        auto it = feasible_memo.find(mask);
        if (it != feasible_memo.end()) return it->second;
        std::vector<int> members;
        for (int t = 0; t < n; ++t)
            if ((mask >> t) & 1u) members.push_back(t);
        bool ok = group_feasible(f, members, node_budget).has_value();
        feasible_memo.emplace(mask, ok);
        return ok;
    };

    std::map<std::uint32_t, std::pair<int, std::uint32_t>> best; // remaining -> (groups, first group)
    std::function<int(std::uint32_t)> solve = [&](std::uint32_t remaining) -> int {
        if (remaining == 0) return 0;
        auto it = best.find(remaining);
        if (it != best.end()) return it->second.first;
        std::uint32_t low = remaining & (~remaining + 1);
        int best_groups = n + 1;
        std::uint32_t best_first = low;
        std::vector<std::uint32_t> subs;
        for (std::uint32_t sub = remaining;; sub = (sub - 1) & remaining) {
            if (sub & low) subs.push_back(sub);
            if (sub == 0) break;
        }
        if (order == PartitionOrder::submask_ascending) std::reverse(subs.begin(), subs.end());
        for (std::uint32_t sub : subs) {
            if (best_groups == 1) break;
            if (!feasible(sub)) continue;
            int rest = solve(remaining & ~sub);
            if (1 + rest < best_groups) {
                best_groups = 1 + rest;
                best_first = sub;
            }
        }
        best[remaining] = {best_groups, best_first};
        return best_groups;
    };

    CoverResult result;
    result.m = n == 0 ? 0 : solve(full);
    if (result.m > n)
        throw input_error("min_advice_bits: some instance cannot meet the target by itself");
    result.bits = result.m <= 1 ? 0 : ceil_log2_int(result.m);
    result.assignment.assign(static_cast<std::size_t>(n), -1);
    std::uint32_t remaining = full;
    int cls = 0;
    while (remaining) {
        std::uint32_t group = best.at(remaining).second;
        std::vector<int> members;
        for (int t = 0; t < n; ++t)
            if ((group >> t) & 1u) {
                members.push_back(t);
                result.assignment[static_cast<std::size_t>(t)] = cls;
            }
        auto w = group_feasible(f, members, node_budget);
        if (!w) throw soundness_error("min_advice_bits: chosen group lost feasibility");
        result.witnesses.push_back(std::move(*w));
        remaining &= ~group;
        ++cls;
    }
    return result;
}

// Non-increasing step curve of exact advice over a ratio grid.
inline std::vector<std::pair<Rational, int>> bits_vs_ratio_curve(
    const std::function<ExactFamily(const Rational&)>& family_at,
    const std::vector<Rational>& grid) {
    std::vector<std::pair<Rational, int>> curve;
    for (const Rational& c : grid) curve.emplace_back(c, min_advice_bits(family_at(c)).bits);
    return curve;
}

// Replays a witness as an online guesser; used to check cover soundness
// through the real game engines.
inline GuessAlgorithm witness_guesser(StrategyWitness w, bool symbols_are_one_based) {
    auto moves = std::make_shared<std::map<std::vector<int>, int>>(std::move(w.moves));
    auto path = std::make_shared<std::vector<int>>();
    return [moves, path, symbols_are_one_based](const GuessHistory& h, AdviceTape&) {
        if (h.step == 1) path->clear();
        int obs;
        if (h.blind)
            obs = 0;
        else if (h.prefix.empty())
            obs = h.announced_n > 0 ? h.announced_n : 0;
        else
            obs = h.prefix.back();
        path->push_back(obs);
        auto it = moves->find(*path);
        if (it == moves->end()) throw soundness_error("witness has no move for this history");
        return it->second + (symbols_are_one_based ? 1 : 0);
    };
}

inline nlohmann::json cover_to_json(const CoverResult& r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::json moves = nlohmann::json::array();
        for (const auto& [path, out] : w.moves)
            moves.push_back({{"obs", path}, {"out", out}});
        witnesses.push_back(moves);
    }
    return nlohmann::json{{"m", r.m},
                          {"bits", r.bits},
                          {"assignment", r.assignment},
                          {"witnesses", witnesses},
                          {"optimal", r.optimal}};
}

} // namespace oisa
