#pragma once

#include <functional>
#include <vector>

#include "engine.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "tape.hpp"

namespace oisa {

// The three string-guessing families. sgkh / anti-sgkh strings are over
// {1..sigma} and the length is announced up front (the first request is n);
// the asymmetric variants are binary with no length announcement, and "blind"
// means the requests themselves are hidden behind dummies.
enum class GuessVariant { sgkh, anti_sgkh, maxasg_known, maxasg_blind };

struct GuessingInstance {
    int sigma = 2;
    std::vector<int> x; // symbols; {1..sigma} or {0,1} for the maxasg variants
    GuessVariant variant = GuessVariant::sgkh;

    int length() const { return static_cast<int>(x.size()); }
    bool maxasg() const {
        return variant == GuessVariant::maxasg_known || variant == GuessVariant::maxasg_blind;
    }
    bool known_history() const { return variant != GuessVariant::maxasg_blind; }
};

inline GuessingInstance make_guessing(GuessVariant variant, int sigma, std::vector<int> x) {
    GuessingInstance g;
    g.variant = variant;
    g.sigma = sigma;
    if (g.maxasg()) {
        if (sigma != 2) throw input_error("maxasg variants are binary");
        for (int s : x)
            if (s != 0 && s != 1) throw input_error("maxasg symbol outside {0,1}");
    } else {
        if (sigma < 2) throw input_error("alphabet size must be at least 2");
        for (int s : x)
            if (s < 1 || s > sigma) throw input_error("symbol outside {1..sigma}");
    }
    g.x = std::move(x);
    return g;
}

// What a guesser sees before answering position `step` (1-based): the announced
// length when the variant announces it, and the request prefix when history is
// known. Blind guessers get the step count alone.
struct GuessHistory {
    int step = 1;
    int sigma = 2;
    int announced_n = -1;             // -1 when the length is not announced
    std::vector<int> prefix;          // x_1..x_{step-1}; empty for blind
    bool blind = false;
};

using GuessAlgorithm = std::function<int(const GuessHistory&, AdviceTape&)>;

struct GuessReport {
    std::vector<int> answers;
    long long matches = 0;
    long long mismatches = 0;
    Score score;          // sgkh: mismatch cost; anti: match cost; maxasg: profit or -inf
    Rational gamma;       // matches / n, exact
    std::size_t bits_read = 0;
    bool feasible = true; // maxasg only; true elsewhere
};

inline GuessReport play_guessing(const GuessingInstance& inst, const GuessAlgorithm& alg,
                                 AdviceTape tape) {
    int n = inst.length();
    GuessReport rep;
    rep.answers.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        GuessHistory h;
        h.step = i;
        h.sigma = inst.sigma;
        h.blind = !inst.known_history();
        h.announced_n = inst.maxasg() ? -1 : n;
        if (inst.known_history())
            h.prefix.assign(inst.x.begin(), inst.x.begin() + (i - 1));
        int y = alg(h, tape);
        if (inst.maxasg()) {
            if (y != 0 && y != 1) throw protocol_error("answer outside {0,1}");
        } else if (y < 1 || y > inst.sigma) {
            throw protocol_error("answer outside {1..sigma}");
        }
        rep.answers.push_back(y);
        if (y == inst.x[static_cast<std::size_t>(i - 1)])
            ++rep.matches;
        else
            ++rep.mismatches;
    }
    rep.bits_read = tape.bits_read();
    rep.gamma = n > 0 ? Rational(rep.matches, n) : Rational(0);
    switch (inst.variant) {
        case GuessVariant::sgkh:
            rep.score = Score::finite(rep.mismatches);
            break;
        case GuessVariant::anti_sgkh:
            rep.score = Score::finite(rep.matches);
            break;
        case GuessVariant::maxasg_known:
        case GuessVariant::maxasg_blind: {
            bool feasible = true;
            long long zeros = 0;
            for (int i = 0; i < n; ++i) {
                if (inst.x[static_cast<std::size_t>(i)] > rep.answers[static_cast<std::size_t>(i)])
                    feasible = false;
                if (rep.answers[static_cast<std::size_t>(i)] == 0) ++zeros;
            }
            rep.feasible = feasible;
            rep.score = feasible ? Score::finite(zeros) : Score::neg_inf();
            break;
        }
    }
    return rep;
}

// ----- stock guessers -----

inline GuessAlgorithm constant_guesser(int symbol) {
    return [symbol](const GuessHistory&, AdviceTape&) { return symbol; };
}

// Repeats the previous request; answers `first` at the first position.
inline GuessAlgorithm echo_guesser(int first) {
    return [first](const GuessHistory& h, AdviceTape&) {
        return h.prefix.empty() ? first : h.prefix.back();
    };
}

// Reads ceil(log2 sigma) bits per position and answers that symbol (1-based).
inline GuessAlgorithm perfect_advice_guesser() {
    return [](const GuessHistory& h, AdviceTape& tape) {
        int width = 0;
        while ((1 << width) < h.sigma) ++width;
        return static_cast<int>(tape.read_uint(width)) + 1;
    };
}

inline BitString perfect_advice_for(const GuessingInstance& inst) {
    int width = 0;
    while ((1 << width) < inst.sigma) ++width;
    BitString b;
    for (int s : inst.x) b.append_uint(static_cast<std::uint64_t>(s - 1), width);
    return b;
}

// Reads one bit per position and answers it; the maxasg bitmap scheme.
inline GuessAlgorithm bit_tape_guesser() {
    return [](const GuessHistory&, AdviceTape& tape) { return tape.read_bit(); };
}

} // namespace oisa
