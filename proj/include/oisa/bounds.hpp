#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace oisa {

// Closed-form advice bounds. Conventions adopted throughout: 0*log(0) := 0 and
// 0^0 := 1, the standard continuity completions; every O(.) term is carried as
// text and never folded into a number.

struct BoundReport {
    std::string formula;
    std::vector<std::pair<std::string, double>> params;
    double value_bits = 0.0;
    std::string o_term;   // symbolic, e.g. "-O(log n)"
    bool applicable = true;
    std::string note;
};

inline double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log2(x); }

// sigma-ary entropy: h_s(x) = x log_s(s-1) - x log_s x - (1-x) log_s(1-x).
inline double entropy_h(double sigma, double x) {
    if (sigma < 2.0) throw input_error("entropy_h: sigma must be at least 2");
    if (x < 0.0 || x > 1.0) throw input_error("entropy_h: x outside [0,1]");
    double log2s = std::log2(sigma);
    return (x * std::log2(sigma - 1.0) - xlogx(x) - xlogx(1.0 - x)) / log2s;
}

// Per-symbol information factor for guessing a gamma fraction correctly:
// F(s,g) = 1 + (1-g) log_s((1-g)/(s-1)) + g log_s g, defined on [1/s, 1].
inline double sgkh_rate(double sigma, double gamma) {
    if (sigma < 2.0) throw input_error("sgkh_rate: sigma must be at least 2");
    if (gamma < 1.0 / sigma - 1e-12 || gamma > 1.0 + 1e-12)
        throw input_error("sgkh_rate: gamma outside [1/sigma, 1]");
    gamma = std::min(gamma, 1.0);
    double log2s = std::log2(sigma);
    double one_minus = 1.0 - gamma;
    double term1 = one_minus == 0.0 ? 0.0 : one_minus * std::log2(one_minus / (sigma - 1.0)) / log2s;
    double term2 = xlogx(gamma) / log2s;
    return 1.0 + term1 + term2;
}

// Advice needed to guess gamma*n positions of a length-n string over {1..sigma}.
inline BoundReport sgkh_bound(double sigma, double gamma, double n) {
    BoundReport r;
    r.formula = "sgkh";
    r.params = {{"sigma", sigma}, {"gamma", gamma}, {"n", n}};
    r.value_bits = sgkh_rate(sigma, gamma) * n * std::log2(sigma);
    return r;
}

// Advice needed by a c-competitive anti-guesser: (1 - h_s(1/c)) n log2 s,
// for 1 <= c < sigma/(sigma-1).
inline BoundReport anti_bound(double sigma, double c, double n) {
    if (sigma < 2.0) throw input_error("anti_bound: sigma must be at least 2");
    if (c < 1.0 || c >= sigma / (sigma - 1.0))
        throw input_error("anti_bound: c outside [1, sigma/(sigma-1))");
    BoundReport r;
    r.formula = "anti";
    r.params = {{"sigma", sigma}, {"c", c}, {"n", n}};
    r.value_bits = (1.0 - entropy_h(sigma, 1.0 / c)) * n * std::log2(sigma);
    return r;
}

// Per-position advice rate for c-competitive asymmetric string guessing:
// B_c = log2(1 + (c-1)^(c-1) / c^c); B_1 = 1 via the 0^0 convention.
inline double asg_rate(double c) {
    if (c < 1.0) throw input_error("asg_rate: c must be at least 1");
    double t = std::pow(c - 1.0, c - 1.0) / std::pow(c, c); // pow(0,0) == 1
    return std::log2(1.0 + t);
}

struct AsgBoundPair {
    double rate = 0.0;
    BoundReport lower;
    BoundReport upper;
};

inline AsgBoundPair maxasg_bounds(double c, double n) {
    if (c < 1.0 || c > n) throw input_error("maxasg_bounds: need 1 <= c <= n");
    AsgBoundPair out;
    out.rate = asg_rate(c);
    out.lower.formula = "maxasg-lower";
    out.lower.params = {{"c", c}, {"n", n}};
    out.lower.value_bits = out.rate * n;
    out.lower.o_term = "-O(log n)";
    out.upper = out.lower;
    out.upper.formula = "maxasg-upper";
    out.upper.o_term = "+O(log n)";
    return out;
}

// Intermediate quantities of the preemptive layered-guessing reduction for
// given c, kappa1, kappa2 and input length n: the alphabet sigma, layer count
// n', the slack K, the guaranteed correct fraction alpha with its two-sided
// window, and the resulting advice figure. Outside the validity window the
// report is marked not applicable rather than clamped.
struct LayeredReductionFigures {
    double sigma = 0.0;
    double nprime = 0.0;
    double K = 0.0;
    double alpha = 0.0;
    double alpha_lo = 0.0;
    double alpha_hi = 0.0;
    double bits = 0.0;
    bool applicable = true;
    std::string note;
};

inline LayeredReductionFigures layered_reduction_figures(double c, double n, double kappa1,
                                                         double kappa2 = 1.0) {
    if (c < 2.0) throw input_error("layered_reduction_figures: c must be at least 2");
    if (kappa1 < 1.0) throw input_error("layered_reduction_figures: kappa1 must be at least 1");
    LayeredReductionFigures f;
    f.sigma = 4.0 * c * kappa1 * std::log2(4.0 * c * kappa1);
    f.nprime = n / f.sigma;
    double log2s = std::log2(f.sigma);
    f.K = kappa1 * kappa2 * log2s * std::log2(n);
    f.alpha_lo = 1.0 / (2.0 * c * kappa1 * log2s);
    f.alpha_hi = 1.0 / (c * kappa1 * log2s);
    f.alpha = (f.nprime - c * f.K) / (c * kappa1 * log2s * (f.nprime - 1.0));
    if (f.nprime < 2.0 * c * f.K - 1.0) {
        f.applicable = false;
        f.note = "window n' >= 2cK-1 violated";
        return f;
    }
    if (f.nprime <= 1.0) {
        f.applicable = false;
        f.note = "fewer than two layers";
        return f;
    }
    if (f.alpha < 1.0 / f.sigma) {
        f.applicable = false;
        f.note = "alpha below 1/sigma";
        return f;
    }
    f.bits = sgkh_rate(f.sigma, f.alpha) * (f.nprime - 1.0) * log2s;
    return f;
}

// Advice needed by a c-competitive preemptive independent-set algorithm:
// 0.01 * log2(2c) / (2c^2) * (n - 2c), for 8 <= c <= (1+sqrt(1+4n))/4.
inline BoundReport indset_preemption_bound(double c, double n) {
    if (c < 8.0 || c > (1.0 + std::sqrt(1.0 + 4.0 * n)) / 4.0)
        throw input_error("indset_preemption_bound: c outside [8, (1+sqrt(1+4n))/4]");
    BoundReport r;
    r.formula = "indset-preemption";
    r.params = {{"c", c}, {"n", n}};
    r.value_bits = 0.01 * std::log2(2.0 * c) / (2.0 * c * c) * (n - 2.0 * c);
    return r;
}

// Correct-guess fraction forced by ratio c on n' clique layers:
// alpha = (n' - c) / (c n' - c), exact, for 1 <= c < (n'+1)/2.
inline Rational clique_layers_alpha(const Rational& c, long long nprime) {
    if (c.is_infinite()) throw input_error("clique_layers_alpha: c must be finite");
    Rational lo(1);
    Rational hi(nprime + 1, 2);
    if (c < lo || !(c < hi)) throw input_error("clique_layers_alpha: c outside [1, (n'+1)/2)");
    // (n' - p/q) / ((p/q) n' - p/q) = (q n' - p) / (p n' - p)
    return Rational(c.den * nprime - c.num, c.num * nprime - c.num);
}

// Envelope term of the same analysis: h(c) = (2 + ln2 * log2(2c)) / (2 ln2 (c-1)).
inline double clique_layers_overhead(double c) {
    if (c <= 1.0) throw input_error("clique_layers_overhead: c must exceed 1");
    constexpr double ln2 = 0.6931471805599453;
    return (2.0 + ln2 * std::log2(2.0 * c)) / (2.0 * ln2 * (c - 1.0));
}

// Advice needed by a c-competitive preemptive algorithm when the smallest
// forbidden subgraph has k vertices: (1 - h_k(1/c)) n log2(k)/k, minus an
// O(log^2 n) term carried symbolically; defined for 1 < c < k/(k-1).
inline BoundReport preemptive_anti_bound(double k, double c, double n) {
    if (k < 2.0) throw input_error("preemptive_anti_bound: k must be at least 2");
    if (c <= 1.0 || c >= k / (k - 1.0))
        throw input_error("preemptive_anti_bound: c outside (1, k/(k-1))");
    BoundReport r;
    r.formula = "preemptive-anti";
    r.params = {{"k", k}, {"c", c}, {"n", n}};
    r.value_bits = (1.0 - entropy_h(k, 1.0 / c)) * n * std::log2(k) / k;
    r.o_term = "-O(log^2 n)";
    return r;
}

} // namespace oisa
