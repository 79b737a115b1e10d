#pragma once

#include <cmath>
#include <cstdint>

#include "errors.hpp"
#include "graph.hpp"

namespace oisa {

inline constexpr int kDefaultRamseyVerifyBound = 20;

// Subset size above which every induced subgraph must contain the target.
// ceil(alpha*log2(n)), floored at the target size below which the condition
// could never be met by any graph.
inline int ramsey_threshold(int n, double alpha, int target_size) {
    if (alpha <= 0) throw input_error("ramsey_threshold: alpha must be positive");
    double raw = n >= 2 ? alpha * std::log2(static_cast<double>(n)) : 0.0;
    int t = static_cast<int>(std::ceil(raw - 1e-12));
    return std::max(t, target_size);
}

// Exhaustively checks that every vertex subset of size >= threshold contains
// `target` induced. Checking size == threshold suffices: supersets inherit the
// occurrence. Vacuously true when threshold exceeds the graph order.
inline bool verify_ramsey_condition(const Graph& g, const Graph& target, int threshold) {
    if (threshold > g.size()) return true;
    bool ok = true;
    for_each_subset_of_size(g.size(), threshold, [&](std::uint64_t s) {
        if (ok && !contains_induced(induced_subgraph(g, s), target)) ok = false;
    });
    return ok;
}

// A graph together with the exhaustively checked guarantee that every subset of
// size >= threshold contains `target` as an induced subgraph.
struct RamseyCertificate {
    Graph graph;
    Graph target;
    double alpha = 0.0;
    int threshold = 0;
    bool verified = false;
    std::uint64_t seed = 0;
    int attempts = 0;
};

// Randomized search for a certificate: sample G(n,1/2) seeded and verify
// exhaustively, up to `budget` attempts. Never reports an unverified sample as
// verified; on exhausted budget the last sample is returned with verified=false
// and the caller decides.
inline RamseyCertificate ramsey_like_graph(int n, const Graph& h, double alpha,
                                           std::uint64_t seed, int budget,
                                           int verify_bound = kDefaultRamseyVerifyBound) {
    if (h.size() == 0) throw input_error("ramsey_like_graph: empty target");
    if (n < 0 || n > verify_bound)
        throw resource_error("ramsey_like_graph: n above verification bound");
    if (budget < 1) throw input_error("ramsey_like_graph: budget must be positive");

    RamseyCertificate cert;
    cert.target = h;
    cert.alpha = alpha;
    cert.threshold = ramsey_threshold(n, alpha, h.size());
    cert.seed = seed;
    for (int attempt = 1; attempt <= budget; ++attempt) {
        std::uint64_t sample_seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
        Graph g = Graph::random(n, 0.5, sample_seed);
        cert.attempts = attempt;
        if (verify_ramsey_condition(g, h, cert.threshold)) {
            cert.graph = std::move(g);
            cert.verified = true;
            return cert;
        }
        cert.graph = std::move(g);
    }
    cert.verified = false;
    return cert;
}

inline bool reverify(const RamseyCertificate& cert) {
    return verify_ramsey_condition(cert.graph, cert.target, cert.threshold);
}

} // namespace oisa
