#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "optima.hpp"
#include "property.hpp"
#include "ramsey.hpp"

namespace oisa {

// Construction fixtures are a pair of files: the instance in graph text format
// and a JSON sidecar carrying the construction id, its parameters, and every
// certificate it rests on. `verify_fixture` re-derives each sidecar claim from
// scratch, so a fixture is never trusted, only checked.

inline nlohmann::json certificate_to_json(const RamseyCertificate& c) {
    return nlohmann::json{{"graph", graph_to_text(c.graph)},
                          {"target", graph_to_text(c.target)},
                          {"alpha", c.alpha},
                          {"threshold", c.threshold},
                          {"verified", c.verified},
                          {"seed", c.seed},
                          {"attempts", c.attempts}};
}

inline RamseyCertificate certificate_from_json(const nlohmann::json& j) {
    RamseyCertificate c;
    c.graph = parse_graph_text(j.at("graph").get<std::string>());
    c.target = parse_graph_text(j.at("target").get<std::string>());
    c.alpha = j.at("alpha").get<double>();
    c.threshold = j.at("threshold").get<int>();
    c.verified = j.at("verified").get<bool>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.attempts = j.at("attempts").get<int>();
    return c;
}

struct Fixture {
    OnlineInstance instance;
    nlohmann::json sidecar;
};

inline nlohmann::json layered_sidecar(const LayeredInstance& li) {
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : li.certificates) certs.push_back(certificate_to_json(c));
    nlohmann::json specials = nlohmann::json::array();
    for (int s : li.special) specials.push_back(s < 0 ? 0 : s + 1);
    return nlohmann::json{{"construction", li.construction},
                          {"params", li.params},
                          {"certificates", certs},
                          {"special_vertices", specials}};
}

inline nlohmann::json masked_sidecar(const MaskedInstance& mi, const std::vector<int>& bits,
                                     const std::string& property) {
    std::string nu;
    for (int b : bits) nu.push_back(b ? '1' : '0');
    return nlohmann::json{
        {"construction", "thm5"},
        {"params",
         {{"n", mi.instance.graph.size()},
          {"nu", nu},
          {"threshold", mi.threshold},
          {"property", property},
          {"orientation",
           mi.orientation == SatisfiedFamily::independent_sets ? "independent" : "clique"}}},
        {"certificates", nlohmann::json::array({certificate_to_json(mi.base)})},
        {"special_vertices", nlohmann::json::array()}};
}

// ----- re-verification, one routine per construction id -----

namespace detail {

inline void require(bool cond, const std::string& why) {
    if (!cond) throw soundness_error("verify: " + why);
}

inline void verify_thm5_fixture(const Graph& g, const nlohmann::json& sidecar) {
    const auto& params = sidecar.at("params");
    RamseyCertificate base = certificate_from_json(sidecar.at("certificates").at(0));
    require(base.verified, "thm5 base certificate is marked unverified");
    require(reverify(base), "thm5 base certificate fails re-verification");
    std::string nu = params.at("nu").get<std::string>();
    std::vector<int> bits;
    for (char c : nu) bits.push_back(c == '1' ? 1 : 0);
    SatisfiedFamily orientation = params.at("orientation") == "independent"
                                      ? SatisfiedFamily::independent_sets
                                      : SatisfiedFamily::cliques;
    MaskedInstance rebuilt = build_masked_instance(bits, base, orientation);
    require(rebuilt.instance.graph == g, "thm5 instance does not match its parameters");
    require(rebuilt.threshold == params.at("threshold").get<int>(), "thm5 threshold mismatch");
    PropertySpec p = property_by_name(params.at("property").get<std::string>());
    verify_masked_instance(rebuilt, p);
}

inline void verify_thm8_fixture(const Graph& g, const nlohmann::json& sidecar) {
    const auto& params = sidecar.at("params");
    RamseyCertificate layer_cert = certificate_from_json(sidecar.at("certificates").at(0));
    require(layer_cert.verified, "thm8 layer certificate is marked unverified");
    require(reverify(layer_cert), "thm8 layer certificate fails re-verification");

    int sigma = params.at("sigma").get<int>();
    int nprime = params.at("nprime").get<int>();
    Graph cross = parse_graph_text(params.at("cross_graph").get<std::string>());
    Graph target = parse_graph_text(params.at("target").get<std::string>());
    int threshold2 = params.at("threshold2").get<int>();
    require(verify_transversal_condition(cross, nprime, sigma, target, threshold2),
            "thm8 cross graph fails the transversal condition");

    LayeredBase base;
    base.sigma = sigma;
    base.nprime = nprime;
    base.h = target;
    base.kappa1 = params.at("kappa1").get<double>();
    base.kappa2 = params.at("kappa2").get<double>();
    base.layer_cert = layer_cert;
    base.threshold1 = params.at("threshold1").get<int>();
    base.threshold2 = threshold2;
    base.cross = cross;
    base.cross_verified = true;
    base.assembled = cross;
    for (int layer = 0; layer < nprime; ++layer)
        for (int a = 0; a < sigma; ++a)
            for (int b = a + 1; b < sigma; ++b)
                if (layer_cert.graph.has_edge(a, b))
                    base.assembled.add_edge(layer * sigma + a, layer * sigma + b);
    require(verify_transversal_condition(base.assembled, nprime, sigma, target, threshold2),
            "thm8 assembled graph fails the transversal condition");

    std::vector<int> q = params.at("q").get<std::vector<int>>();
    LayeredInstance rebuilt = embed_guess_string(base, q);
    require(rebuilt.instance.graph == g, "thm8 instance does not match its parameters");

    // Planted vertices see nothing later; together with any last-layer vertex
    // they form an independent set of the full layer count.
    for (int i = 0; i + 1 < nprime; ++i) {
        int s = rebuilt.special[static_cast<std::size_t>(i)];
        for (int w = (i + 1) * sigma; w < g.size(); ++w)
            require(!g.has_edge(s, w), "thm8 planted vertex kept a later edge");
    }

    PropertySpec p = params.contains("property")
                         ? property_by_name(params.at("property").get<std::string>())
                         : independent_set_property();
    long long opt = popcount(max_property_subset(g, p));
    double K = base.kappa1 * base.kappa2 * std::log2(static_cast<double>(sigma)) *
               std::log2(static_cast<double>(g.size()));
    require(opt >= nprime, "thm8 optimum below the layer count");
    require(static_cast<double>(opt) <= nprime + K + 1e-9, "thm8 optimum above the slack window");

    // Per-layer optimum stays below the layer threshold.
    for (int i = 0; i < nprime; ++i) {
        std::uint64_t lm = 0;
        for (int s = 0; s < sigma; ++s) lm |= std::uint64_t{1} << (i * sigma + s);
        long long layer_opt = popcount(max_property_subset(induced_subgraph(g, lm), p));
        require(layer_opt < base.threshold1, "thm8 layer optimum reaches the threshold");
    }
}

inline void verify_clique_layers_fixture(const Graph& g, const nlohmann::json& sidecar) {
    const auto& params = sidecar.at("params");
    int sigma = params.at("sigma").get<int>();
    std::vector<int> q = params.at("q").get<std::vector<int>>();
    LayeredInstance rebuilt = build_clique_layers(q, sigma);
    require(rebuilt.instance.graph == g, "clique-layers instance does not match its parameters");
    int nprime = rebuilt.layer_count();
    for (int i = 0; i < nprime; ++i)
        for (int a = i * sigma; a < (i + 1) * sigma; ++a)
            for (int b = a + 1; b < (i + 1) * sigma; ++b)
                require(g.has_edge(a, b), "clique-layers layer is not a clique");
    for (int i = 0; i + 1 < nprime; ++i) {
        int designated = rebuilt.special[static_cast<std::size_t>(i)];
        for (int v = i * sigma; v < (i + 1) * sigma; ++v)
            for (int w = (i + 1) * sigma; w < g.size(); ++w)
                require(g.has_edge(v, w) == (v != designated),
                        "clique-layers cross edges disagree with the designation rule");
    }
    long long opt = popcount(max_property_subset(g, independent_set_property()));
    require(opt == nprime, "clique-layers optimum is not the layer count");
}

inline void verify_thm10_fixture(const Graph& g, const nlohmann::json& sidecar) {
    const auto& params = sidecar.at("params");
    RamseyCertificate base = certificate_from_json(sidecar.at("certificates").at(0));
    require(base.verified, "thm10 base certificate is marked unverified");
    require(reverify(base), "thm10 base certificate fails re-verification");
    std::vector<int> nu = params.at("nu").get<std::vector<int>>();
    AntiLayeredInstance rebuilt = build_anti_layers(nu, base.target, base);
    require(rebuilt.layered.instance.graph == g, "thm10 instance does not match its parameters");
    PropertySpec p = params.contains("property")
                         ? property_by_name(params.at("property").get<std::string>())
                         : independent_set_property();
    verify_anti_layers(rebuilt, p);
}

} // namespace detail

inline void verify_fixture(const Graph& g, const nlohmann::json& sidecar) {
    std::string kind = sidecar.at("construction").get<std::string>();
    if (kind == "thm5")
        detail::verify_thm5_fixture(g, sidecar);
    else if (kind == "thm8")
        detail::verify_thm8_fixture(g, sidecar);
    else if (kind == "clique-layers")
        detail::verify_clique_layers_fixture(g, sidecar);
    else if (kind == "thm10")
        detail::verify_thm10_fixture(g, sidecar);
    else
        throw input_error("unknown construction id: " + kind);
}

} // namespace oisa
