#include "symctrl/report.hpp"

#include "symctrl/graph_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace symctrl {

std::string graph_digest(const GraphSpec& graph, const WeightAssignment* weights) {
    const std::string canonical = emit(graph, weights, GraphFormat::EdgeList);
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(canonical.data(), canonical.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[md[i] >> 4]);
        out.push_back(kHex[md[i] & 0xf]);
    }
    return out;
}

GraphSummary summarize(const GraphSpec& graph, const WeightAssignment* weights) {
    return {graph.vertex_count(), graph.edge_count(), graph_digest(graph, weights)};
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& [phase, ms] : timings_ms) timings[phase] = ms;
    nlohmann::json g = nullptr;
    if (graph) g = {{"n", graph->n}, {"edge_count", graph->edge_count}, {"digest", graph->digest}};
    return {{"version", kVersion}, {"command", command}, {"params", params},   {"graph", std::move(g)},
            {"result", result},   {"witness", witness}, {"timings_ms", std::move(timings)}};
}

std::vector<std::string> report_schema_errors(const nlohmann::json& r) {
    std::vector<std::string> errors;
    if (!r.is_object()) return {"report is not an object"};
    auto require = [&](const char* key, auto predicate, const char* type) {
        if (!r.contains(key)) errors.push_back(std::string("missing field '") + key + "'");
        else if (!predicate(r.at(key))) errors.push_back(std::string("field '") + key + "' is not " + type);
    };
    require("version", [](const auto& j) { return j.is_string(); }, "a string");
    require("command", [](const auto& j) { return j.is_string(); }, "a string");
    require("params", [](const auto& j) { return j.is_object(); }, "an object");
    require("graph", [](const auto& j) { return j.is_object() || j.is_null(); }, "an object or null");
    require("result", [](const auto& j) { return j.is_object(); }, "an object");
    require("witness", [](const auto& j) { return j.is_object() || j.is_array() || j.is_null(); },
            "an object, array or null");
    require("timings_ms", [](const auto& j) { return j.is_object(); }, "an object");

    if (r.contains("graph") && r.at("graph").is_object()) {
        const auto& g = r.at("graph");
        if (!g.contains("n") || !g.at("n").is_number_unsigned()) errors.push_back("graph.n must be a non-negative integer");
        if (!g.contains("edge_count") || !g.at("edge_count").is_number_unsigned())
            errors.push_back("graph.edge_count must be a non-negative integer");
        if (!g.contains("digest") || !g.at("digest").is_string() || g.at("digest").get<std::string>().size() != 64)
            errors.push_back("graph.digest must be a 64-character hex string");
    }
    if (r.contains("timings_ms") && r.at("timings_ms").is_object())
        for (const auto& [phase, ms] : r.at("timings_ms").items())
            if (!ms.is_number() || ms.get<double>() < 0) errors.push_back("timing '" + phase + "' is not a non-negative number");
    if (r.contains("result") && r.at("result").is_object() && r.at("result").contains("verdict")) {
        const auto& v = r.at("result").at("verdict");
        if (!v.is_string() || (v != "StructurallyControllable" && v != "GenericallyUncontrollable" &&
                               v != "Inconclusive"))
            errors.push_back("result.verdict has an unknown value");
    }
    return errors;
}

}  // namespace symctrl
