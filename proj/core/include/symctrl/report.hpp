#pragma once

#include <symctrl/graph.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symctrl {

inline constexpr std::string_view kVersion = "0.1.0";

/// Process exit statuses shared by every command.
namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kError = 1;
inline constexpr int kNegative = 2;
inline constexpr int kUsage = 64;
inline constexpr int kInput = 65;
inline constexpr int kInternal = 70;
}  // namespace exit_code

/// Lowercase hex SHA-256 of the canonical edge-list emission, so the same
/// weighted graph read from any format hashes identically.
std::string graph_digest(const GraphSpec& graph, const WeightAssignment* weights);

struct GraphSummary {
    std::size_t n = 0;
    std::size_t edge_count = 0;
    std::string digest;
};

GraphSummary summarize(const GraphSpec& graph, const WeightAssignment* weights);

struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::optional<GraphSummary> graph;
    nlohmann::json result = nlohmann::json::object();
    nlohmann::json witness = nullptr;
    std::vector<std::pair<std::string, double>> timings_ms;

    nlohmann::json to_json() const;
};

/// Collects wall-clock durations of named phases into a report.
class PhaseTimer {
public:
    explicit PhaseTimer(RunReport& report) : report_(report) {}

    template <typename F>
    decltype(auto) time(std::string phase, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        struct Record {
            RunReport& report;
            std::string phase;
            std::chrono::steady_clock::time_point start;
            ~Record() {
                const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
                report.timings_ms.emplace_back(std::move(phase), d.count());
            }
        } record{report_, std::move(phase), start};
        return f();
    }

private:
    RunReport& report_;
};

/// Structural check of a report document against the published schema
/// (docs/run_report.schema.json). Returns one message per violation.
std::vector<std::string> report_schema_errors(const nlohmann::json& report);

}  // namespace symctrl
