#pragma once

#include <symctrl/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symctrl {

struct HamPath {
    std::vector<Vertex> vertices;

    bool operator==(const HamPath&) const = default;
};

/// Empty string when `path` visits every vertex of `graph` exactly once
/// along edges (starting at `start`, if given); otherwise the first problem.
std::string check_path(const GraphSpec& graph, const HamPath& path,
                       std::optional<Vertex> start = std::nullopt);

enum class SearchStatus {
    Found,
    Exhausted,        ///< search space exhausted: no path exists from start
    BudgetExhausted,  ///< stopped early; a path may still exist
};

std::string_view to_string(SearchStatus status);

struct HamSearchResult {
    std::optional<HamPath> path;
    SearchStatus status = SearchStatus::Exhausted;
    std::uint64_t expansions = 0;
};

/// Backtracking search for a Hamiltonian path beginning at `start`.
///
/// Candidates are tried fewest-unvisited-neighbours first. After every step
/// the residual graph is pruned: each unvisited vertex needs a neighbour
/// among the unvisited vertices or the current endpoint, at most one of them
/// may be a forced path end, all of them must be reachable from the
/// endpoint, and their block-cut tree (with the endpoint) must be a chain
/// starting at the endpoint's block.
///
/// The first run breaks degree ties by lowest index. If it stalls, the
/// search restarts with fixed pseudo-random tie-breaking and run lengths
/// following the Luby sequence, so the result is deterministic. Any run
/// that exhausts its tree proves absence. `budget` bounds the number of
/// vertices placed on the path summed over all runs; since run lengths are
/// unbounded, an unbounded budget keeps the search complete.
HamSearchResult find_hamiltonian_path(const GraphSpec& graph, Vertex start, std::uint64_t budget);

}  // namespace symctrl
