#pragma once

#include <symctrl/graph.hpp>

#include <cstdint>
#include <string>

namespace symctrl {

struct GraphModel {
    enum class Kind { Path, Cycle, ErdosRenyi, WattsStrogatz };

    Kind kind = Kind::Path;
    double p = 0.0;       // Erdos-Renyi edge probability
    std::size_t k = 0;    // Watts-Strogatz ring degree (even)
    double beta = 0.0;    // Watts-Strogatz rewiring probability

    static GraphModel path() { return {Kind::Path}; }
    static GraphModel cycle() { return {Kind::Cycle}; }
    static GraphModel erdos_renyi(double p) { return {Kind::ErdosRenyi, p}; }
    static GraphModel watts_strogatz(std::size_t k, double beta) {
        return {Kind::WattsStrogatz, 0.0, k, beta};
    }

    std::string describe() const;
};

/// Synthetic topology, a pure function of (model, n, seed). Path and cycle
/// ignore the seed. Watts-Strogatz starts from the ring lattice where each
/// vertex links to k/2 successors, then rewires each lattice edge's far
/// endpoint with probability beta, avoiding self loops and duplicates, so
/// the edge count stays n*k/2.
///
/// Throws InvalidParameter for n = 0, p or beta outside [0, 1], odd k,
/// k >= n, or a cycle on fewer than 3 vertices.
GraphSpec generate(const GraphModel& model, std::size_t n, std::uint64_t seed);

}  // namespace symctrl
