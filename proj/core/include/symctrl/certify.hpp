#pragma once

#include <symctrl/certificate.hpp>
#include <symctrl/exact_matrix.hpp>
#include <symctrl/mod_matrix.hpp>
#include <symctrl/symbolic.hpp>

#include <cstdint>

namespace symctrl {

enum class Strategy { Auto, HamPath, Randomized, Symbolic };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view text);

struct CertifyOptions {
    std::uint64_t ham_budget = 10'000'000;
    std::uint32_t trials = 32;
    std::uint64_t weight_range = std::uint64_t{1} << 20;
    std::uint64_t seed = 0;
    std::uint64_t prime = kDefaultPrime;
    std::size_t symbolic_limit = kDefaultSymbolicLimit;
    /// Random witnesses on graphs up to this size get their determinant
    /// recomputed over Q. Beyond it the nonzero residue stands on its own.
    std::size_t exact_recheck_limit = 128;
};

/// Adjacency with unit weight on consecutive path vertices, zero elsewhere.
ExactMatrix path_adjacency(std::size_t n, const HamPath& path);

/// Certificate from a Hamiltonian path starting at the control node. Throws
/// InvalidParameter if the path is not valid for the graph and
/// CertificateViolation if the determinant is not +-1.
Certificate unit_path_certificate(const GraphSpec& graph, const HamPath& path);

/// Schwartz-Zippel bound (D / min(M, p))^trials with D = n(n-1)/2, clamped to [0, 1].
double sz_failure_bound(std::uint64_t n, std::uint64_t trials, std::uint64_t weight_range,
                        std::uint64_t prime);

/// Evaluates det C over F_p at independent uniform weights in [1, M], one per
/// edge. Trial t draws from an engine seeded with seed + t. The first nonzero
/// evaluation yields StructurallyControllable; if every trial vanishes the
/// verdict is Inconclusive with the Schwartz-Zippel failure bound. Weights in
/// the problem are ignored.
Certificate randomized_certify(const ControlProblem& problem, std::uint32_t trials,
                               std::uint64_t weight_range, std::uint64_t seed,
                               std::uint64_t prime = kDefaultPrime,
                               std::size_t exact_recheck_limit = 128);

/// End-to-end decision. Auto runs, in order: reachability from the control
/// node, Hamiltonian path with unit weights, randomized evaluation, and for
/// small n symbolic expansion (the only route to GenericallyUncontrollable
/// on a connected graph). Never throws for a valid problem.
Certificate certify(const ControlProblem& problem, Strategy strategy, const CertifyOptions& options = {});

}  // namespace symctrl
