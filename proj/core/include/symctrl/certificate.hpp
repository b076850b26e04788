#pragma once

#include <symctrl/graph.hpp>
#include <symctrl/hamiltonian.hpp>
#include <symctrl/polynomial.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace symctrl {

enum class Verdict { StructurallyControllable, GenericallyUncontrollable, Inconclusive };

/// Which decision route produced a certificate.
enum class Method { Connectivity, HamiltonianPath, Randomized, Symbolic, None };

std::string_view to_string(Verdict verdict);
std::string_view to_string(Method method);
std::optional<Verdict> parse_verdict(std::string_view text);
std::optional<Method> parse_method(std::string_view text);

/// Path-only unit-weight realisation and its exact controllability determinant.
struct HamPathWitness {
    HamPath path;
    Rational determinant;

    bool operator==(const HamPathWitness&) const = default;
};

/// Integer weight point (canonical edge order) at which det C is nonzero.
struct RandomWitness {
    std::vector<Integer> weights;
    std::uint64_t prime = 0;
    std::uint64_t residue = 0;          ///< det C mod prime, nonzero
    std::uint64_t trial = 0;            ///< index of the successful draw
    std::optional<Rational> determinant;  ///< exact det C, when rechecked

    bool operator==(const RandomWitness&) const = default;
};

/// det C is the zero polynomial. `unreachable` lists vertices outside the
/// control node's component (their rows of C vanish identically); it is
/// empty when the zero was established by symbolic expansion.
struct SymbolicZeroWitness {
    MultiPoly phi;
    std::vector<Vertex> unreachable;

    bool operator==(const SymbolicZeroWitness&) const = default;
};

using Witness = std::variant<std::monostate, HamPathWitness, RandomWitness, SymbolicZeroWitness>;

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    Method method = Method::None;
    Vertex control_node = 0;
    Witness witness;
    /// Probability that an Inconclusive verdict hides a controllable
    /// topology; 0 for exact witnesses, 1 when nothing bounds it.
    double failure_bound = 1.0;
    std::uint64_t trials_run = 0;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    std::uint64_t weight_range = 0;
    std::optional<HamSearchResult> search;  ///< outcome of the path search, if one ran

    bool operator==(const Certificate& other) const;
};

nlohmann::json to_json(const Certificate& cert, const GraphSpec& graph);
/// Throws InvalidParameter on malformed documents.
Certificate certificate_from_json(const nlohmann::json& j);

struct VerificationResult {
    bool ok = false;
    std::string reason;
};

/// Re-checks a certificate's witness against `graph` without repeating the
/// search that produced it.
VerificationResult verify_certificate(const GraphSpec& graph, const Certificate& cert);

}  // namespace symctrl
