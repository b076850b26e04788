#pragma once

#include <symctrl/certify.hpp>
#include <symctrl/mod_matrix.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symctrl::cli {

/// Exit status for a search or certification that ran to its limits
/// without a definitive answer.
inline constexpr int kInconclusive = 3;

/// Thrown for bad command-line values that CLI11 itself cannot catch.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    std::uint64_t seed = 0;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t budget = 10'000'000;
    std::uint32_t trials = 32;
    std::uint64_t weight_range = std::uint64_t{1} << 20;
    std::optional<double> normalize_spectral;
    std::string format;  ///< empty: detect from name and content
};

struct GraphArgs {
    std::string input;
    Vertex node = 0;
};

struct CertifyArgs {
    GraphArgs graph;
    bool all_nodes = false;
    std::string strategy = "auto";
    std::string verify;
    std::size_t symbolic_limit = kDefaultSymbolicLimit;
};

struct SymbolicArgs {
    GraphArgs graph;
    unsigned index_base = 0;
    std::size_t limit = kDefaultSymbolicLimit;
};

struct VarietyArgs {
    SymbolicArgs symbolic;
    std::vector<std::string> grid;
    std::string csv;
};

struct GramianArgs {
    GraphArgs graph;
    std::optional<std::size_t> horizon;
    std::string csv;
};

struct SteerArgs {
    GraphArgs graph;
    std::string x0;
    std::string xf;
    std::optional<std::size_t> horizon;
    double threshold = 1e-12;
    std::string csv;
};

struct GenArgs {
    std::string model;
    std::size_t n = 0;
    double p = 0.1;
    std::size_t k = 4;
    double beta = 0.1;
    std::string out;
};

int cmd_check(const Globals& g, const GraphArgs& a);
int cmd_certify(const Globals& g, const CertifyArgs& a);
int cmd_hampath(const Globals& g, const GraphArgs& a);
int cmd_symbolic(const Globals& g, const SymbolicArgs& a);
int cmd_variety(const Globals& g, const VarietyArgs& a);
int cmd_gramian(const Globals& g, const GramianArgs& a);
int cmd_steer(const Globals& g, const SteerArgs& a);
int cmd_gen(const Globals& g, const GenArgs& a);

}  // namespace symctrl::cli
