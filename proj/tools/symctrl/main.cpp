// symctrl: structural controllability of symmetric networks from one node.

#include "commands.hpp"

#include <symctrl/errors.hpp>
#include <symctrl/report.hpp>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <iostream>

namespace {

using namespace symctrl;

void add_graph_args(CLI::App* sub, cli::GraphArgs& a) {
    sub->add_option("graph", a.input, "Graph file (edge list, adjacency CSV or Matrix Market); - for stdin")
        ->required();
    sub->add_option("-n,--node", a.node, "Control node (0-based)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural controllability of symmetric networks from a single control node", "symctrl"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    cli::Globals g;
    app.add_flag("--json", g.json, "Write the run report as JSON to stdout");
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--prime", g.prime, "Prime modulus for randomized evaluation");
    app.add_option("--budget", g.budget, "Hamiltonian path search budget (vertex placements)")
        ->check(CLI::PositiveNumber);
    app.add_option("--trials", g.trials, "Randomized evaluation trials")->check(CLI::PositiveNumber);
    app.add_option("--weight-range", g.weight_range, "Random weights are drawn from [1, M]")
        ->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
    app.add_option("--normalize-spectral", g.normalize_spectral,
                   "Scale A to spectral radius c before numeric analysis")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Graph format: edgelist, csv or mtx (default: detect)");

    cli::GraphArgs check;
    auto* check_cmd = app.add_subcommand("check", "Exact rank test of C at the given weights");
    add_graph_args(check_cmd, check);

    cli::CertifyArgs certify;
    auto* certify_cmd = app.add_subcommand("certify", "Decide structural controllability");
    add_graph_args(certify_cmd, certify.graph);
    certify_cmd->add_flag("--all-nodes", certify.all_nodes, "Certify every vertex as control node");
    certify_cmd->add_option("--strategy", certify.strategy, "auto, ham-path, randomized or symbolic")
        ->capture_default_str();
    certify_cmd->add_option("--symbolic-limit", certify.symbolic_limit, "Largest n for symbolic expansion")
        ->capture_default_str();
    certify_cmd->add_option("--verify", certify.verify, "Re-check the witnesses of a prior certify report");

    cli::GraphArgs hampath;
    auto* hampath_cmd = app.add_subcommand("hampath", "Search for a Hamiltonian path from the control node");
    add_graph_args(hampath_cmd, hampath);

    cli::SymbolicArgs symbolic;
    auto* symbolic_cmd = app.add_subcommand("symbolic", "Expand det C as a polynomial in the edge weights");
    add_graph_args(symbolic_cmd, symbolic.graph);
    symbolic_cmd->add_option("--index-base", symbolic.index_base, "Index base of variable names")
        ->check(CLI::Range(0, 1));
    symbolic_cmd->add_option("--limit", symbolic.limit, "Largest n to expand")->capture_default_str();

    cli::VarietyArgs variety;
    auto* variety_cmd = app.add_subcommand("variety", "Sample the uncontrollable variety on a grid");
    add_graph_args(variety_cmd, variety.symbolic.graph);
    variety_cmd->add_option("--index-base", variety.symbolic.index_base, "Index base of variable names")
        ->check(CLI::Range(0, 1));
    variety_cmd->add_option("--grid", variety.grid, "lo:hi:steps, once for all axes or once per edge")
        ->required();
    variety_cmd->add_option("--csv", variety.csv, "Write the grid CSV here");

    cli::GramianArgs gramian;
    auto* gramian_cmd = app.add_subcommand("gramian", "Conditioning of C and the reachability Gramian");
    add_graph_args(gramian_cmd, gramian.graph);
    gramian_cmd->add_option("--horizon", gramian.horizon, "Gramian horizon T (default n)")
        ->check(CLI::PositiveNumber);
    gramian_cmd->add_option("--csv", gramian.csv, "Write the report row as CSV here");

    cli::SteerArgs steer;
    auto* steer_cmd = app.add_subcommand("steer", "Minimum-energy input from x0 to xf");
    add_graph_args(steer_cmd, steer.graph);
    steer_cmd->add_option("--x0", steer.x0, "Initial state, comma separated (default 0)");
    steer_cmd->add_option("--xf", steer.xf, "Target state, comma separated")->required();
    steer_cmd->add_option("--horizon", steer.horizon, "Steps T (default n)")->check(CLI::PositiveNumber);
    steer_cmd->add_option("--threshold", steer.threshold, "Relative Gramian singularity threshold")
        ->capture_default_str();
    steer_cmd->add_option("--csv", steer.csv, "Write the trajectory CSV here");

    cli::GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic topology");
    gen_cmd->add_option("model", gen.model, "path, cycle, er or ws")->required();
    gen_cmd->add_option("n", gen.n, "Vertex count")->required();
    gen_cmd->add_option("--p", gen.p, "Erdos-Renyi edge probability")->capture_default_str();
    gen_cmd->add_option("--k", gen.k, "Watts-Strogatz ring degree")->capture_default_str();
    gen_cmd->add_option("--beta", gen.beta, "Watts-Strogatz rewiring probability")->capture_default_str();
    gen_cmd->add_option("-o,--out", gen.out, "Write the graph here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::kUsage;
    }

    try {
        if (*check_cmd) return cli::cmd_check(g, check);
        if (*certify_cmd) return cli::cmd_certify(g, certify);
        if (*hampath_cmd) return cli::cmd_hampath(g, hampath);
        if (*symbolic_cmd) return cli::cmd_symbolic(g, symbolic);
        if (*variety_cmd) return cli::cmd_variety(g, variety);
        if (*gramian_cmd) return cli::cmd_gramian(g, gramian);
        if (*steer_cmd) return cli::cmd_steer(g, steer);
        if (*gen_cmd) return cli::cmd_gen(g, gen);
    } catch (const cli::UsageError& e) {
        std::cerr << "symctrl: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const CertificateViolation& e) {
        std::cerr << "symctrl: internal error: " << e.what() << '\n';
        return exit_code::kInternal;
    } catch (const InputError& e) {
        std::cerr << "symctrl: " << e.what() << '\n';
        return exit_code::kInput;
    } catch (const std::exception& e) {
        std::cerr << "symctrl: internal error: " << e.what() << '\n';
        return exit_code::kInternal;
    }
    return exit_code::kUsage;
}
