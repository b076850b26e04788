#include "commands.hpp"

#include <symctrl/symctrl.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace symctrl::cli {
namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

GraphFormat resolve_format(const Globals& g, const std::string& path, std::string_view content) {
    if (g.format.empty()) return detect_format(path, content);
    auto f = parse_format_name(g.format);
    if (!f) throw UsageError("unknown format '" + g.format + "'");
    return *f;
}

struct Loaded {
    GraphSpec graph;
    std::optional<WeightAssignment> weights;
    GraphSummary summary;

    const WeightAssignment* weight_ptr() const { return weights ? &*weights : nullptr; }
};

Loaded load(const Globals& g, const GraphArgs& a, RunReport& report) {
    return PhaseTimer(report).time("ingest", [&] {
        const std::string text = read_input(a.input);
        IngestResult r = ingest(text, resolve_format(g, a.input, text));
        Loaded l{std::move(r.graph), std::move(r.weights), {}};
        l.summary = summarize(l.graph, l.weight_ptr());
        report.graph = l.summary;
        return l;
    });
}

json base_params(const Globals& g) {
    json p = {{"seed", g.seed},     {"prime", g.prime},
              {"budget", g.budget}, {"trials", g.trials},
              {"weight_range", g.weight_range}};
    p["normalize_spectral"] = g.normalize_spectral ? json(*g.normalize_spectral) : json(nullptr);
    p["format"] = g.format.empty() ? json(nullptr) : json(g.format);
    return p;
}

json graph_params(const Globals& g, const GraphArgs& a) {
    json p = base_params(g);
    p["input"] = a.input;
    p["node"] = a.node;
    return p;
}

int finish(const Globals& g, const RunReport& report, int status, const std::function<void()>& human) {
    if (g.json) std::cout << report.to_json().dump(2) << '\n';
    else human();
    return status;
}

std::string fmt(double x) {
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

std::string join(const std::vector<Vertex>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

Eigen::MatrixXd real_adjacency(const Globals& g, const Loaded& l, Vertex node) {
    const WeightAssignment w = l.weights ? *l.weights : unit_weights(l.graph);
    Eigen::MatrixXd a = to_real(assemble_adjacency({l.graph, w, node}));
    if (g.normalize_spectral) a = normalize_spectral(a, *g.normalize_spectral);
    return a;
}

Eigen::VectorXd parse_vector(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        auto q = parse_rational(item);
        if (!q) throw UsageError(std::string("bad number '") + item + "' in " + what);
        values.push_back(q->get_d());
    }
    return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

GridAxis parse_axis(const std::string& text) {
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos) throw UsageError("grid axis '" + text + "' is not lo:hi:steps");
    auto lo = parse_rational(text.substr(0, a));
    auto hi = parse_rational(text.substr(a + 1, b - a - 1));
    const std::string steps = text.substr(b + 1);
    if (!lo || !hi || steps.empty() || !std::all_of(steps.begin(), steps.end(), ::isdigit))
        throw UsageError("grid axis '" + text + "' is not lo:hi:steps");
    return {*lo, *hi, std::stoul(steps)};
}

json certificate_summary(const Certificate& c) {
    return {{"node", c.control_node},
            {"verdict", to_string(c.verdict)},
            {"method", to_string(c.method)},
            {"failure_bound", c.failure_bound},
            {"trials_run", c.trials_run}};
}

int verify_prior(const Globals& g, const CertifyArgs& a) {
    RunReport report;
    report.command = "certify";
    report.params = graph_params(g, a.graph);
    report.params["verify"] = a.verify;
    const Loaded l = load(g, a.graph, report);

    json prior;
    try {
        prior = json::parse(read_input(a.verify));
    } catch (const json::parse_error& e) {
        throw InputError("'" + a.verify + "' is not JSON: " + e.what());
    }
    if (auto errors = report_schema_errors(prior); !errors.empty())
        throw InputError("'" + a.verify + "' is not a run report: " + errors.front());
    if (prior.at("command") != "certify") throw InputError("'" + a.verify + "' is not a certify report");
    if (!prior.at("graph").is_object() || prior.at("graph").at("digest") != l.summary.digest)
        throw InputError("report was produced for a different graph");

    json witnesses = prior.at("witness");
    if (!witnesses.is_array()) witnesses = json::array({witnesses});
    json checks = json::array();
    bool all_ok = true;
    PhaseTimer(report).time("verify", [&] {
        for (const auto& w : witnesses) {
            const Certificate cert = certificate_from_json(w);
            const VerificationResult v = verify_certificate(l.graph, cert);
            all_ok &= v.ok;
            checks.push_back({{"node", cert.control_node},
                              {"verdict", to_string(cert.verdict)},
                              {"ok", v.ok},
                              {"reason", v.reason}});
        }
    });
    report.result = {{"verified", all_ok}, {"checks", checks}};
    return finish(g, report, all_ok ? exit_code::kSuccess : exit_code::kNegative, [&] {
        for (const auto& c : checks)
            std::cout << "node " << c["node"] << ": " << c["verdict"].get<std::string>() << " - "
                      << (c["ok"].get<bool>() ? "verified" : "REJECTED: " + c["reason"].get<std::string>()) << '\n';
    });
}

}  // namespace

int cmd_check(const Globals& g, const GraphArgs& a) {
    RunReport report;
    report.command = "check";
    report.params = graph_params(g, a);
    const Loaded l = load(g, a, report);
    const bool assumed = !l.weights;
    const ControlProblem problem{l.graph, l.weights ? *l.weights : unit_weights(l.graph), a.node};
    problem.validate();

    const std::size_t n = l.graph.vertex_count();
    auto [rank, det] = PhaseTimer(report).time("rank", [&] {
        const ExactMatrix c = controllability_matrix(assemble_adjacency(problem), a.node);
        return std::pair{rank_exact(c), det_bareiss(c)};
    });
    const bool controllable = rank == n;
    report.result = {{"controllable", controllable},
                     {"rank", rank},
                     {"n", n},
                     {"det", format_rational(det)},
                     {"unit_weights_assumed", assumed}};
    return finish(g, report, controllable ? exit_code::kSuccess : exit_code::kNegative, [&] {
        std::cout << "controllable: " << (controllable ? "yes" : "no") << '\n'
                  << "rank C:       " << rank << " / " << n << '\n'
                  << "det C:        " << format_rational(det) << '\n';
        if (assumed) std::cout << "(no weights in input; unit weights assumed)\n";
    });
}

int cmd_certify(const Globals& g, const CertifyArgs& a) {
    const auto strategy = parse_strategy(a.strategy);
    if (!strategy) throw UsageError("unknown strategy '" + a.strategy + "'");
    if (!a.verify.empty()) return verify_prior(g, a);

    RunReport report;
    report.command = "certify";
    report.params = graph_params(g, a.graph);
    report.params["all_nodes"] = a.all_nodes;
    report.params["strategy"] = a.strategy;
    report.params["symbolic_limit"] = a.symbolic_limit;
    const Loaded l = load(g, a.graph, report);

    CertifyOptions o;
    o.ham_budget = g.budget;
    o.trials = g.trials;
    o.weight_range = g.weight_range;
    o.seed = g.seed;
    o.prime = g.prime;
    o.symbolic_limit = a.symbolic_limit;

    std::vector<Vertex> nodes;
    if (a.all_nodes)
        for (Vertex v = 0; v < l.graph.vertex_count(); ++v) nodes.push_back(v);
    else
        nodes.push_back(a.graph.node);

    std::vector<Certificate> certs;
    PhaseTimer(report).time("certify", [&] {
        for (Vertex v : nodes) certs.push_back(certify({l.graph, std::nullopt, v}, *strategy, o));
    });

    const bool all_yes = std::all_of(certs.begin(), certs.end(),
                                     [](const auto& c) { return c.verdict == Verdict::StructurallyControllable; });
    const bool any_no = std::any_of(certs.begin(), certs.end(),
                                    [](const auto& c) { return c.verdict == Verdict::GenericallyUncontrollable; });
    const Verdict overall = all_yes  ? Verdict::StructurallyControllable
                            : any_no ? Verdict::GenericallyUncontrollable
                                     : Verdict::Inconclusive;

    if (a.all_nodes) {
        json per_node = json::array();
        json witnesses = json::array();
        for (const auto& c : certs) {
            per_node.push_back(certificate_summary(c));
            witnesses.push_back(to_json(c, l.graph));
        }
        report.result = {{"verdict", to_string(overall)}, {"nodes", per_node}};
        report.witness = witnesses;
    } else {
        report.result = certificate_summary(certs.front());
        report.witness = to_json(certs.front(), l.graph);
    }

    const int status = all_yes ? exit_code::kSuccess : any_no ? exit_code::kNegative : kInconclusive;
    return finish(g, report, status, [&] {
        std::cout << std::left << std::setw(6) << "node" << std::setw(28) << "verdict" << std::setw(12) << "method"
                  << "failure bound\n";
        for (const auto& c : certs)
            std::cout << std::setw(6) << c.control_node << std::setw(28) << to_string(c.verdict) << std::setw(12)
                      << to_string(c.method) << fmt(c.failure_bound) << '\n';
        if (a.all_nodes) std::cout << "overall: " << to_string(overall) << '\n';
    });
}

int cmd_hampath(const Globals& g, const GraphArgs& a) {
    RunReport report;
    report.command = "hampath";
    report.params = graph_params(g, a);
    const Loaded l = load(g, a, report);
    const HamSearchResult r =
        PhaseTimer(report).time("search", [&] { return find_hamiltonian_path(l.graph, a.node, g.budget); });
    report.result = {{"status", to_string(r.status)}, {"expansions", r.expansions}};
    report.result["path"] = r.path ? json(r.path->vertices) : json(nullptr);

    const int status = r.status == SearchStatus::Found       ? exit_code::kSuccess
                       : r.status == SearchStatus::Exhausted ? exit_code::kNegative
                                                             : kInconclusive;
    return finish(g, report, status, [&] {
        std::cout << "status:     " << to_string(r.status) << '\n' << "expansions: " << r.expansions << '\n';
        if (r.path) std::cout << "path:       " << join(r.path->vertices) << '\n';
    });
}

int cmd_symbolic(const Globals& g, const SymbolicArgs& a) {
    RunReport report;
    report.command = "symbolic";
    report.params = graph_params(g, a.graph);
    report.params["index_base"] = a.index_base;
    report.params["limit"] = a.limit;
    const Loaded l = load(g, a.graph, report);
    const MultiPoly phi = PhaseTimer(report).time(
        "expand", [&] { return symbolic_det({l.graph, std::nullopt, a.graph.node}, a.limit); });
    const auto names = edge_variable_names(l.graph, a.index_base);
    const std::string text = phi.to_string(names);
    report.result = {{"phi", text},
                     {"identically_zero", phi.is_zero()},
                     {"total_degree", phi.total_degree()},
                     {"term_count", phi.terms().size()},
                     {"variables", names}};
    report.witness = phi.to_json(names);
    return finish(g, report, exit_code::kSuccess, [&] { std::cout << text << '\n'; });
}

int cmd_variety(const Globals& g, const VarietyArgs& a) {
    RunReport report;
    report.command = "variety";
    report.params = graph_params(g, a.symbolic.graph);
    report.params["index_base"] = a.symbolic.index_base;
    report.params["grid"] = a.grid;
    const Loaded l = load(g, a.symbolic.graph, report);
    const MultiPoly phi = PhaseTimer(report).time(
        "expand", [&] { return symbolic_det({l.graph, std::nullopt, a.symbolic.graph.node}, a.symbolic.limit); });
    const auto names = edge_variable_names(l.graph, a.symbolic.index_base);

    std::vector<GridAxis> axes;
    for (const auto& s : a.grid) axes.push_back(parse_axis(s));
    if (axes.size() == 1) axes.assign(names.size(), axes.front());
    if (axes.size() != names.size())
        throw UsageError("expected 1 or " + std::to_string(names.size()) + " grid axes, got " +
                         std::to_string(axes.size()));

    const VarietySample sample =
        PhaseTimer(report).time("sample", [&] { return variety_sample(phi, axes, names); });
    const auto on = std::count_if(sample.points.begin(), sample.points.end(),
                                  [](const auto& p) { return p.on_variety; });
    const std::string csv = to_csv(sample);
    if (!a.csv.empty()) write_file(a.csv, csv);
    report.result = {{"phi", phi.to_string(names)},
                     {"variables", names},
                     {"points", sample.points.size()},
                     {"on_variety", on}};
    report.result["csv"] = a.csv.empty() ? json(nullptr) : json(a.csv);
    return finish(g, report, exit_code::kSuccess, [&] {
        if (a.csv.empty()) std::cout << csv;
        else std::cout << on << " of " << sample.points.size() << " grid points on the variety\n";
    });
}

int cmd_gramian(const Globals& g, const GramianArgs& a) {
    RunReport report;
    report.command = "gramian";
    report.params = graph_params(g, a.graph);
    report.params["horizon"] = a.horizon ? json(*a.horizon) : json(nullptr);
    const Loaded l = load(g, a.graph, report);
    const Eigen::MatrixXd adj = real_adjacency(g, l, a.graph.node);
    const ConditionReport r =
        PhaseTimer(report).time("decompose", [&] { return condition_report(adj, a.graph.node, a.horizon); });
    if (!a.csv.empty()) write_file(a.csv, to_csv(std::span<const ConditionReport>(&r, 1)));
    report.result = {{"n", r.n},
                     {"horizon", r.horizon},
                     {"sigma_max", r.sigma_max},
                     {"sigma_min", r.sigma_min},
                     {"ratio", r.ratio},
                     {"gramian_eig_min", r.gramian_eig_min},
                     {"gramian_eig_max", r.gramian_eig_max},
                     {"unit_weights_assumed", !l.weights}};
    return finish(g, report, exit_code::kSuccess, [&] {
        std::cout << "sigma_max / sigma_min:  " << fmt(r.sigma_max) << " / " << fmt(r.sigma_min) << '\n'
                  << "ratio:                  " << fmt(r.ratio) << '\n'
                  << "Gramian eigenvalues:    [" << fmt(r.gramian_eig_min) << ", " << fmt(r.gramian_eig_max)
                  << "] over " << r.horizon << " steps\n";
    });
}

int cmd_steer(const Globals& g, const SteerArgs& a) {
    RunReport report;
    report.command = "steer";
    report.params = graph_params(g, a.graph);
    report.params["x0"] = a.x0;
    report.params["xf"] = a.xf;
    report.params["horizon"] = a.horizon ? json(*a.horizon) : json(nullptr);
    report.params["threshold"] = a.threshold;
    const Loaded l = load(g, a.graph, report);
    const Eigen::MatrixXd adj = real_adjacency(g, l, a.graph.node);
    const auto n = adj.rows();
    const Eigen::VectorXd x0 = a.x0.empty() ? Eigen::VectorXd::Zero(n) : parse_vector(a.x0, "--x0");
    const Eigen::VectorXd xf = parse_vector(a.xf, "--xf");
    const std::size_t horizon = a.horizon.value_or(static_cast<std::size_t>(n));

    try {
        const ControlPlan plan = PhaseTimer(report).time(
            "solve", [&] { return min_energy_control(adj, a.graph.node, x0, xf, horizon, a.threshold); });
        const double error = (plan.terminal - xf).norm() / std::max(1.0, xf.norm());
        if (!a.csv.empty()) write_file(a.csv, to_csv(simulate(adj, a.graph.node, x0, plan.inputs)));
        report.result = {{"reachable", true},
                         {"horizon", plan.horizon},
                         {"inputs", plan.inputs},
                         {"energy", plan.energy},
                         {"terminal", to_std(plan.terminal)},
                         {"terminal_relative_error", error}};
        return finish(g, report, exit_code::kSuccess, [&] {
            std::cout << "inputs: ";
            for (double u : plan.inputs) std::cout << fmt(u) << ' ';
            std::cout << "\nenergy: " << fmt(plan.energy) << "\nterminal relative error: " << fmt(error) << '\n';
        });
    } catch (const GramianSingular& e) {
        report.result = {{"reachable", false},
                         {"horizon", horizon},
                         {"gramian_eig_min", e.eig_min()},
                         {"gramian_eig_max", e.eig_max()},
                         {"direction", to_std(e.direction())}};
        std::cerr << "symctrl: " << e.what() << '\n';
        return finish(g, report, exit_code::kNegative, [] {});
    }
}

int cmd_gen(const Globals& g, const GenArgs& a) {
    RunReport report;
    report.command = "gen";
    report.params = base_params(g);
    report.params.update({{"model", a.model}, {"n", a.n}, {"p", a.p}, {"k", a.k}, {"beta", a.beta}});
    GraphModel model;
    if (a.model == "path") model = GraphModel::path();
    else if (a.model == "cycle") model = GraphModel::cycle();
    else if (a.model == "er" || a.model == "erdos-renyi") model = GraphModel::erdos_renyi(a.p);
    else if (a.model == "ws" || a.model == "watts-strogatz") model = GraphModel::watts_strogatz(a.k, a.beta);
    else throw UsageError("unknown model '" + a.model + "' (path, cycle, er, ws)");

    GraphFormat format = GraphFormat::EdgeList;
    if (!g.format.empty()) {
        auto f = parse_format_name(g.format);
        if (!f) throw UsageError("unknown format '" + g.format + "'");
        format = *f;
    }
    const GraphSpec graph = PhaseTimer(report).time("generate", [&] { return generate(model, a.n, g.seed); });
    const std::string text = emit(graph, nullptr, format);
    if (!a.out.empty()) write_file(a.out, text);
    report.graph = summarize(graph, nullptr);
    report.result = {{"model", model.describe()}, {"n", graph.vertex_count()}, {"edge_count", graph.edge_count()}};
    report.result["output"] = a.out.empty() ? json(nullptr) : json(a.out);
    if (a.out.empty()) report.result["text"] = text;
    return finish(g, report, exit_code::kSuccess, [&] {
        if (a.out.empty()) std::cout << text;
        else std::cout << "wrote " << graph.edge_count() << " edges on " << graph.vertex_count() << " vertices to "
                       << a.out << '\n';
    });
}

}  // namespace symctrl::cli
