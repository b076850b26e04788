#include "symctrl/certificate.hpp"

#include "symctrl/certify.hpp"
#include "symctrl/errors.hpp"
#include "symctrl/exact_matrix.hpp"
#include "symctrl/mod_matrix.hpp"
#include "symctrl/symbolic.hpp"

#include <algorithm>

namespace symctrl {

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::StructurallyControllable: return "StructurallyControllable";
        case Verdict::GenericallyUncontrollable: return "GenericallyUncontrollable";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Connectivity: return "connectivity";
        case Method::HamiltonianPath: return "ham-path";
        case Method::Randomized: return "randomized";
        case Method::Symbolic: return "symbolic";
        case Method::None: return "none";
    }
    return "none";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
    for (auto v : {Verdict::StructurallyControllable, Verdict::GenericallyUncontrollable, Verdict::Inconclusive})
        if (to_string(v) == text) return v;
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view text) {
    for (auto m : {Method::Connectivity, Method::HamiltonianPath, Method::Randomized, Method::Symbolic,
                   Method::None})
        if (to_string(m) == text) return m;
    return std::nullopt;
}

bool Certificate::operator==(const Certificate& o) const {
    auto same_search = [](const std::optional<HamSearchResult>& a, const std::optional<HamSearchResult>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        return a->path == b->path && a->status == b->status && a->expansions == b->expansions;
    };
    return verdict == o.verdict && method == o.method && control_node == o.control_node &&
           witness == o.witness && failure_bound == o.failure_bound && trials_run == o.trials_run &&
           seed == o.seed && prime == o.prime && weight_range == o.weight_range &&
           same_search(search, o.search);
}

namespace {

using nlohmann::json;

json witness_json(const Witness& w, const GraphSpec& graph) {
    return std::visit(
        [&](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, HamPathWitness>) {
                return {{"kind", "ham-path"}, {"path", x.path.vertices},
                        {"determinant", format_rational(x.determinant)}};
            } else if constexpr (std::is_same_v<T, RandomWitness>) {
                json weights = json::array();
                for (const auto& z : x.weights) weights.push_back(z.get_str());
                return {{"kind", "random"},
                        {"weights", std::move(weights)},
                        {"prime", x.prime},
                        {"residue", x.residue},
                        {"trial", x.trial},
                        {"determinant", x.determinant ? json(format_rational(*x.determinant)) : json(nullptr)}};
            } else {
                return {{"kind", "symbolic-zero"},
                        {"phi", x.phi.to_json(edge_variable_names(graph))},
                        {"unreachable", x.unreachable}};
            }
        },
        w);
}

Rational rational_field(const json& j) {
    auto q = parse_rational(j.get<std::string>());
    if (!q) throw InvalidParameter("malformed rational in certificate");
    return *q;
}

Witness witness_from_json(const json& j) {
    if (j.is_null()) return std::monostate{};
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "ham-path")
        return HamPathWitness{HamPath{j.at("path").get<std::vector<Vertex>>()}, rational_field(j.at("determinant"))};
    if (kind == "random") {
        RandomWitness w;
        for (const auto& s : j.at("weights")) {
            Integer z;
            if (z.set_str(s.get<std::string>(), 10) != 0) throw InvalidParameter("malformed weight");
            w.weights.push_back(std::move(z));
        }
        w.prime = j.at("prime").get<std::uint64_t>();
        w.residue = j.at("residue").get<std::uint64_t>();
        w.trial = j.at("trial").get<std::uint64_t>();
        if (!j.at("determinant").is_null()) w.determinant = rational_field(j.at("determinant"));
        return w;
    }
    if (kind == "symbolic-zero")
        return SymbolicZeroWitness{MultiPoly::from_json(j.at("phi")), j.at("unreachable").get<std::vector<Vertex>>()};
    throw InvalidParameter("unknown witness kind '" + kind + "'");
}

VerificationResult fail(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

nlohmann::json to_json(const Certificate& cert, const GraphSpec& graph) {
    json search = nullptr;
    if (cert.search)
        search = {{"status", to_string(cert.search->status)}, {"expansions", cert.search->expansions}};
    return {{"verdict", to_string(cert.verdict)},
            {"method", to_string(cert.method)},
            {"control_node", cert.control_node},
            {"failure_bound", cert.failure_bound},
            {"trials_run", cert.trials_run},
            {"seed", cert.seed},
            {"prime", cert.prime},
            {"weight_range", cert.weight_range},
            {"search", std::move(search)},
            {"witness", witness_json(cert.witness, graph)}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
    try {
        Certificate cert;
        auto verdict = parse_verdict(j.at("verdict").get<std::string>());
        auto method = parse_method(j.at("method").get<std::string>());
        if (!verdict || !method) throw InvalidParameter("unknown verdict or method");
        cert.verdict = *verdict;
        cert.method = *method;
        cert.control_node = j.at("control_node").get<Vertex>();
        cert.failure_bound = j.at("failure_bound").get<double>();
        cert.trials_run = j.at("trials_run").get<std::uint64_t>();
        cert.seed = j.at("seed").get<std::uint64_t>();
        cert.prime = j.at("prime").get<std::uint64_t>();
        cert.weight_range = j.at("weight_range").get<std::uint64_t>();
        if (const auto& s = j.at("search"); !s.is_null()) {
            HamSearchResult r;
            const auto status = s.at("status").get<std::string>();
            if (status == "found") r.status = SearchStatus::Found;
            else if (status == "exhausted") r.status = SearchStatus::Exhausted;
            else if (status == "budget-exhausted") r.status = SearchStatus::BudgetExhausted;
            else throw InvalidParameter("unknown search status '" + status + "'");
            r.expansions = s.at("expansions").get<std::uint64_t>();
            if (auto* w = std::get_if<HamPathWitness>(&cert.witness)) r.path = w->path;
            cert.search = std::move(r);
        }
        cert.witness = witness_from_json(j.at("witness"));
        if (cert.search && cert.search->status == SearchStatus::Found)
            if (auto* w = std::get_if<HamPathWitness>(&cert.witness)) cert.search->path = w->path;
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("malformed certificate: ") + e.what());
    }
}

VerificationResult verify_certificate(const GraphSpec& graph, const Certificate& cert) {
    const std::size_t n = graph.vertex_count();
    if (cert.control_node >= n) return fail("control node out of range");

    switch (cert.verdict) {
        case Verdict::StructurallyControllable: {
            if (cert.failure_bound != 0.0) return fail("exact verdict with nonzero failure bound");
            if (const auto* w = std::get_if<HamPathWitness>(&cert.witness)) {
                if (auto problem = check_path(graph, w->path, cert.control_node); !problem.empty())
                    return fail("invalid path: " + problem);
                const Rational det =
                    det_bareiss(controllability_matrix(path_adjacency(n, w->path), cert.control_node));
                if (det != w->determinant) return fail("stored determinant does not match recomputation");
                if (abs(det) != 1) return fail("unit path determinant is not +-1");
                return {true, "Hamiltonian path witness rechecked, det = " + format_rational(det)};
            }
            if (const auto* w = std::get_if<RandomWitness>(&cert.witness)) {
                if (w->weights.size() != graph.edge_count()) return fail("weight count differs from edge count");
                if (!is_prime(w->prime) || w->prime >= (std::uint64_t{1} << 63)) return fail("modulus is not a usable prime");
                if (w->residue == 0) return fail("zero residue cannot certify controllability");
                ModMatrix a(n, n, w->prime);
                for (std::size_t k = 0; k < graph.edge_count(); ++k) {
                    const Edge& e = graph.edges()[k];
                    a(e.u, e.v) = a(e.v, e.u) = reduce_mod(w->weights[k], w->prime);
                }
                if (det_mod(controllability_matrix_mod(a, cert.control_node)) != w->residue)
                    return fail("residue does not match recomputation");
                if (w->determinant) {
                    ExactMatrix ea(n, n);
                    for (std::size_t k = 0; k < graph.edge_count(); ++k) {
                        const Edge& e = graph.edges()[k];
                        ea(e.u, e.v) = ea(e.v, e.u) = Rational(w->weights[k]);
                    }
                    if (det_bareiss(controllability_matrix(ea, cert.control_node)) != *w->determinant)
                        return fail("exact determinant does not match recomputation");
                }
                return {true, "weight witness rechecked, residue " + std::to_string(w->residue) + " mod " +
                                  std::to_string(w->prime)};
            }
            return fail("controllable verdict without a determinant witness");
        }
        case Verdict::GenericallyUncontrollable: {
            if (cert.failure_bound != 0.0) return fail("exact verdict with nonzero failure bound");
            const auto* w = std::get_if<SymbolicZeroWitness>(&cert.witness);
            if (!w) return fail("uncontrollable verdict requires a symbolic-zero witness");
            if (!w->phi.is_zero()) return fail("stored polynomial is not zero");
            if (!w->unreachable.empty()) {
                const auto component = graph.component_of(cert.control_node);
                for (Vertex v : w->unreachable)
                    if (v >= n || std::binary_search(component.begin(), component.end(), v))
                        return fail("vertex " + std::to_string(v) + " is reachable from the control node");
                return {true, "unreachable vertices give identically zero rows"};
            }
            if (n > 10) return fail("symbolic recheck is limited to 10 vertices");
            ControlProblem problem{graph, std::nullopt, cert.control_node};
            if (!symbolic_det(problem, n).is_zero()) return fail("symbolic determinant is not zero");
            return {true, "symbolic determinant re-expanded to zero"};
        }
        case Verdict::Inconclusive:
            if (!std::holds_alternative<std::monostate>(cert.witness))
                return fail("inconclusive verdict carries a witness");
            if (cert.method == Method::Randomized && cert.trials_run > 0 &&
                cert.failure_bound != sz_failure_bound(n, cert.trials_run, cert.weight_range, cert.prime))
                return fail("failure bound does not match the recorded trials");
            return {true, "no witness claimed"};
    }
    return fail("unknown verdict");
}

}  // namespace symctrl
