#include "symctrl/certify.hpp"

#include "symctrl/errors.hpp"
#include "symctrl/random.hpp"

#include <algorithm>
#include <cmath>

namespace symctrl {

std::string_view to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::Auto: return "auto";
        case Strategy::HamPath: return "ham-path";
        case Strategy::Randomized: return "randomized";
        case Strategy::Symbolic: return "symbolic";
    }
    return "auto";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
    if (text == "auto") return Strategy::Auto;
    if (text == "ham-path") return Strategy::HamPath;
    if (text == "randomized") return Strategy::Randomized;
    if (text == "symbolic") return Strategy::Symbolic;
    return std::nullopt;
}

ExactMatrix path_adjacency(std::size_t n, const HamPath& path) {
    ExactMatrix a(n, n);
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        a(path.vertices[i - 1], path.vertices[i]) = 1;
        a(path.vertices[i], path.vertices[i - 1]) = 1;
    }
    return a;
}

Certificate unit_path_certificate(const GraphSpec& graph, const HamPath& path) {
    if (auto problem = check_path(graph, path); !problem.empty())
        throw InvalidParameter("not a Hamiltonian path: " + problem);
    if (path.vertices.empty()) throw InvalidParameter("empty path");

    const Vertex control = path.vertices.front();
    const ExactMatrix c = controllability_matrix(path_adjacency(graph.vertex_count(), path), control);
    Rational det = det_bareiss(c);
    if (abs(det) != 1)
        throw CertificateViolation("unit-weight path realisation has determinant " +
                                   format_rational(det) + ", expected +-1");

    Certificate cert;
    cert.verdict = Verdict::StructurallyControllable;
    cert.method = Method::HamiltonianPath;
    cert.control_node = control;
    cert.witness = HamPathWitness{path, std::move(det)};
    cert.failure_bound = 0.0;
    return cert;
}

double sz_failure_bound(std::uint64_t n, std::uint64_t trials, std::uint64_t weight_range,
                        std::uint64_t prime) {
    if (n == 0 || trials == 0 || weight_range == 0 || prime == 0)
        throw InvalidParameter("failure bound arguments must be positive");
    const double degree = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    const double samples = static_cast<double>(std::min(weight_range, prime));
    const double single = degree / samples;
    if (single >= 1.0) return 1.0;
    return std::clamp(std::pow(single, static_cast<double>(trials)), 0.0, 1.0);
}

namespace {

std::vector<Integer> draw_weights(std::size_t edges, std::uint64_t weight_range, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Integer> w;
    w.reserve(edges);
    for (std::size_t e = 0; e < edges; ++e) {
        const std::uint64_t x = rng.between(1, weight_range);
        Integer z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
        w.push_back(std::move(z));
    }
    return w;
}

ExactMatrix integer_adjacency(const GraphSpec& graph, const std::vector<Integer>& weights) {
    const std::size_t n = graph.vertex_count();
    ExactMatrix a(n, n);
    for (std::size_t k = 0; k < graph.edge_count(); ++k) {
        const Edge& e = graph.edges()[k];
        a(e.u, e.v) = Rational(weights[k]);
        a(e.v, e.u) = Rational(weights[k]);
    }
    return a;
}

Certificate base_certificate(const ControlProblem& problem, const CertifyOptions& o) {
    Certificate cert;
    cert.control_node = problem.control_node;
    cert.seed = o.seed;
    cert.prime = o.prime;
    cert.weight_range = o.weight_range;
    return cert;
}

// phi decides the question. A nonzero phi gets an explicit point witness
// drawn the same way as the randomized route.
Certificate symbolic_certificate(const ControlProblem& problem, const CertifyOptions& o, Certificate cert) {
    MultiPoly phi = symbolic_det(problem, o.symbolic_limit);
    cert.method = Method::Symbolic;
    if (phi.is_zero()) {
        cert.verdict = Verdict::GenericallyUncontrollable;
        cert.witness = SymbolicZeroWitness{std::move(phi), {}};
        cert.failure_bound = 0.0;
        return cert;
    }
    const std::size_t edges = problem.graph.edge_count();
    const std::uint64_t attempts = std::max<std::uint64_t>(o.trials, 1) + 1024;
    for (std::uint64_t t = 0; t < attempts; ++t) {
        auto weights = draw_weights(edges, o.weight_range, o.seed + t);
        std::vector<Rational> point(weights.begin(), weights.end());
        Rational value = phi.evaluate(point);
        if (sgn(value) == 0) continue;
        const std::uint64_t residue = reduce_mod(value.get_num(), o.prime);
        if (residue == 0) continue;
        cert.verdict = Verdict::StructurallyControllable;
        cert.witness = RandomWitness{std::move(weights), o.prime, residue, t, std::move(value)};
        cert.failure_bound = 0.0;
        return cert;
    }
    // A nonzero phi of degree <= n(n-1)/2 vanishing on over a thousand
    // independent draws: not expected to happen at the supported sizes.
    cert.verdict = Verdict::Inconclusive;
    cert.failure_bound = 1.0;
    return cert;
}

Certificate zero_rows_certificate(const ControlProblem& problem, const CertifyOptions& o,
                                  const std::vector<Vertex>& component) {
    Certificate cert = base_certificate(problem, o);
    std::vector<Vertex> unreachable;
    for (Vertex v = 0; v < problem.graph.vertex_count(); ++v)
        if (!std::binary_search(component.begin(), component.end(), v)) unreachable.push_back(v);
    cert.verdict = Verdict::GenericallyUncontrollable;
    cert.method = Method::Connectivity;
    cert.witness = SymbolicZeroWitness{MultiPoly(problem.graph.edge_count()), std::move(unreachable)};
    cert.failure_bound = 0.0;
    return cert;
}

}  // namespace

Certificate randomized_certify(const ControlProblem& problem, std::uint32_t trials,
                               std::uint64_t weight_range, std::uint64_t seed, std::uint64_t prime,
                               std::size_t exact_recheck_limit) {
    problem.validate();
    if (trials < 1) throw InvalidParameter("at least one trial is required");
    if (weight_range < 2) throw InvalidParameter("weight range must be at least 2");
    const PrimeField field(prime);
    const GraphSpec& graph = problem.graph;
    const std::size_t n = graph.vertex_count();

    Certificate cert;
    cert.method = Method::Randomized;
    cert.control_node = problem.control_node;
    cert.seed = seed;
    cert.prime = prime;
    cert.weight_range = weight_range;

    for (std::uint32_t t = 0; t < trials; ++t) {
        auto weights = draw_weights(graph.edge_count(), weight_range, seed + t);
        ModMatrix a(n, n, prime);
        for (std::size_t k = 0; k < graph.edge_count(); ++k) {
            const Edge& e = graph.edges()[k];
            const std::uint64_t w = reduce_mod(weights[k], prime);
            a(e.u, e.v) = w;
            a(e.v, e.u) = w;
        }
        const std::uint64_t residue = det_mod(controllability_matrix_mod(a, problem.control_node));
        cert.trials_run = t + 1;
        if (residue == 0) continue;

        std::optional<Rational> exact;
        if (n <= exact_recheck_limit) {
            exact = det_bareiss(controllability_matrix(integer_adjacency(graph, weights), problem.control_node));
            if (sgn(*exact) == 0 || reduce_mod(exact->get_num(), prime) != residue)
                throw CertificateViolation("modular determinant disagrees with exact recomputation");
        }
        cert.verdict = Verdict::StructurallyControllable;
        cert.witness = RandomWitness{std::move(weights), prime, residue, t, std::move(exact)};
        cert.failure_bound = 0.0;
        return cert;
    }

    cert.verdict = Verdict::Inconclusive;
    cert.failure_bound = sz_failure_bound(n, trials, weight_range, prime);
    return cert;
}

Certificate certify(const ControlProblem& problem, Strategy strategy, const CertifyOptions& o) {
    problem.validate();
    const GraphSpec& graph = problem.graph;
    const std::size_t n = graph.vertex_count();

    auto randomized = [&] {
        Certificate c = randomized_certify(problem, o.trials, o.weight_range, o.seed, o.prime,
                                           o.exact_recheck_limit);
        return c;
    };

    switch (strategy) {
        case Strategy::HamPath: {
            auto search = find_hamiltonian_path(graph, problem.control_node, o.ham_budget);
            Certificate cert = base_certificate(problem, o);
            if (search.path) cert = unit_path_certificate(graph, *search.path);
            else cert.method = Method::HamiltonianPath;
            cert.seed = o.seed;
            cert.prime = o.prime;
            cert.weight_range = o.weight_range;
            cert.search = std::move(search);
            return cert;
        }
        case Strategy::Randomized:
            return randomized();
        case Strategy::Symbolic: {
            Certificate cert = base_certificate(problem, o);
            if (n > o.symbolic_limit) {
                cert.method = Method::Symbolic;
                return cert;
            }
            return symbolic_certificate(problem, o, std::move(cert));
        }
        case Strategy::Auto:
            break;
    }

    const auto component = graph.component_of(problem.control_node);
    if (component.size() < n) return zero_rows_certificate(problem, o, component);

    auto search = find_hamiltonian_path(graph, problem.control_node, o.ham_budget);
    if (search.path) {
        Certificate cert = unit_path_certificate(graph, *search.path);
        cert.seed = o.seed;
        cert.prime = o.prime;
        cert.weight_range = o.weight_range;
        cert.search = std::move(search);
        return cert;
    }

    Certificate cert = randomized();
    cert.search = search;
    if (cert.verdict == Verdict::StructurallyControllable || n > o.symbolic_limit) return cert;

    const std::uint64_t trials_run = cert.trials_run;
    Certificate symbolic = symbolic_certificate(problem, o, base_certificate(problem, o));
    symbolic.trials_run = trials_run;
    symbolic.search = std::move(search);
    return symbolic;
}

}  // namespace symctrl
