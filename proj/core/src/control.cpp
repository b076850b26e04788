#include "symctrl/control.hpp"

#include "symctrl/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <iomanip>
#include <limits>
#include <sstream>
#include <tuple>

namespace symctrl {

Eigen::MatrixXd to_real(const ExactMatrix& a) {
    Eigen::MatrixXd out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).get_d();
    return out;
}

Eigen::MatrixXd normalize_spectral(const Eigen::MatrixXd& a, double c) {
    if (a.rows() != a.cols()) throw DimensionMismatch("adjacency matrix must be square");
    if (a.size() == 0) return a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, Eigen::EigenvaluesOnly);
    const double radius = eig.eigenvalues().cwiseAbs().maxCoeff();
    if (radius == 0.0) return a;
    return a * (c / radius);
}

namespace {

void check_square(const Eigen::MatrixXd& a, Vertex control_node) {
    if (a.rows() != a.cols()) throw DimensionMismatch("adjacency matrix must be square");
    if (control_node >= static_cast<std::size_t>(a.rows()))
        throw IndexOutOfRange("control node out of range");
}

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return out.str();
}

}  // namespace

Trajectory simulate(const Eigen::MatrixXd& a, Vertex control_node, const Eigen::VectorXd& x0,
                    std::span<const double> inputs) {
    if (a.rows() != a.cols() || x0.size() != a.rows())
        throw DimensionMismatch("state dimension does not match the adjacency matrix");
    check_square(a, control_node);
    const auto node = static_cast<Eigen::Index>(control_node);

    Trajectory out;
    out.inputs.assign(inputs.begin(), inputs.end());
    out.states.reserve(inputs.size() + 1);
    out.states.push_back(x0);
    for (double u : inputs) {
        Eigen::VectorXd next = a * out.states.back();
        next(node) += u;
        out.states.push_back(std::move(next));
    }
    return out;
}

Eigen::MatrixXd controllability_matrix_real(const Eigen::MatrixXd& a, Vertex control_node,
                                            std::size_t horizon) {
    check_square(a, control_node);
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd c(n, static_cast<Eigen::Index>(horizon));
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(static_cast<Eigen::Index>(control_node)) = 1.0;
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(horizon); ++k) {
        c.col(k) = v;
        v = a * v;
    }
    return c;
}

Eigen::MatrixXd gramian(const Eigen::MatrixXd& a, Vertex control_node, std::size_t horizon) {
    if (horizon < 1) throw InvalidParameter("horizon must be at least 1");
    const Eigen::MatrixXd c = controllability_matrix_real(a, control_node, horizon);
    return c * c.transpose();
}

std::pair<double, double> singular_value_extremes(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return {0.0, 0.0};
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    return {s.maxCoeff(), s.minCoeff()};
}

ConditionReport condition_report(const Eigen::MatrixXd& a, Vertex control_node,
                                 std::optional<std::size_t> horizon) {
    check_square(a, control_node);
    const auto n = static_cast<std::size_t>(a.rows());
    ConditionReport r;
    r.n = n;
    r.horizon = horizon.value_or(n);

    const Eigen::MatrixXd c = controllability_matrix_real(a, control_node, n);
    std::tie(r.sigma_max, r.sigma_min) = singular_value_extremes(c);
    r.ratio = r.sigma_max > 0.0 ? r.sigma_min / r.sigma_max : 0.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gramian(a, control_node, r.horizon),
                                                       Eigen::EigenvaluesOnly);
    r.gramian_eig_min = eig.eigenvalues().minCoeff();
    r.gramian_eig_max = eig.eigenvalues().maxCoeff();
    return r;
}

GramianSingular::GramianSingular(Eigen::VectorXd direction, double eig_min, double eig_max)
    : std::runtime_error("reachability Gramian is numerically singular (lambda_min = " + fmt(eig_min) +
                         ", lambda_max = " + fmt(eig_max) + ")"),
      direction_(std::move(direction)), eig_min_(eig_min), eig_max_(eig_max) {}

ControlPlan min_energy_control(const Eigen::MatrixXd& a, Vertex control_node, const Eigen::VectorXd& x0,
                               const Eigen::VectorXd& xf, std::size_t horizon, double threshold) {
    check_square(a, control_node);
    const Eigen::Index n = a.rows();
    if (x0.size() != n || xf.size() != n) throw DimensionMismatch("state dimension mismatch");
    if (horizon < static_cast<std::size_t>(n)) throw InvalidParameter("horizon must be at least n");

    const Eigen::MatrixXd w = gramian(a, control_node, horizon);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(w);
    const double lo = eig.eigenvalues()(0);
    const double hi = eig.eigenvalues()(n - 1);
    if (!(lo > threshold * hi)) throw GramianSingular(eig.eigenvectors().col(0), lo, hi);

    Eigen::LLT<Eigen::MatrixXd> chol(w);
    if (chol.info() != Eigen::Success) throw GramianSingular(eig.eigenvectors().col(0), lo, hi);

    Eigen::VectorXd drift = x0;
    for (std::size_t t = 0; t < horizon; ++t) drift = a * drift;
    Eigen::VectorXd v = chol.solve(xf - drift);

    const Eigen::MatrixXd at = a.transpose();
    ControlPlan plan;
    plan.horizon = horizon;
    plan.inputs.resize(horizon);
    for (std::size_t t = horizon; t-- > 0;) {
        plan.inputs[t] = v(static_cast<Eigen::Index>(control_node));
        v = at * v;
    }
    for (double u : plan.inputs) plan.energy += u * u;
    plan.terminal = simulate(a, control_node, x0, plan.inputs).states.back();
    return plan;
}

std::string to_csv(const Trajectory& trajectory) {
    std::ostringstream out;
    out << "t,u";
    const Eigen::Index n = trajectory.states.empty() ? 0 : trajectory.states.front().size();
    for (Eigen::Index i = 0; i < n; ++i) out << ",x" << i;
    out << '\n';
    for (std::size_t t = 0; t < trajectory.states.size(); ++t) {
        out << t << ',';
        if (t < trajectory.inputs.size()) out << fmt(trajectory.inputs[t]);
        for (Eigen::Index i = 0; i < n; ++i) out << ',' << fmt(trajectory.states[t](i));
        out << '\n';
    }
    return out.str();
}

std::string to_csv(std::span<const ConditionReport> reports) {
    std::ostringstream out;
    out << "n,horizon,sigma_max,sigma_min,ratio,gramian_eig_min,gramian_eig_max\n";
    for (const auto& r : reports)
        out << r.n << ',' << r.horizon << ',' << fmt(r.sigma_max) << ',' << fmt(r.sigma_min) << ','
            << fmt(r.ratio) << ',' << fmt(r.gramian_eig_min) << ',' << fmt(r.gramian_eig_max) << '\n';
    return out.str();
}

}  // namespace symctrl
