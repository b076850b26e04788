#pragma once

#include <symctrl/exact_matrix.hpp>

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symctrl {

/// The one place exact weights become doubles.
Eigen::MatrixXd to_real(const ExactMatrix& a);

/// c * A / max|lambda(A)|. A zero matrix is returned unchanged.
Eigen::MatrixXd normalize_spectral(const Eigen::MatrixXd& a, double c);

struct Trajectory {
    std::vector<Eigen::VectorXd> states;  ///< x(0) .. x(T)
    std::vector<double> inputs;           ///< u(0) .. u(T-1)
};

/// x(t+1) = A x(t) + b u(t). Throws DimensionMismatch.
Trajectory simulate(const Eigen::MatrixXd& a, Vertex control_node, const Eigen::VectorXd& x0,
                    std::span<const double> inputs);

/// [b, Ab, ..., A^{T-1} b] in double precision.
Eigen::MatrixXd controllability_matrix_real(const Eigen::MatrixXd& a, Vertex control_node,
                                            std::size_t horizon);

/// W_T = sum_{t<T} A^t b b^T (A^t)^T, formed as C_T C_T^T.
Eigen::MatrixXd gramian(const Eigen::MatrixXd& a, Vertex control_node, std::size_t horizon);

struct ConditionReport {
    std::size_t n = 0;
    double sigma_max = 0.0;
    double sigma_min = 0.0;
    double ratio = 0.0;  ///< sigma_min / sigma_max, 0 for a zero matrix
    std::size_t horizon = 0;
    double gramian_eig_min = 0.0;
    double gramian_eig_max = 0.0;
};

/// {sigma_max, sigma_min} of any matrix by one-sided Jacobi SVD.
std::pair<double, double> singular_value_extremes(const Eigen::MatrixXd& m);

/// Singular values of the n x n controllability matrix (one-sided Jacobi
/// SVD, not eigenvalues of C C^T) and the Gramian spectrum over `horizon`
/// steps (default n).
ConditionReport condition_report(const Eigen::MatrixXd& a, Vertex control_node,
                                 std::optional<std::size_t> horizon = std::nullopt);

struct ControlPlan {
    std::size_t horizon = 0;
    std::vector<double> inputs;
    Eigen::VectorXd terminal;  ///< simulate(x0, inputs) at time T
    double energy = 0.0;       ///< sum of u(t)^2
};

/// The Gramian has a direction reachable only at (numerically) unbounded cost.
class GramianSingular : public std::runtime_error {
public:
    GramianSingular(Eigen::VectorXd direction, double eig_min, double eig_max);

    const Eigen::VectorXd& direction() const noexcept { return direction_; }
    double eig_min() const noexcept { return eig_min_; }
    double eig_max() const noexcept { return eig_max_; }

private:
    Eigen::VectorXd direction_;
    double eig_min_;
    double eig_max_;
};

inline constexpr double kGramianThreshold = 1e-12;

/// Minimum-energy inputs steering x0 to xf in T steps:
/// u(t) = b^T (A^T)^{T-1-t} W_T^{-1} (xf - A^T x0), with W_T solved by
/// Cholesky. Throws InvalidParameter when T < n and GramianSingular when
/// lambda_min(W_T) <= threshold * lambda_max(W_T).
ControlPlan min_energy_control(const Eigen::MatrixXd& a, Vertex control_node, const Eigen::VectorXd& x0,
                               const Eigen::VectorXd& xf, std::size_t horizon,
                               double threshold = kGramianThreshold);

/// "t,u,x0,...,x{n-1}" with an empty u on the final row.
std::string to_csv(const Trajectory& trajectory);
/// "n,horizon,sigma_max,sigma_min,ratio,gramian_eig_min,gramian_eig_max"
std::string to_csv(std::span<const ConditionReport> reports);

}  // namespace symctrl
