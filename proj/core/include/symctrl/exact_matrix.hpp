#pragma once

#include <symctrl/graph.hpp>
#include <symctrl/rational.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace symctrl {

/// Dense row-major matrix over the rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    /// Throws DimensionMismatch on ragged input.
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> data() const noexcept { return data_; }
    std::vector<Rational> column(std::size_t c) const;

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::vector<Rational> multiply(const ExactMatrix& m, std::span<const Rational> v);

/// Symmetric weighted adjacency with zero diagonal. Throws MissingWeights.
ExactMatrix assemble_adjacency(const ControlProblem& problem);

/// [b, Ab, ..., A^{n-1} b] with b the indicator of `control_node`, built by
/// repeated matrix-vector products.
ExactMatrix controllability_matrix(const ExactMatrix& a, Vertex control_node);

/// Rank of the controllability matrix, generated column by column. Stops at
/// the first Krylov vector lying in the span of its predecessors, since
/// every later one does too.
std::size_t controllability_rank(const ExactMatrix& a, Vertex control_node);

struct BareissStats {
    std::size_t divisions = 0;
    std::size_t inexact_divisions = 0;
};

/// Determinant by fraction-free elimination. Rows are first scaled to
/// integers, so every intermediate is an integer minor. When `stats` is
/// given every division is checked for exactness and counted.
Rational det_bareiss(const ExactMatrix& m, BareissStats* stats = nullptr);

/// Rank over Q by fraction-free elimination with full pivoting.
std::size_t rank_exact(const ExactMatrix& m);

}  // namespace symctrl
