#include "symctrl/exact_matrix.hpp"

#include "symctrl/errors.hpp"

#include <cassert>
#include <utility>

namespace symctrl {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged row in matrix literal");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> ExactMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<Rational> multiply(const ExactMatrix& m, std::span<const Rational> v) {
    if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) acc += m(i, j) * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

ExactMatrix assemble_adjacency(const ControlProblem& problem) {
    if (!problem.weights) throw MissingWeights();
    problem.validate();
    const std::size_t n = problem.graph.vertex_count();
    ExactMatrix a(n, n);
    for (const auto& [e, w] : problem.weights->values()) {
        a(e.u, e.v) = w;
        a(e.v, e.u) = w;
    }
    return a;
}

ExactMatrix controllability_matrix(const ExactMatrix& a, Vertex control_node) {
    if (!a.square()) throw DimensionMismatch("adjacency matrix must be square");
    const std::size_t n = a.rows();
    if (control_node >= n) throw IndexOutOfRange("control node out of range");

    ExactMatrix c(n, n);
    std::vector<Rational> v(n);
    v[control_node] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) c(i, k) = v[i];
        if (k + 1 < n) v = multiply(a, v);
    }
    return c;
}

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Scales each row by the lcm of its denominators. Returns the product of
// the scale factors so det(original) = det(scaled) / product.
IntegerRows clear_denominators(const ExactMatrix& m, Integer* scale_product) {
    IntegerRows out(m.rows(), std::vector<Integer>(m.cols()));
    Integer product = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        product *= l;
    }
    if (scale_product) *scale_product = product;
    return out;
}

void exact_divide(Integer& target, const Integer& divisor, BareissStats* stats) {
    if (divisor == 1) return;
    if (stats) {
        ++stats->divisions;
        if (!mpz_divisible_p(target.get_mpz_t(), divisor.get_mpz_t())) ++stats->inexact_divisions;
    }
#ifndef NDEBUG
    assert(mpz_divisible_p(target.get_mpz_t(), divisor.get_mpz_t()) && "Bareiss step left Z");
#endif
    mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), divisor.get_mpz_t());
}

}  // namespace

Rational det_bareiss(const ExactMatrix& m, BareissStats* stats) {
    if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    Integer scale;
    IntegerRows w = clear_denominators(m, &scale);
    Integer previous = 1;
    int sign = 1;
    Integer t1, t2;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(w[pivot], w[k]);
            sign = -sign;
        }
        const Integer& p = w[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const bool row_has_entry = w[i][k] != 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                // w[i][j] = (p * w[i][j] - w[i][k] * w[k][j]) / previous
                if (row_has_entry) {
                    t1 = p * w[i][j];
                    t2 = w[i][k] * w[k][j];
                    w[i][j] = t1 - t2;
                } else if (p != previous) {
                    w[i][j] *= p;
                } else {
                    continue;
                }
                exact_divide(w[i][j], previous, stats);
            }
            w[i][k] = 0;
        }
        previous = p;
    }

    Rational det(w[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

std::size_t rank_exact(const ExactMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntegerRows w = clear_denominators(m, nullptr);
    std::vector<std::size_t> col_order(cols);
    for (std::size_t j = 0; j < cols; ++j) col_order[j] = j;

    Integer previous = 1;
    Integer t1, t2;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        // Full pivoting: first nonzero in the trailing block, scanning
        // columns then rows, for a deterministic choice.
        std::size_t pr = rows, pc = cols;
        for (std::size_t jj = k; jj < cols && pr == rows; ++jj)
            for (std::size_t i = k; i < rows; ++i)
                if (w[i][col_order[jj]] != 0) {
                    pr = i;
                    pc = jj;
                    break;
                }
        if (pr == rows) break;
        std::swap(w[pr], w[k]);
        std::swap(col_order[pc], col_order[k]);

        const Integer p = w[k][col_order[k]];
        for (std::size_t i = k + 1; i < rows; ++i) {
            const Integer factor = w[i][col_order[k]];
            for (std::size_t jj = k + 1; jj < cols; ++jj) {
                const std::size_t j = col_order[jj];
                t1 = p * w[i][j];
                t2 = factor * w[k][j];
                w[i][j] = t1 - t2;
                exact_divide(w[i][j], previous, nullptr);
            }
            w[i][col_order[k]] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

std::size_t controllability_rank(const ExactMatrix& a, Vertex control_node) {
    if (!a.square()) throw DimensionMismatch("adjacency matrix must be square");
    const std::size_t n = a.rows();
    if (control_node >= n) throw IndexOutOfRange("control node out of range");

    // Reduced basis of the Krylov columns seen so far, each with a pivot row.
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivots;
    std::vector<Rational> v(n);
    v[control_node] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> r = v;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational& coeff = r[pivots[b]];
            if (sgn(coeff) == 0) continue;
            const Rational f = coeff;
            for (std::size_t i = 0; i < n; ++i)
                if (sgn(basis[b][i]) != 0) r[i] -= f * basis[b][i];
        }
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(r[i]) != 0) {
                pivot = i;
                break;
            }
        if (pivot == n) return k;
        const Rational inv = 1 / r[pivot];
        for (auto& x : r) x *= inv;
        basis.push_back(std::move(r));
        pivots.push_back(pivot);
        if (k + 1 < n) v = multiply(a, v);
    }
    return n;
}

}  // namespace symctrl
