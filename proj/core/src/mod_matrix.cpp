#include "symctrl/mod_matrix.hpp"

#include "symctrl/errors.hpp"

#include <utility>

namespace symctrl {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    // GMP runs BPSW first, which has no known counterexample below 2^64.
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 63)) throw InvalidParameter("modulus must be below 2^63");
    if (!is_prime(p)) throw InvalidParameter("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
    std::uint64_t result = 1 % p_;
    base %= p_;
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), field_(modulus), data_(rows * cols, 0) {}

ModMatrix reduce(const ExactMatrix& m, std::uint64_t p) {
    ModMatrix out(m.rows(), m.cols(), p);
    const PrimeField& f = out.field();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            std::uint64_t num = reduce_mod(q.get_num(), p);
            std::uint64_t den = reduce_mod(q.get_den(), p);
            if (den == 0) throw InvalidParameter("denominator divisible by the modulus");
            out(i, j) = den == 1 ? num : f.mul(num, f.inv(den));
        }
    }
    return out;
}

ModMatrix controllability_matrix_mod(const ModMatrix& a, Vertex control_node) {
    if (a.rows() != a.cols()) throw DimensionMismatch("adjacency matrix must be square");
    const std::size_t n = a.rows();
    if (control_node >= n) throw IndexOutOfRange("control node out of range");
    const PrimeField& f = a.field();

    ModMatrix c(n, n, a.modulus());
    std::vector<std::uint64_t> v(n, 0), next(n);
    v[control_node] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) c(i, k) = v[i];
        if (k + 1 == n) break;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (a(i, j) && v[j]) acc = f.add(acc, f.mul(a(i, j), v[j]));
            next[i] = acc;
        }
        std::swap(v, next);
    }
    return c;
}

std::uint64_t det_mod(const ModMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const PrimeField& f = m.field();
    ModMatrix w = m;
    std::uint64_t det = 1 % f.modulus();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(w(pivot, j), w(k, j));
            det = f.sub(0, det);
        }
        det = f.mul(det, w(k, k));
        const std::uint64_t inv = f.inv(w(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w(i, k) == 0) continue;
            const std::uint64_t factor = f.mul(w(i, k), inv);
            for (std::size_t j = k + 1; j < n; ++j)
                if (w(k, j)) w(i, j) = f.sub(w(i, j), f.mul(factor, w(k, j)));
            w(i, k) = 0;
        }
    }
    return det;
}

}  // namespace symctrl
