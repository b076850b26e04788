#pragma once

#include <symctrl/exact_matrix.hpp>

#include <cstdint>
#include <vector>

namespace symctrl {

/// 2^61 - 1. Products of two residues fit in 128 bits.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

bool is_prime(std::uint64_t p);

__extension__ using uint128 = unsigned __int128;

/// Arithmetic in F_p for a prime p < 2^63.
class PrimeField {
public:
    /// Throws InvalidParameter if p is not a prime below 2^63.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
    /// a must be nonzero.
    std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }

private:
    std::uint64_t p_;
};

/// Dense row-major matrix over F_p.
class ModMatrix {
public:
    ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus = kDefaultPrime);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return field_; }
    std::uint64_t modulus() const noexcept { return field_.modulus(); }

    std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Stores value mod p.
    void set(std::size_t r, std::size_t c, std::uint64_t value) { (*this)(r, c) = value % modulus(); }

private:
    std::size_t rows_;
    std::size_t cols_;
    PrimeField field_;
    std::vector<std::uint64_t> data_;
};

/// Image of a rational matrix in F_p. Throws InvalidParameter when a
/// denominator is divisible by p.
ModMatrix reduce(const ExactMatrix& m, std::uint64_t p);

/// Controllability matrix over F_p by repeated matrix-vector products.
ModMatrix controllability_matrix_mod(const ModMatrix& a, Vertex control_node);

/// Determinant over F_p by Gaussian elimination with inverted pivots.
std::uint64_t det_mod(const ModMatrix& m);

}  // namespace symctrl
