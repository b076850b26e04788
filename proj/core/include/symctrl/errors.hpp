#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symctrl {

/// Base for malformed or invalid inputs (bad files, bad parameters).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class AsymmetricMatrix : public InputError {
public:
    AsymmetricMatrix(std::size_t i, std::size_t j)
        : InputError("asymmetric entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")"),
          i_(i), j_(j) {}

    std::size_t row() const noexcept { return i_; }
    std::size_t col() const noexcept { return j_; }

private:
    std::size_t i_, j_;
};

class SelfLoop : public InputError {
public:
    explicit SelfLoop(std::size_t v)
        : InputError("self loop at vertex " + std::to_string(v)), vertex_(v) {}

    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class DuplicateEdge : public InputError {
public:
    using InputError::InputError;
};

class InvalidParameter : public InputError {
public:
    using InputError::InputError;
};

class MissingWeights : public InputError {
public:
    MissingWeights() : InputError("control problem carries no weight assignment") {}
};

class MissingVariable : public InputError {
public:
    using InputError::InputError;
};

class TooLarge : public InputError {
public:
    using InputError::InputError;
};

class GridTooLarge : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

/// Raised when a witness that must hold by construction does not. Always a bug.
class CertificateViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace symctrl
