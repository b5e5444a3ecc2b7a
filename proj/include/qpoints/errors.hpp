#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpoints {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Zero is not an element of the multiplicative group of scalars.
class ZeroScalarError : public Error {
public:
    explicit ZeroScalarError(const std::string& what = "scalar must be non-zero")
        : Error(what) {}
};

/// Input text does not match the expression or matrix-file grammar.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          message_(message), position_(position) {}

    /// The message without the position suffix.
    const std::string& message() const { return message_; }
    std::size_t position() const { return position_; }

private:
    std::string message_;
    std::size_t position_;
};

class MissingEntryError : public Error {
public:
    MissingEntryError(int i, int j)
        : Error("missing matrix entry q " + std::to_string(i) + " " + std::to_string(j)),
          i_(i), j_(j) {}

    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_, j_;
};

class DuplicateEntryError : public Error {
public:
    DuplicateEntryError(int i, int j)
        : Error("duplicate matrix entry q " + std::to_string(i) + " " + std::to_string(j)),
          i_(i), j_(j) {}

    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_, j_;
};

class IndexOutOfRangeError : public Error {
public:
    explicit IndexOutOfRangeError(const std::string& what = "index out of range")
        : Error(what) {}
};

/// Deleting the only remaining index would leave an empty matrix.
class CannotDeleteLastError : public Error {
public:
    CannotDeleteLastError() : Error("cannot delete the last remaining index") {}
};

class IndicesNotDistinctError : public Error {
public:
    IndicesNotDistinctError() : Error("indices must be pairwise distinct") {}
};

class EmptySubsetError : public Error {
public:
    EmptySubsetError() : Error("index subset must be non-empty") {}
};

class LengthMismatchError : public Error {
public:
    explicit LengthMismatchError(const std::string& what = "length mismatch")
        : Error(what) {}
};

/// Instance too large for the brute-force enumeration guard.
class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& what = "instance too large") : Error(what) {}
};

class ComponentLimitExceededError : public Error {
public:
    explicit ComponentLimitExceededError(std::size_t limit)
        : Error("more than " + std::to_string(limit) + " components; raise the limit"),
          limit_(limit) {}

    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

}  // namespace qpoints
