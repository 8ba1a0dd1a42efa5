#pragma once

#include <stdexcept>
#include <string>

namespace zsr {

/// Bad parameters: violated preconditions the caller can fix (CLI exit 1).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operands from different groups, malformed values.
class StructuralError : public std::logic_error {
public:
    explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

/// A computed value contradicts a proven bound, or a constructor produced
/// output its own verifier rejects (CLI exit 3).
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

/// A search ran out of budget where the operation has no interval form
/// (CLI exit 2).
class Inconclusive : public std::runtime_error {
public:
    explicit Inconclusive(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zsr
