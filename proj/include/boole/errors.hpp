#pragma once

#include <stdexcept>
#include <string>

namespace boole {

// Malformed input documents (bad JSON, wrong shapes, unparseable tokens).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Semantically invalid inputs or negative domain outcomes (out-of-range
// probabilities, size guards, infeasible instances, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class InfeasibleInstance : public DomainError {
public:
    explicit InfeasibleInstance(const std::string& what) : DomainError(what) {}
};

class NotInUnionPolytope : public DomainError {
public:
    explicit NotInUnionPolytope(const std::string& what) : DomainError(what) {}
};

}  // namespace boole
