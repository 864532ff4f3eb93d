#pragma once

#include <stdexcept>
#include <string>

namespace bochvar {

/// Thrown on precondition violations (unknown elements, signature
/// mismatches, invalid input data). Carries a human-readable message
/// suitable for CLI diagnostics.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal consistency audit fails, i.e. a fact the
/// structure theory guarantees did not hold on the given input. These
/// indicate either a malformed input that slipped past validation or a
/// bug, and are never silently reconciled.
class defect : public std::runtime_error {
public:
    explicit defect(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bochvar
