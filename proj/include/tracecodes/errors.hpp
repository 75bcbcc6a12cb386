#pragma once

#include <stdexcept>
#include <string>

namespace tracecodes {

// Invalid or out-of-hypothesis parameters. CLI maps this to exit code 2.
class ParamError : public std::invalid_argument {
public:
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested computation exceeds the configured enumeration budget.
// CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency cross-check failed (e.g. a set size does not match
// its closed-form count). Downstream results would be meaningless, so we abort.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace tracecodes
