#pragma once

#include <stdexcept>
#include <string>

namespace grsdual {

// Thrown when an exhaustive search or check would exceed its stated budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grsdual
