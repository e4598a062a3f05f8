// errors.hpp - failure types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace dtrain {

// quadrature, series or subdivision budget could not reach the requested tolerance
struct NumericFailure : std::runtime_error {
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

// parameters outside an operation's domain
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// file could not be opened or written
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// fewer sweep points inside the fit window than a slope fit needs
struct InsufficientPoints : std::runtime_error {
    explicit InsufficientPoints(const std::string& what) : std::runtime_error(what) {}
};

// a partition refinement would exceed the cell budget
struct CellBudgetExceeded : std::runtime_error {
    explicit CellBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// reference value too coarse to certify the smallest observed sweep error
struct ReferenceTooCoarse : std::runtime_error {
    explicit ReferenceTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dtrain
