#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lelek {

// Base class for every domain error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class NonPositiveInput : public Error {
public:
    explicit NonPositiveInput(const std::string& what) : Error(what) {}
};

class OutOfUnitInterval : public Error {
public:
    explicit OutOfUnitInterval(const std::string& what) : Error(what) {}
};

class InvalidConstraint : public Error {
public:
    explicit InvalidConstraint(const std::string& what) : Error(what) {}
};

// The lattice is dense, so exhaustion always means the budget was too small.
// Carries the explored frontier so callers can retry with a larger budget.
class SearchExhausted : public Error {
public:
    SearchExhausted(const std::string& what, unsigned long budget, unsigned long max_sum_explored)
        : Error(what), budget(budget), max_sum_explored(max_sum_explored) {}

    unsigned long budget;
    unsigned long max_sum_explored;
};

class DepthOverflow : public Error {
public:
    explicit DepthOverflow(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class WordNotUsable : public Error {
public:
    explicit WordNotUsable(const std::string& what) : Error(what) {}
};

class BoundaryCoordinate : public Error {
public:
    BoundaryCoordinate(const std::string& what, std::size_t index) : Error(what), index(index) {}
    std::size_t index;
};

class EpsilonTooSmall : public Error {
public:
    explicit EpsilonTooSmall(const std::string& what) : Error(what) {}
};

class InvalidEps : public Error {
public:
    explicit InvalidEps(const std::string& what) : Error(what) {}
};

class InvalidCylinder : public Error {
public:
    explicit InvalidCylinder(const std::string& what) : Error(what) {}
};

class HorizonExceeded : public Error {
public:
    explicit HorizonExceeded(const std::string& what) : Error(what) {}
};

class InconsistentConstraints : public Error {
public:
    explicit InconsistentConstraints(const std::string& what) : Error(what) {}
};

class InvalidRenderSpec : public Error {
public:
    explicit InvalidRenderSpec(const std::string& what) : Error(what) {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// Raised when an input rational cannot be fully factored with desk-scale
// trial division; NC validation needs complete factorizations.
class FactorizationIncomplete : public Error {
public:
    explicit FactorizationIncomplete(const std::string& what) : Error(what) {}
};

}  // namespace lelek
