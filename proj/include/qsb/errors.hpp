#pragma once

#include <stdexcept>
#include <string>

namespace qsb {

/// Input is real where a nonreal quaternion is required.
struct RealInputError : std::domain_error {
    explicit RealInputError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation point outside the domain of definition.
struct OutOfDomainError : std::domain_error {
    explicit OutOfDomainError(const std::string& what) : std::domain_error(what) {}
};

/// A series operation that requires coefficients in span{1, i} was applied to
/// an H-valued series.
struct NotSliceValuedError : std::invalid_argument {
    explicit NotSliceValuedError(const std::string& what) : std::invalid_argument(what) {}
};

/// Quadrature order violates the constraints of the rule construction.
struct BadOrderError : std::invalid_argument {
    explicit BadOrderError(const std::string& what) : std::invalid_argument(what) {}
};

/// Gram matrix condition number exceeds the safe inversion threshold.
struct IllConditionedError : std::runtime_error {
    explicit IllConditionedError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncated kernel evaluation refused too close to the boundary.
struct NearBoundaryError : std::domain_error {
    explicit NearBoundaryError(const std::string& what) : std::domain_error(what) {}
};

/// Series degree exceeds the kernel truncation.
struct DegreeTooHighError : std::invalid_argument {
    explicit DegreeTooHighError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsb
