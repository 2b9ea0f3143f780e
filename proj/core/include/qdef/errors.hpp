#pragma once

#include <stdexcept>
#include <string>

namespace qdef {

/// Thrown when a NaN or infinity reaches a value constructor. The rest of
/// the library assumes every stored coefficient is a finite real.
class NonFiniteValue : public std::invalid_argument {
public:
    explicit NonFiniteValue(const std::string& what) : std::invalid_argument(what) {}
};

/// Quadratic half-line test and the univariate minimizer require a strictly
/// positive leading coefficient.
class NonPositiveLeadingCoefficient : public std::domain_error {
public:
    explicit NonPositiveLeadingCoefficient(const std::string& what) : std::domain_error(what) {}
};

/// The pointwise h-reduction is only defined for lambda_H > 0.
class NonPositiveLambdaH : public std::domain_error {
public:
    explicit NonPositiveLambdaH(const std::string& what) : std::domain_error(what) {}
};

} // namespace qdef
