#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nkji {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ViolationKind {
    NonStationary,
    SingularDenominator,
    NegativeScale,
    OutOfDomain,
    UnknownParameter
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string name;  // offending field, or the denominator label
    std::string detail;
};

// Raised when a parameter set is rejected. Carries every violated
// constraint, not just the first one found.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> v);
    const std::vector<Violation>& violations() const noexcept { return violations_; }
    bool names(const std::string& field) const;

private:
    std::vector<Violation> violations_;
};

class BudgetModeConflict : public Error {
public:
    BudgetModeConflict(double rho_g, double rho_tax);
};

class MissingState : public Error {
public:
    explicit MissingState(std::string symbol);
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

class UnknownShockKind : public Error {
public:
    explicit UnknownShockKind(const std::string& name);
};

// Numerical failures. The CLI maps these to exit status 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class SingularSystem : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class AnsatzInconsistent : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace nkji
