#pragma once

#include <stdexcept>
#include <string>

namespace mixlab {

enum class ErrorCode {
    Cycle,
    DuplicateName,
    NegativeNoiseVariance,
    UnknownVariable,
    InfeasibleStandardization,
    NotPositiveDefinite,
    SingularDesign,
    QTooLargeForN,
    ZeroRho,
    UnsupportedScenario,
    PolicyScenarioMismatch,
    Config,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

struct CycleError : Error {
    explicit CycleError(const std::string& message) : Error(ErrorCode::Cycle, message) {}
};

struct DuplicateNameError : Error {
    explicit DuplicateNameError(const std::string& message)
        : Error(ErrorCode::DuplicateName, message) {}
};

struct NegativeNoiseVarianceError : Error {
    explicit NegativeNoiseVarianceError(const std::string& message)
        : Error(ErrorCode::NegativeNoiseVariance, message) {}
};

struct UnknownVariableError : Error {
    explicit UnknownVariableError(const std::string& name)
        : Error(ErrorCode::UnknownVariable, "unknown variable: " + name), variable(name) {}
    std::string variable;
};

struct InfeasibleStandardizationError : Error {
    InfeasibleStandardizationError(const std::string& name, double required)
        : Error(ErrorCode::InfeasibleStandardization,
                "standardizing " + name + " requires negative noise variance " +
                    std::to_string(required)),
          variable(name), required_variance(required) {}
    std::string variable;
    double required_variance;
};

struct NotPositiveDefiniteError : Error {
    NotPositiveDefiniteError(std::size_t pivot, double value)
        : Error(ErrorCode::NotPositiveDefinite,
                "matrix is not positive definite: pivot " + std::to_string(pivot) +
                    " is " + std::to_string(value)),
          pivot_index(pivot), pivot_value(value) {}
    std::size_t pivot_index;
    double pivot_value;
};

struct SingularDesignError : Error {
    explicit SingularDesignError(double condition)
        : Error(ErrorCode::SingularDesign,
                "regressor covariance is numerically singular (condition " +
                    std::to_string(condition) + ")"),
          condition_number(condition) {}
    double condition_number;
};

struct QTooLargeForNError : Error {
    QTooLargeForNError(int q, long long n)
        : Error(ErrorCode::QTooLargeForN,
                "quantile count " + std::to_string(q) + " exceeds row count " +
                    std::to_string(n)) {}
};

struct ZeroRhoError : Error {
    ZeroRhoError() : Error(ErrorCode::ZeroRho, "reparameterization is undefined at rho = 0") {}
};

struct UnsupportedScenarioError : Error {
    explicit UnsupportedScenarioError(const std::string& message)
        : Error(ErrorCode::UnsupportedScenario, message) {}
};

struct PolicyScenarioMismatchError : Error {
    explicit PolicyScenarioMismatchError(const std::string& message)
        : Error(ErrorCode::PolicyScenarioMismatch, message) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& message) : Error(ErrorCode::Config, message) {}
};

}  // namespace mixlab
