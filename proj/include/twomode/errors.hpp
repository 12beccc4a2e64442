// errors.hpp: exception hierarchy; the category decides the CLI exit code

#pragma once

#include <stdexcept>
#include <string>

namespace twomode {

enum class ErrorCategory {
    Input,     // malformed or out-of-domain input (exit 2)
    Stability, // parameters without a stable/unique solution (exit 3)
    Numerical, // integration or invariant failures (exit 4)
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

#define TWOMODE_DEFINE_ERROR(Name, Category)                                   \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what)                                 \
            : Error(ErrorCategory::Category, #Name ": " + what) {}             \
    }

TWOMODE_DEFINE_ERROR(NegativeParameter, Input);
TWOMODE_DEFINE_ERROR(AsymmetricDamping, Input);
TWOMODE_DEFINE_ERROR(AsymmetricBath, Input);
TWOMODE_DEFINE_ERROR(CutoffTooSmall, Input);
TWOMODE_DEFINE_ERROR(StabilityViolation, Stability);
TWOMODE_DEFINE_ERROR(NotHurwitz, Stability);
TWOMODE_DEFINE_ERROR(StepSizeUnderflow, Numerical);
TWOMODE_DEFINE_ERROR(PhysicalityLoss, Numerical);
TWOMODE_DEFINE_ERROR(UnphysicalCovariance, Numerical);
TWOMODE_DEFINE_ERROR(NonzeroMean, Numerical);

#undef TWOMODE_DEFINE_ERROR

/// Configuration file problem. `line` is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
public:
    ConfigError(int line, const std::string& field, const std::string& what)
        : Error(ErrorCategory::Input, format(line, field, what)), line_(line), field_(field) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(int line, const std::string& field, const std::string& what) {
        std::string msg = "ConfigError";
        if (line > 0) msg += " at line " + std::to_string(line);
        if (!field.empty()) msg += " (" + field + ")";
        return msg + ": " + what;
    }

    int line_;
    std::string field_;
};

} // namespace twomode
