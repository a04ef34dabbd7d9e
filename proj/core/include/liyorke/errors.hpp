#pragma once

#include <stdexcept>
#include <string>

namespace liyorke {

/// Input outside a documented precondition (bad parameter, wrong domain,
/// malformed configuration). Maps to process exit code 1 in the CLI.
class RejectedInput : public std::invalid_argument {
public:
    explicit RejectedInput(const std::string& what) : std::invalid_argument(what) {}
    RejectedInput(const std::string& module, const std::string& detail)
        : std::invalid_argument(module + ": " + detail) {}
};

/// The requested computation cannot be certified at the working precision.
/// Callers should raise precision or reduce depth. CLI exit code 2.
class PrecisionExhausted : public std::runtime_error {
public:
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
    PrecisionExhausted(const std::string& module, const std::string& detail)
        : std::runtime_error(module + ": " + detail) {}
};

/// A value left the representable floating-point (or integer) range.
/// CLI exit code 3.
class NumericalRange : public std::runtime_error {
public:
    explicit NumericalRange(const std::string& what) : std::runtime_error(what) {}
    NumericalRange(const std::string& module, const std::string& detail)
        : std::runtime_error(module + ": " + detail) {}
};

} // namespace liyorke
