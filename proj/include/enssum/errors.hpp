#pragma once

#include <stdexcept>
#include <string>

namespace enssum {

// Error taxonomy shared by the library and the CLI. Every exception carries a
// stable short code; the CLI prints the code in machine-parsable error records
// and maps it to an exit status (capacity -> 3, everything else -> 2).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error("domain", m) {}
};

// Malformed or out-of-range user input (tables, files, grids).
struct ValidationError : Error {
    explicit ValidationError(const std::string& m) : Error("validation", m) {}
};

// Request exceeds the implementation limits (register sizes, trial counts).
struct CapacityError : Error {
    explicit CapacityError(const std::string& m) : Error("capacity", m) {}
};

// Parameters describe a physically invalid model (e.g. a mixture that would
// need negative weights).
struct ModelValidityError : Error {
    explicit ModelValidityError(const std::string& m) : Error("model", m) {}
};

// An oracle callable broke its contract (returned a value outside [0,1]).
struct OracleContractError : Error {
    explicit OracleContractError(const std::string& m) : Error("oracle_contract", m) {}
};

// Invalid numeric parameter (non-positive SNR, zero trials, ...).
struct ParameterError : Error {
    explicit ParameterError(const std::string& m) : Error("parameter", m) {}
};

// Bad command line usage (unknown subcommand, unknown integrand id, ...).
struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error("usage", m) {}
};

}  // namespace enssum
