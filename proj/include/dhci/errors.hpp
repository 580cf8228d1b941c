#pragma once

#include <stdexcept>
#include <string>

namespace dhci {

// A domain contract was violated: bad thresholds, size mismatches, an empty
// LSC set, a strategy index outside its range, ...
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The instance exceeds a documented storage or analysis limit.
struct CapacityError : ContractError {
    using ContractError::ContractError;
};

// Mode rejection sampling gave up.
struct GenerationError : std::runtime_error {
    int tries;
    GenerationError(const std::string& what, int tries_attempted)
        : std::runtime_error(what), tries(tries_attempted) {}
};

// A persisted artifact (mode file, image) could not be parsed.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PgmError : FormatError {
    enum class Code { BadMagic, BadHeader, UnsupportedDepth, Truncated };
    Code code;
    PgmError(Code c, const std::string& what) : FormatError(what), code(c) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dhci
