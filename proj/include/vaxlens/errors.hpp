#pragma once

#include <stdexcept>
#include <string>

namespace vaxlens {

// Error taxonomy used across the toolkit. The CLI maps these to exit codes:
// contract/config/schema/lookup/io -> 1, backend -> 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition or an invariant was broken.
struct ContractError : Error {
    using Error::Error;
};

// Bad or inconsistent configuration (periods overlap, empty keyword list, ...).
struct ConfigError : Error {
    using Error::Error;
};

// A data file does not conform to its column/record contract.
struct SchemaError : Error {
    using Error::Error;
};

// Unknown label identifier or non-canonical description text.
struct LookupError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Model backend failures: load errors, shape mismatches, non-finite loss.
struct BackendError : Error {
    using Error::Error;
};

}  // namespace vaxlens
