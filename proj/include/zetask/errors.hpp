#pragma once

#include <stdexcept>
#include <string>

namespace zetask {

// Invalid or out-of-contract input data (CLI exit code 1).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A bug in this library, not in the input (CLI exit code 3).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace zetask
