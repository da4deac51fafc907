#pragma once

#include <stdexcept>
#include <string>

namespace moser {

// Bad input: malformed spec strings, broken table files, violated
// preconditions (size caps, empty connection sets, ...).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical guarantee failed at runtime (e.g. a max-flow came out
// below the value a theorem promises). Always an implementation bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace moser
