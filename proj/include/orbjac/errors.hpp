#pragma once

#include <stdexcept>
#include <string>

namespace orbjac {

// Base for everything thrown by this library. `kind` is a stable machine
// readable tag (e.g. "SyntaxError", "SocleMismatch"); `what()` carries the
// human readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Bad user input (malformed polynomial, non-symmetry generator, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// Violated internal invariant. Cannot occur for valid inputs; reaching one
// of these means a bug in the library itself.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace orbjac
