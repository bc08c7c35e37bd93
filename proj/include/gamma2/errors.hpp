#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

/// Bad user input: malformed files, out-of-range parameters, invalid flags.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded (e.g. exact Cheeger enumeration size).
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace g2
