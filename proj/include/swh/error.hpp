#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swh {

// Base for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed polynomial text; `position` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Input violates a mathematical hypothesis (non-isolated, reducible, smooth, ...).
class HypothesisError : public Error {
public:
    using Error::Error;
};

// Internal consistency check failed: two independent routes disagree.
class CertificationError : public Error {
public:
    using Error::Error;
};

}  // namespace swh
