#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nufact {

/// Base class for failures that come from the mathematical input rather than
/// from how the library was called (bad group, sequence not zero-sum, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed one of the configured size caps.
class CapExceeded : public DomainError {
public:
    CapExceeded(const std::string& what, std::uint64_t value, std::uint64_t cap)
        : DomainError(what + " (" + std::to_string(value) + " > cap " + std::to_string(cap) + ")"),
          value_(value), cap_(cap) {}

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t value_;
    std::uint64_t cap_;
};

/// Malformed textual input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration limits shared by the brute-force routines.
struct Caps {
    std::uint64_t group_elements = 1'000'000;  // enumerate_elements
    std::uint64_t group_order = 64;            // zero-sum searches
    std::uint64_t sequence_length = 24;
    std::uint64_t norm = 1'000'000;            // quadratic order scans
    std::uint64_t ideal_box = 10'000'000;      // exponent-matrix enumeration
};

}  // namespace nufact
