#pragma once

#include <stdexcept>
#include <string>

namespace collatz {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input is outside an operation's domain (n < 2, empty bit string, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The iteration did not reach 1 within the configured step cap. Signals
// either an insufficient cap or a Collatz counterexample; loops never
// run unbounded.
class CapExceeded : public Error {
public:
    CapExceeded(std::string n_decimal, std::uint64_t cap)
        : Error("step cap " + std::to_string(cap) + " exceeded for n=" + n_decimal),
          n_decimal_(std::move(n_decimal)),
          cap_(cap) {}

    const std::string& n_decimal() const noexcept { return n_decimal_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::string n_decimal_;
    std::uint64_t cap_;
};

// A bit string is not the encoding of any n >= 2.
class InvalidEncoding : public Error {
public:
    using Error::Error;
};

// A request exceeds a configured resource limit (e.g. dragon order cap).
class ResourceError : public Error {
public:
    using Error::Error;
};

// Filesystem failure while writing a report or checkpoint.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace collatz
