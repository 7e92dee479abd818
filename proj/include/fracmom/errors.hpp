#pragma once

#include <stdexcept>
#include <string>

namespace fracmom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an argument lies within kPoleTolerance of a pole of Gamma.
class PoleError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class StripError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate)
        : Error(what + " (achieved error estimate " + std::to_string(estimate) + ")"),
          estimate_(estimate) {}

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class EmptyStripError : public Error {
public:
    using Error::Error;
};

class AllSamplesDegenerateError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace fracmom
