#pragma once

#include <stdexcept>
#include <string>

namespace bpa {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed BPA document or number text. The message carries line/column
/// information when the underlying parser provides it.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation argument violated its contract (length mismatch, sequence
/// too short, index out of range, non-finite value).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// The mass function failed axiom validation.
class InvalidBpaError : public Error {
public:
    using Error::Error;
};

/// The BPA network has too few nodes for the requested embedding; with the
/// default m = 2 the measure needs at least 3 nodes (an empty assignment or
/// a single assigned element is excluded by definition).
class TooFewNodesError : public Error {
public:
    TooFewNodesError(int node_count, int required)
        : Error("network has " + std::to_string(node_count) +
                " node(s) but the measure needs at least " + std::to_string(required) +
                "; a BPA that assigns nothing, or only a single element, has no "
                "computable integrity uncertainty"),
          node_count_(node_count),
          required_(required) {}

    int node_count() const noexcept { return node_count_; }
    int required() const noexcept { return required_; }

private:
    int node_count_;
    int required_;
};

/// The match tolerance r admits no matches at all for some window, so a
/// correlation count of zero would enter a logarithm.
class DegenerateToleranceError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure, distinct from syntax errors in file content.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace bpa
