#pragma once

#include <stdexcept>
#include <string>

namespace apostol {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series constant (or leading) coefficient is not an invertible rational.
class NotAUnit : public Error {
public:
    using Error::Error;
};

class ValuationMismatch : public Error {
public:
    using Error::Error;
};

/// A coefficient beyond the known truncation order was requested.
class OrderExceeded : public Error {
public:
    using Error::Error;
};

class ValuationExceedsNumerator : public Error {
public:
    using Error::Error;
};

/// A parameter bundle violates a family invariant.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace apostol
