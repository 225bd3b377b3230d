#pragma once

#include <stdexcept>
#include <string>

namespace appell {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A moment was requested beyond what the distribution can supply
/// (e.g. a raw moment list that is too short).
class MomentUnavailable : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// The requested construction needs exact rational input.
class InexactUnsupported : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// Descartes' rule does not certify a unique positive root.
class NotSingleVariation : public Error {
public:
    using Error::Error;
};

class UnknownSuite : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace appell
