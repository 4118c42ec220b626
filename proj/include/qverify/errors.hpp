#pragma once

#include <stdexcept>
#include <string>

namespace qverify {

// Base of every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InversionOfZero : public Error {
public:
    using Error::Error;
};

class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

// A coefficient was requested at or above the known precision.
class BeyondPrecision : public Error {
public:
    using Error::Error;
};

class PochhammerPole : public Error {
public:
    using Error::Error;
};

class DivergentProduct : public Error {
public:
    using Error::Error;
};

class DenominatorPole : public Error {
public:
    using Error::Error;
};

class NonterminatingBound : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

// Raised when a term comes back with a valuation below its declared lower
// bound. This is a bug in a term builder, never an input problem.
class ValuationBoundViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qverify
