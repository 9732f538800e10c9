#pragma once

#include <stdexcept>
#include <string>

namespace hgf {

// Every domain error raised by the library derives from hgf::Error so that
// callers (the CLI in particular) can separate usage problems from bugs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAnOddPrime : public Error {
public:
    explicit NotAnOddPrime(long long p)
        : Error("not an odd prime: " + std::to_string(p)) {}
};

class ZeroArgument : public Error {
public:
    using Error::Error;
};

class ConductorMismatch : public Error {
public:
    ConductorMismatch(unsigned long a, unsigned long b)
        : Error("conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ConductorTooLarge : public Error {
public:
    explicit ConductorTooLarge(long long m)
        : Error("conductor out of range [1, 10000]: " + std::to_string(m)) {}
};

class CoefficientOverflow : public Error {
public:
    CoefficientOverflow() : Error("group-ring coefficient overflow") {}
};

class NonRationalResult : public Error {
public:
    using Error::Error;
};

class DenominatorDivisibleByP : public Error {
public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class ArgumentTooLarge : public Error {
public:
    using Error::Error;
};

class TZero : public Error {
public:
    TZero() : Error("hypergeometric argument t must be nonzero in F_p") {}
};

class ModulusOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace hgf
