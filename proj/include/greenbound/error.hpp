#pragma once

#include <stdexcept>
#include <string>

namespace greenbound {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: non-finite entries, dimension mismatch, t = 0, ...
class InvalidInput : public Error {
public:
    using Error::Error;
};

class EigenFailure : public Error {
public:
    using Error::Error;
};

/// Result would overflow the representable range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An analytic function could not be expanded at a point (pole, non-finite value).
class EvaluationError : public Error {
public:
    using Error::Error;
};

class ContourError : public Error {
public:
    using Error::Error;
};

class DistinctnessViolation : public Error {
public:
    using Error::Error;
};

/// Some eigenvalue lies on (or numerically on) the imaginary axis.
class DichotomyViolation : public Error {
public:
    using Error::Error;
};

class WindowError : public Error {
public:
    using Error::Error;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

}  // namespace greenbound
