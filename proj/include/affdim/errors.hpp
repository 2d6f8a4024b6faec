#pragma once

#include <stdexcept>
#include <string>

namespace affdim {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// No certified simple dominant real eigenvalue for a word product; the
// multipositivity hypothesis fails (or cannot be verified) for that word.
class DominanceUnverified : public Error {
public:
    using Error::Error;
};

// The dominant eigenvalue enclosure contains zero.
class DegenerateProduct : public Error {
public:
    using Error::Error;
};

// A certified computation could not reach the requested accuracy within
// the precision-escalation cap.
class PrecisionInsufficient : public Error {
public:
    using Error::Error;
};

// The truncated determinant has no positive real root in the search range.
class NoRootFound : public Error {
public:
    using Error::Error;
};

// The pressure approximation does not straddle 1 on [k, k+1].
class BracketFailed : public Error {
public:
    using Error::Error;
};

class SecantDiverged : public Error {
public:
    using Error::Error;
};

// No sign pattern makes every wedge-power matrix entrywise nonnegative.
class NoPositiveSignPattern : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class PowerIterationStalled : public Error {
public:
    using Error::Error;
};

// Malformed configuration or input file.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace affdim
