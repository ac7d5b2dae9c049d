#ifndef QSTEEN_ERRORS_HPP
#define QSTEEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsteen {

/* All engine failures are thrown as subclasses of Error so callers can catch
 * either the broad class or the precise condition. Messages carry the
 * offending values; no error is ever signalled through a return code. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Scalar inversion requested for a Laurent polynomial with != 1 term.
class NotMonomialError : public Error {
public:
    using Error::Error;
};

// A T-exponent left the configured guard window (default +/- 2^16).
class ExponentOverflowError : public Error {
public:
    using Error::Error;
};

// Mixed-ring arithmetic, e.g. adding classes over different (m, k).
class RingMismatchError : public Error {
public:
    using Error::Error;
};

// Power or index outside the documented range of an operation.
class ExponentRangeError : public Error {
public:
    using Error::Error;
};

// Operation only implemented for twist k = 1.
class UnsupportedTwistError : public Error {
public:
    using Error::Error;
};

// An equivariant series acquired a term with h-exponent < 0.
class NegativeHExponentError : public Error {
public:
    using Error::Error;
};

// Series inversion with a constant term that is not a monomial times the unit.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

// Input to a quotient operation lies outside the distinguished basis span.
class NotInBasisError : public Error {
public:
    using Error::Error;
};

// Linear system has no solution (0 = nonzero after elimination).
class InconsistentSystemError : public Error {
public:
    using Error::Error;
};

// Vector/matrix sizes disagree, or a sphere dimension is out of range.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// Loop-space class outside the supported generator families.
class UnsupportedClassError : public Error {
public:
    using Error::Error;
};

// Invalid or inapplicable job parameters (reported per field).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Cache directory unusable or a cached entry failed to read/write.
class CacheIOError : public Error {
public:
    using Error::Error;
};

// Malformed JSON input (schema violation, non-canonical term list, ...).
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace qsteen

#endif
