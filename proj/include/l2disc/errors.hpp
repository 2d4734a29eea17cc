#pragma once

#include <stdexcept>
#include <string>

namespace l2disc {

// Precondition and domain failures are reported by type; messages carry the
// offending values.

struct EmptyQuotients : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPositiveQuotient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IntegerOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct NonPositiveModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

struct EmptyPointSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InexactDyadicRepresentation : std::domain_error {
    using std::domain_error::domain_error;
};

struct TooManyPoints : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonCoprime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A squared discrepancy evaluated below -1e-12. Values in (-1e-12, 0) are
// rounding noise and get clamped; anything lower means the evaluator itself
// is broken.
struct NegativeDiscrepancy : std::logic_error {
    using std::logic_error::logic_error;
};

struct BadParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownTable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MethodUnsupportedForInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace l2disc
