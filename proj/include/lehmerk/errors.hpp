#pragma once

#include <stdexcept>
#include <string>

namespace lehmerk {

struct NotSquarefree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Radicand is squarefree but its field is not on the class-number-one
// whitelist; admitting it would break the unique-factorization assumption
// every predicate in this library relies on.
struct UnsupportedField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotCoprime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested a prime-splitting question over the degree-one field (plain Q).
struct DegreeOne : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact integer arithmetic left the 64-bit word budget.
struct Overflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Enumeration or range request above the configured cap.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed; signals a bug in the
// totient computation, not bad user input.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace lehmerk
