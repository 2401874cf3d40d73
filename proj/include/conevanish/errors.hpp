#ifndef CONEVANISH_ERRORS_HPP
#define CONEVANISH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conevanish {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lexical or grammatical problem in textual input; positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    std::size_t line = 0;
    std::size_t col = 0;
};

// Operands live in different rings (or fields).
struct RingMismatchError : Error {
    using Error::Error;
};

// A step budget (pair limit, degree cap) was exhausted before completion.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Precondition violation on mathematically meaningful input
// (non-homogeneous where homogeneity is required, unit ideal, index out of
// range, singular input to a pipeline that requires smoothness, ...).
struct DomainError : Error {
    using Error::Error;
};

} // namespace conevanish

#endif
