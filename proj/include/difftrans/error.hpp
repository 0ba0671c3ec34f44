#pragma once

#include <stdexcept>
#include <string>

namespace difftrans {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid mathematical input (zero polynomial where nonzero required, a = 0, ...).
struct DomainError : Error {
    using Error::Error;
};

// h = 0 or other invalid step.
struct StepError : Error {
    using Error::Error;
};

// Gauge or inverse requested for a singular matrix.
struct SingularMatrixError : Error {
    using Error::Error;
};

// Exact evaluation impossible (negative multiplier, pole on the orbit, ...).
struct EvaluationError : Error {
    using Error::Error;
};

// Result exists mathematically but is too large to materialize.
struct ResourceError : Error {
    using Error::Error;
};

// Text input rejected; carries a 1-based position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error("syntax error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace difftrans
