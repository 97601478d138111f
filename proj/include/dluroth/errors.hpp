#pragma once

#include <stdexcept>
#include <string>

namespace dluroth {

// Syntax errors from the input grammar; carries a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Structurally invalid input: zero denominator, constant generator,
// purely algebraic (order-0) systems.
class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A probabilistic step ran out of retries, or a search cap was hit.
class RetryError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Groebner oracle was requested but its size guard tripped.
class OracleUnavailableError : public RetryError {
    using RetryError::RetryError;
};

// The saturation polynomial vanishes at a proposed evaluation point.
class SingularPointError : public RetryError {
    using RetryError::RetryError;
};

// The Groebner oracle and the sampling route disagree.
class OracleMismatchError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dluroth
