#ifndef WSNASH_ERRORS_HPP
#define WSNASH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wsnash {

/// Malformed input text; line/col are 1-based positions of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t col)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + message),
          line_(line),
          col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

/// A configured resource cap (pair budget, enumeration width) was exceeded.
/// Distinct from GuaranteeError: hitting a budget says nothing about the game.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The solver finished but its output contradicts a proven guarantee.
/// Reaching this indicates an implementation defect, not a bad input.
class GuaranteeError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace wsnash

#endif
