#pragma once

#include <stdexcept>
#include <string>

namespace foamlab {

/// Raised for invalid inputs or failed mathematical preconditions.
/// The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Text-format error carrying a 1-based line and column.
class ParseError : public DomainError {
public:
    ParseError(int line, int col, const std::string& msg)
        : DomainError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace foamlab
