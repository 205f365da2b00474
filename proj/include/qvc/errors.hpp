#pragma once

#include <stdexcept>
#include <string>

namespace qvc {

// Thrown when circuit binding fails: arity mismatch between symbol lists
// and value vectors, or an angle still references a free symbol.
class BindingError : public std::runtime_error {
  public:
    explicit BindingError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by optimizers when an oracle returns a non-finite value.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by file readers; carries the offending line number when known.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

} // namespace qvc
