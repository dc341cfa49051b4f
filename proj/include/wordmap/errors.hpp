#ifndef WORDMAP_ERRORS_HPP
#define WORDMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wordmap {

/// Bad caller-supplied value (usage errors; CLI exit code 1).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File system / encoding / format problems (CLI exit code 2).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed content in an input file, with a 1-based line number.
class ParseError : public IoError {
public:
    ParseError(const std::string& what, std::size_t line)
        : IoError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : IoError(what), line_(0) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Content that parses but violates an invariant.
class ValidationError : public IoError {
public:
    using IoError::IoError;
};

/// Numerical failure (solver non-convergence etc.; CLI exit code 3).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wordmap

#endif
