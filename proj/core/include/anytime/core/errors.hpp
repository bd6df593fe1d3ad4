#ifndef ANYTIME_CORE_ERRORS_HPP
#define ANYTIME_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anytime {

/// Malformed input text.  line() is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An oracle or harness ran into its hard resource cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace anytime

#endif
