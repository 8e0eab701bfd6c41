#ifndef BS3_ERRORS_HPP
#define BS3_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bs3 {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          detail_(what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t position_;
};

/// A mathematical hypothesis of an operation is violated by its input
/// (non-homogeneous ideal, non-isolated singularity, decomposable arrangement, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured computation limit (Buchberger step cap) was exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Internal results contradict each other; indicates a bug, not bad input.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace bs3

#endif  // BS3_ERRORS_HPP
