#ifndef SRM_ERRORS_HPP
#define SRM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srm {

// Stable error categories, shared with the C API and the CLI exit codes.
enum class ErrorCode : int {
    argument = 2,      // misuse of the library surface (bad index, bad option)
    validation = 3,    // malformed instance data
    io = 4,            // file system failures
    inconsistent = 5,  // zero-probability observation / unreachable state
    internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what)
        : Error(ErrorCode::validation, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

// Raised when conditioning on a feedback value that has probability zero
// under the current posterior, or when a state has no surviving type.
class InconsistentFeedbackError : public Error {
public:
    explicit InconsistentFeedbackError(const std::string& what)
        : Error(ErrorCode::inconsistent, what) {}
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what)
        : Error(ErrorCode::argument, what) {}
};

}  // namespace srm

#endif  // SRM_ERRORS_HPP
