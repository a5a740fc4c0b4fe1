#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Exit codes used by the command-line tool; each error type maps to one.
enum class ExitCode : int {
    success = 0,
    usage = 1,
    parse = 2,
    limits = 3,
    io = 4,
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual ExitCode exit_code() const noexcept = 0;
};

/// Precondition violated by caller-supplied values.
class InputError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::usage; }
};

/// Malformed graph or coloring file.
class ParseError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::parse; }
};

/// A configured size or search budget was exceeded.
class LimitsError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::limits; }
};

class IoError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::io; }
};

/// An internal consistency check failed; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::usage; }
};

} // namespace ramsey
