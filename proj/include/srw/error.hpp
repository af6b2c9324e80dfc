#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srw {

enum class ErrorCode {
    Parse = 1,
    Invalid = 2,
    Budget = 3,
    Horizon = 4,
    Undecided = 5,
    Unsupported = 6,
    Overflow = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry the byte offset into the offending text.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : Error(ErrorCode::Parse, "at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace srw
