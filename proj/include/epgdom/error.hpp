#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace epgdom {

enum class ErrorCode {
    MalformedToken,
    InvalidQuaternionOrder,
    InvalidHeisenbergPrime,
    NonPrimeBase,
    InvalidParameter,
    OrderExceedsCap,
    MalformedFile,
    NotAGroup,
    NotNilpotent,
    NotAPGroup,
    ModeError,
    ResourceLimit,
    TooLarge,
    ProfileInvalid,
    Io,
};

auto to_string(ErrorCode code) -> const char *;

/// Base of every error the library throws. `code()` lets callers map
/// failures onto exit statuses without string matching.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string & message);

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

class NotAGroupError : public Error
{
public:
    explicit NotAGroupError(const std::string & reason);

    auto reason() const -> const std::string & { return _reason; }

private:
    std::string _reason;
};

class NotNilpotentError : public Error
{
public:
    explicit NotNilpotentError(std::uint64_t prime);

    auto prime() const noexcept -> std::uint64_t { return _prime; }

private:
    std::uint64_t _prime;
};

class ResourceLimitError : public Error
{
public:
    explicit ResourceLimitError(std::uint64_t budget);

    auto budget() const noexcept -> std::uint64_t { return _budget; }

private:
    std::uint64_t _budget;
};

} // namespace epgdom
