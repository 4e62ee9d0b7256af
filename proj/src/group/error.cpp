#include "epgdom/error.hpp"

namespace epgdom {

auto to_string(ErrorCode code) -> const char *
{
    switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::InvalidQuaternionOrder: return "InvalidQuaternionOrder";
    case ErrorCode::InvalidHeisenbergPrime: return "InvalidHeisenbergPrime";
    case ErrorCode::NonPrimeBase: return "NonPrimeBase";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotAPGroup: return "NotAPGroup";
    case ErrorCode::ModeError: return "ModeError";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ProfileInvalid: return "ProfileInvalid";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string & message) :
    std::runtime_error(message),
    _code(code)
{
}

NotAGroupError::NotAGroupError(const std::string & reason) :
    Error(ErrorCode::NotAGroup, "not a group: " + reason),
    _reason(reason)
{
}

NotNilpotentError::NotNilpotentError(std::uint64_t prime) :
    Error(ErrorCode::NotNilpotent,
          "group is not nilpotent: the " + std::to_string(prime) + "-elements are not closed under multiplication"),
    _prime(prime)
{
}

ResourceLimitError::ResourceLimitError(std::uint64_t budget) :
    Error(ErrorCode::ResourceLimit, "search node budget of " + std::to_string(budget) + " exceeded"),
    _budget(budget)
{
}

} // namespace epgdom
