#pragma once

#include <stdexcept>
#include <string>

namespace mhl {

enum class ErrorCode {
    DimensionMismatch = 1,
    WellDefinednessViolation,
    NonSplitSpectrum,
    NotHermitian,
    NotNilpotent,
    FiltrationNotPreserved,
    ParityViolation,
    NotInvertible,
    NotICSum,
    NotUnipotent,
    NotOrbit,
    InvalidFiltration,
    Parse,
    Schema,
    Unsupported,
    Internal
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool cond, ErrorCode c, const std::string& msg)
{
    if (!cond)
        throw Error(c, msg);
}

} // namespace mhl
