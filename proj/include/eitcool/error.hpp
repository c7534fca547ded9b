#pragma once

#include <stdexcept>
#include <string>

namespace eitcool {

enum class ErrorCode {
    InvalidParameter,
    UnknownKey,
    UnitConflict,
    UnsupportedRegime,
    ZeroDenominator,
    PoleAtDip,
    DegenerateSpectrum,
    TruncationTooSmall,
    Divergence,
};

const char* to_string(ErrorCode code);

// Input problems (bad keys, out-of-range values, unsupported regime).
// Everything else is a numerical failure.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace eitcool
