#ifndef SPECTILE_ERROR_HPP
#define SPECTILE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectile {

enum class ErrorCode {
    NotFullDimensional,
    DimensionMismatch,
    Unbounded,
    Empty,
    SingularMap,
    ZeroDimensionalFace,
    NotSymmetric,
    PreconditionFailed,
    NotALattice,
    NotATiler,
    ZeroFrequency,
    NotStandardPosition,
    UnsupportedDimension,
    WindowTooSmall,
    ThetaOutOfRange,
    RankDeficient,
    ParseError,
    FormatDimensionMismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace spectile

#endif  // SPECTILE_ERROR_HPP
