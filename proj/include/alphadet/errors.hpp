#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alphadet {

enum class errc {
    size_cap_exceeded,
    not_divisible,
    division_by_zero_poly,
    not_square,
    dimension_mismatch,
    shape_weight_mismatch,
    no_factor_found,
    non_unique_factor,
    identity_violation,
    parse_error,
    invalid_argument,
};

inline std::string_view errc_name(errc code) noexcept
{
    switch (code) {
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::not_divisible: return "NotDivisible";
    case errc::division_by_zero_poly: return "DivisionByZeroPoly";
    case errc::not_square: return "NotSquare";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::shape_weight_mismatch: return "ShapeWeightMismatch";
    case errc::no_factor_found: return "NoFactorFound";
    case errc::non_unique_factor: return "NonUniqueFactor";
    case errc::identity_violation: return "IdentityViolation";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this exception; `code()`
/// identifies the contract that was violated.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what)
        , code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline void require_cap(bool ok, const std::string& what)
{
    if (!ok)
        throw error(errc::size_cap_exceeded, what);
}

} // namespace alphadet
