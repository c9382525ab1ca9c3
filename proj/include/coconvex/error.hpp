#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coconvex {

enum class ErrorKind {
    InvalidInput,
    Overflow,
    NotStronglyConvex,
    NotFullDimensional,
    DegeneratePolytope,
    NotCobounded,
    CapExceeded,
    ConeMismatch,
    WrongArity,
    NonpositiveScalar,
    NotPrimary,
    ZeroPolynomial,
    NotPrimaryWithinCap,
    MonotonicityViolation,
    FitNotStabilized,
    NotIntegral,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace coconvex
