#pragma once

#include <stdexcept>
#include <string>

namespace lywb {

enum class ErrorKind {
    DivisionByZero,
    Singular,
    NotSymmetric,
    Degenerate,
    FieldError,
    DimensionMismatch,
    NotSkew,
    NotLie,
    InvalidAlgebra,
    InvalidRepresentation,
    InvalidPreLy,
    NotInvolution,
    NotProduct,
    NotComplexStructure,
    NotPerfect,
    NotIso,
    NotInvariant,
    NotPositiveDefinite,
    NotSymplectic,
    NotComplementary,
    NotIsotropic,
    NotSubalgebra,
    NotKahlerPair,
    NotParaKahler,
    NotPseudoKahler,
    PreconditionFailed,
    ZeroParameter,
    UnknownName,
    ParseError,
    MissingObject,
    Internal,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const { return kind_; }
    // The payload in parentheses, e.g. the failing prerequisite or the missing object name.
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

class SingularError : public Error {
public:
    SingularError(long rank, long size)
        : Error(ErrorKind::Singular, "rank " + std::to_string(rank) + " of " + std::to_string(size)), rank_(rank) {}
    long rank() const { return rank_; }

private:
    long rank_;
};

}  // namespace lywb
