#pragma once

#include <stdexcept>
#include <string>

namespace relqhe {

enum class ErrorKind {
    NonPositiveParameter,
    BadTolerance,
    BadParameter,
    LevelOutOfRange,
    SeriesNotConverged,
    EvaluationFailure,
    Overflow,
    DomainError,
    DegenerateDenominator,
    BadBasisSize,
    TemperatureOrder,
    ParseError,
    UnknownKey,
    ConflictingFlags,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace relqhe
