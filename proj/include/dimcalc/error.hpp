#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dimcalc {

enum class Errc {
    InadmissibleMeasure,
    SpaceMismatch,
    NotInvertible,
    NotEquidimensional,
    ModeForbidsNegation,
    NotABasis,
    ExponentsNotDivisible,
    MeasureNotPerfectPower,
    NonPositiveMeasure,
    IndexOutOfRange,
    DependentColumns,
    LengthMismatch,
    DuplicateName,
    UnknownName,
    ModelInvalid,
    DuplicateUnit,
    UnknownUnit,
    UnknownVariable,
    ParseError,
    SemanticError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    Errc code() const noexcept { return code_; }
    /// The message without the error-kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

/// Error raised by the text front ends. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message)
        : Error(code, located(line, column, message)), line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// The message without position or kind.
    const std::string& message() const noexcept { return message_; }

private:
    static std::string located(std::size_t line, std::size_t column, const std::string& message) {
        if (line == 0) return message;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace dimcalc
