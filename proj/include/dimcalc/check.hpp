#pragma once

// Dimensional homogeneity checking for equations over a problem's variables.
//
//     equation := sum '=' sum
//     sum      := ['+'|'-'] term (('+'|'-') term)*
//     term     := power (('*'|'/') power)*
//     power    := primary ['^' int]
//     primary  := variable | number | '(' sum ')'
//
// Numbers are dimensionless. A sum takes the dimension of its first term;
// every '+', '-' and '=' joining unequal dimensions is reported.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dimcalc/problem.hpp"

namespace dimcalc {

enum class Side { Left, Right };

struct TermDimension {
    Side side;
    std::string text;
    ExpVec dim;
};

struct Violation {
    char junction; // '+', '-' or '='
    std::size_t column;
    std::string left_text;
    std::string right_text;
    ExpVec left;
    ExpVec right;
};

struct CheckResult {
    std::vector<TermDimension> terms; // top-level additive terms of both sides
    std::vector<Violation> violations;
    ExpVec lhs;
    ExpVec rhs;

    bool homogeneous() const noexcept { return violations.empty(); }
};

/// Throws ParseError (code ParseError, or UnknownVariable for undeclared names).
CheckResult check_equation(const ProblemFile& problem, std::string_view equation);

std::string format_check(const ProblemFile& problem, const CheckResult& result);

} // namespace dimcalc
