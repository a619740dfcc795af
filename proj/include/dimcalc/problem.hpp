#pragma once

// Problem files describe one dimensional-analysis problem:
//
//     # simple pendulum
//     base L T M
//     var t : T
//     var l : L
//     var m : M
//     var theta : 1
//     var g : L*T^-2
//     dependent t
//
// Dimension expressions are `1` or a product of base names with optional
// integer exponents joined by `*` or `/` (`/` inverts the next factor only).
// Optional `unit <name> = <literal>` lines define units over the bases.

#include <string>
#include <string_view>
#include <vector>

#include "dimcalc/analysis.hpp"
#include "dimcalc/quantity.hpp"

namespace dimcalc {

struct VarDecl {
    std::string name;
    ExpVec dim;

    friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

struct UnitDecl {
    std::string name;
    std::string literal;

    friend bool operator==(const UnitDecl&, const UnitDecl&) = default;
};

struct ProblemFile {
    std::vector<std::string> bases;
    std::vector<VarDecl> vars;
    std::string dependent;
    std::vector<UnitDecl> units;

    DimensionalMatrix matrix() const;
    const VarDecl* find_var(std::string_view name) const;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws ParseError (Errc::ParseError for syntax, Errc::SemanticError for
/// unknown bases, duplicate names and a missing or repeated dependent).
ProblemFile parse_problem(std::string_view text);

/// Canonical text that parses back to an equal ProblemFile.
std::string print_problem(const ProblemFile& p);

/// `1` for the zero vector, otherwise e.g. `L*T^-2`.
std::string format_dim_expr(const std::vector<std::string>& bases, const ExpVec& dim);

} // namespace dimcalc
