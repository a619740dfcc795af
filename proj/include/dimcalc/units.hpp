#pragma once

// Unit registry: named units are quantities of one space, resolved eagerly to
// (measure, base exponents) form. Base units have measure 1, so coherent units
// are exactly the measure-1 quantities.
//
// Unit expressions: names with an optional ^int, joined by '*', whitespace or
// '/', where '/' inverts only the factor that follows it ("kg*m/s^2",
// "kg m s^-2"). A bare 1 contributes nothing ("1/s").
//
// Units files:
//
//     # comment
//     base m s kg
//     unit cm = 1/100 m
//     unit N  = 1 kg*m/s^2

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dimcalc/quantity.hpp"

namespace dimcalc {

struct UnitFactor {
    std::string name;
    Integer exponent;

    friend bool operator==(const UnitFactor&, const UnitFactor&) = default;
};

struct UnitExpr {
    std::vector<UnitFactor> factors;

    friend bool operator==(const UnitExpr&, const UnitExpr&) = default;
};

/// Throws ParseError.
UnitExpr parse_unit_expr(std::string_view text);
std::string to_string(const UnitExpr& e);

/// Accepts integers, decimals, scientific notation and p/q fractions.
Rational parse_rational(std::string_view text);

class UnitRegistry {
public:
    /// Registers every basis name of `space` as a base unit of measure 1.
    explicit UnitRegistry(SpacePtr space);

    const SpacePtr& space() const noexcept { return space_; }

    /// Throws DuplicateUnit, NotInvertible or SpaceMismatch.
    void define_unit(std::string name, const Quantity& value);

    bool contains(std::string_view name) const;
    /// Throws UnknownUnit.
    const Quantity& unit(std::string_view name) const;
    std::vector<std::string> names() const;

    /// Throws UnknownUnit.
    Quantity resolve(const UnitExpr& e) const;
    /// "<rational> <unit-expr>". Throws ParseError or UnknownUnit.
    Quantity parse_quantity_literal(std::string_view text) const;
    /// The unique mu with q = mu * target. Throws NotEquidimensional or UnknownUnit.
    Rational convert(const Quantity& q, const UnitExpr& target) const;
    Quantity coherent_unit_for(const ExpVec& d) const;
    /// "<measure> <unit-expr>" with the measure written as p/q.
    std::string render(const Quantity& q, const UnitExpr& unit) const;

private:
    SpacePtr space_;
    std::map<std::string, Quantity, std::less<>> units_;
};

/// Throws ParseError with the offending line, or the registry's own errors.
UnitRegistry parse_units_file(std::string_view text, ScalarMode mode = ScalarMode::Positive);

/// Decimal rendering with `digits` significant digits, for display only.
std::string format_decimal(const Rational& value, int digits = 15);

} // namespace dimcalc
