#include "dimcalc/units.hpp"

#include <cstdio>
#include <sstream>

#include "dimcalc/error.hpp"
#include "scanner.hpp"

namespace dimcalc {

namespace {

UnitExpr parse_unit_expr(detail::Scanner& s) {
    UnitExpr e;
    bool first = true;
    while (!s.at_end()) {
        bool invert = false;
        if (!first) {
            if (s.accept('/'))
                invert = true;
            else
                s.accept('*');
        }
        first = false;
        if (s.peek() == '1' && !std::isdigit(static_cast<unsigned char>(s.rest().size() > 1 ? s.rest()[1] : ' '))) {
            s.accept('1');
            continue;
        }
        auto name = s.identifier();
        if (!name) s.fail("expected a unit name");
        Integer exponent = 1;
        if (s.accept('^')) {
            auto x = s.signed_integer();
            if (!x) s.fail("expected an integer exponent");
            exponent = *x;
        }
        if (invert) exponent = -exponent;
        e.factors.push_back(UnitFactor{std::move(*name), std::move(exponent)});
    }
    return e;
}

} // namespace

UnitExpr parse_unit_expr(std::string_view text) {
    detail::Scanner s(text);
    return parse_unit_expr(s);
}

std::string to_string(const UnitExpr& e) {
    if (e.factors.empty()) return "1";
    std::string out;
    for (const auto& f : e.factors) {
        if (!out.empty()) out += "*";
        out += f.name;
        if (f.exponent != 1) out += "^" + f.exponent.get_str();
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    detail::Scanner s(text);
    auto v = s.rational();
    if (!v || !s.at_end()) s.fail("not a rational number: '" + std::string(text) + "'");
    return *v;
}

UnitRegistry::UnitRegistry(SpacePtr space) : space_(std::move(space)) {
    const auto& names = space_->base_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        ExpVec e(names.size());
        e[i] = 1;
        units_.emplace(names[i], q_new(1, std::move(e), space_));
    }
}

void UnitRegistry::define_unit(std::string name, const Quantity& value) {
    if (contains(name)) throw Error(Errc::DuplicateUnit, "unit '" + name + "' already defined");
    if (!same_space(*value.space(), *space_)) throw Error(Errc::SpaceMismatch, "unit '" + name + "'");
    if (sgn(value.measure()) == 0) throw Error(Errc::NotInvertible, "unit '" + name + "' has measure 0");
    units_.emplace(std::move(name), value);
}

bool UnitRegistry::contains(std::string_view name) const { return units_.find(name) != units_.end(); }

const Quantity& UnitRegistry::unit(std::string_view name) const {
    auto it = units_.find(name);
    if (it == units_.end()) throw Error(Errc::UnknownUnit, "'" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> UnitRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [n, q] : units_) out.push_back(n);
    return out;
}

Quantity UnitRegistry::resolve(const UnitExpr& e) const {
    Quantity q = unit_quantity(space_);
    for (const auto& f : e.factors) q = mul(q, powi(unit(f.name), f.exponent.get_si()));
    return q;
}

Quantity UnitRegistry::parse_quantity_literal(std::string_view text) const {
    detail::Scanner s(text);
    auto measure = s.rational();
    if (!measure) s.fail("expected a number at the start of a quantity literal");
    const UnitExpr e = parse_unit_expr(s);
    return smul(*measure, resolve(e));
}

Rational UnitRegistry::convert(const Quantity& q, const UnitExpr& target) const {
    const Quantity u = resolve(target);
    if (!equidim(q, u))
        throw Error(Errc::NotEquidimensional,
                    "cannot express " + to_string(q.exps()) + " in " + to_string(target) + " " + to_string(u.exps()));
    return q.measure() / u.measure();
}

Quantity UnitRegistry::coherent_unit_for(const ExpVec& d) const { return q_new(1, d, space_); }

std::string UnitRegistry::render(const Quantity& q, const UnitExpr& unit) const {
    return convert(q, unit).get_str() + " " + to_string(unit);
}

UnitRegistry parse_units_file(std::string_view text, ScalarMode mode) {
    std::optional<UnitRegistry> reg;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        detail::Scanner s(detail::strip_comment(raw), line_no);
        if (s.at_end()) continue;
        auto keyword = s.identifier();
        if (!keyword) s.fail("expected 'base' or 'unit'");
        if (*keyword == "base") {
            if (reg) s.fail("base units already declared");
            std::vector<std::string> names;
            while (!s.at_end()) {
                auto n = s.identifier();
                if (!n) s.fail("expected a base unit name");
                names.push_back(std::move(*n));
            }
            try {
                reg.emplace(make_space(std::move(names), mode));
            } catch (const Error& e) {
                s.fail(e.detail(), Errc::SemanticError);
            }
        } else if (*keyword == "unit") {
            if (!reg) s.fail("'unit' before the 'base' line", Errc::SemanticError);
            auto name = s.identifier();
            if (!name) s.fail("expected a unit name");
            s.expect('=', "'='");
            const std::size_t col = s.column();
            try {
                reg->define_unit(*name, reg->parse_quantity_literal(s.rest()));
            } catch (const ParseError& e) {
                throw ParseError(e.code(), line_no, col + e.column() - 1, e.message());
            } catch (const Error& e) {
                throw ParseError(e.code(), line_no, col, e.detail());
            }
        } else {
            s.fail("unknown keyword '" + *keyword + "'");
        }
    }
    if (!reg) throw ParseError(Errc::SemanticError, line_no, 0, "units file has no 'base' line");
    return std::move(*reg);
}

std::string format_decimal(const Rational& value, int digits) {
    mpf_class f(value, 256);
    mp_exp_t exp = 0;
    std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    if (mant.empty()) return "0";
    std::string sign;
    if (mant.front() == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    if (exp > 0 && exp <= 21) {
        if (static_cast<std::size_t>(exp) >= mant.size()) return sign + mant + std::string(exp - mant.size(), '0');
        return sign + mant.substr(0, exp) + "." + mant.substr(exp);
    }
    if (exp <= 0 && exp > -7) return sign + "0." + std::string(-exp, '0') + mant;
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    return out + "e" + std::to_string(exp - 1);
}

} // namespace dimcalc
