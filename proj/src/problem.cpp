#include "dimcalc/problem.hpp"

#include <algorithm>
#include <sstream>

#include "dimcalc/error.hpp"
#include "dimcalc/units.hpp"
#include "scanner.hpp"

namespace dimcalc {

namespace {

ExpVec parse_dim_expr(detail::Scanner& s, const std::vector<std::string>& bases) {
    ExpVec dim(bases.size());
    bool first = true;
    bool any = false;
    while (!s.at_end()) {
        bool invert = false;
        if (!first) {
            if (s.accept('/'))
                invert = true;
            else if (!s.accept('*'))
                s.fail("expected '*' or '/'");
        }
        first = false;
        any = true;
        if (s.peek() == '1') {
            const std::size_t col = s.column();
            auto one = s.signed_integer();
            if (!one || *one != 1) throw ParseError(Errc::ParseError, s.line(), col, "only 1 may appear as a number");
            continue;
        }
        const std::size_t col = s.column();
        auto name = s.identifier();
        if (!name) s.fail("expected a base dimension");
        auto it = std::find(bases.begin(), bases.end(), *name);
        if (it == bases.end())
            throw ParseError(Errc::SemanticError, s.line(), col, "unknown base '" + *name + "'");
        Integer e = 1;
        if (s.accept('^')) {
            auto x = s.signed_integer();
            if (!x) s.fail("expected an integer exponent");
            e = *x;
        }
        dim[static_cast<std::size_t>(it - bases.begin())] += invert ? Integer(-e) : e;
    }
    if (!any) s.fail("empty dimension expression");
    return dim;
}

} // namespace

ProblemFile parse_problem(std::string_view text) {
    ProblemFile p;
    bool have_dependent = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        detail::Scanner s(detail::strip_comment(raw), line_no);
        if (s.at_end()) continue;
        const std::size_t kw_col = s.column();
        auto keyword = s.identifier();
        if (!keyword) s.fail("expected 'base', 'var', 'dependent' or 'unit'");

        if (*keyword == "base") {
            if (!p.vars.empty()) s.fail("bases must be declared before variables", Errc::SemanticError);
            if (s.at_end()) s.fail("expected at least one base name");
            while (!s.at_end()) {
                const std::size_t col = s.column();
                auto n = s.identifier();
                if (!n) s.fail("expected a base name");
                if (std::find(p.bases.begin(), p.bases.end(), *n) != p.bases.end())
                    throw ParseError(Errc::SemanticError, line_no, col, "base '" + *n + "' declared twice");
                p.bases.push_back(std::move(*n));
            }
        } else if (*keyword == "var") {
            const std::size_t col = s.column();
            auto n = s.identifier();
            if (!n) s.fail("expected a variable name");
            if (p.find_var(*n))
                throw ParseError(Errc::SemanticError, line_no, col, "variable '" + *n + "' declared twice");
            s.expect(':', "':'");
            p.vars.push_back(VarDecl{std::move(*n), parse_dim_expr(s, p.bases)});
        } else if (*keyword == "dependent") {
            const std::size_t col = s.column();
            auto n = s.identifier();
            if (!n) s.fail("expected a variable name");
            if (!s.at_end()) s.fail("unexpected text after the dependent variable");
            if (have_dependent) throw ParseError(Errc::SemanticError, line_no, kw_col, "dependent declared twice");
            if (!p.find_var(*n))
                throw ParseError(Errc::SemanticError, line_no, col, "dependent '" + *n + "' is not a declared variable");
            p.dependent = std::move(*n);
            have_dependent = true;
        } else if (*keyword == "unit") {
            auto n = s.identifier();
            if (!n) s.fail("expected a unit name");
            s.expect('=', "'='");
            s.skip_ws();
            std::string literal(s.rest());
            while (!literal.empty() && std::isspace(static_cast<unsigned char>(literal.back()))) literal.pop_back();
            p.units.push_back(UnitDecl{std::move(*n), std::move(literal)});
        } else {
            throw ParseError(Errc::ParseError, line_no, kw_col, "unknown keyword '" + *keyword + "'");
        }
    }
    if (!have_dependent) throw ParseError(Errc::SemanticError, 0, 0, "problem has no 'dependent' line");

    // Unit definitions are checked against a registry over the bases.
    if (!p.units.empty()) {
        UnitRegistry reg(make_space(p.bases));
        for (const auto& u : p.units) {
            try {
                reg.define_unit(u.name, reg.parse_quantity_literal(u.literal));
            } catch (const Error& e) {
                throw ParseError(Errc::SemanticError, 0, 0, "unit '" + u.name + "': " + e.detail());
            }
        }
    }
    return p;
}

DimensionalMatrix ProblemFile::matrix() const {
    std::vector<std::pair<std::string, ExpVec>> cols;
    for (const auto& v : vars) cols.emplace_back(v.name, v.dim);
    return build_matrix(bases, std::move(cols));
}

const VarDecl* ProblemFile::find_var(std::string_view name) const {
    for (const auto& v : vars)
        if (v.name == name) return &v;
    return nullptr;
}

std::string format_dim_expr(const std::vector<std::string>& bases, const ExpVec& dim) {
    std::string out;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (sgn(dim[i]) == 0) continue;
        if (!out.empty()) out += "*";
        out += bases[i];
        if (dim[i] != 1) out += "^" + dim[i].get_str();
    }
    return out.empty() ? "1" : out;
}

std::string print_problem(const ProblemFile& p) {
    std::string out;
    if (!p.bases.empty()) {
        out = "base";
        for (const auto& b : p.bases) out += " " + b;
        out += "\n";
    }
    for (const auto& v : p.vars) out += "var " + v.name + " : " + format_dim_expr(p.bases, v.dim) + "\n";
    for (const auto& u : p.units) out += "unit " + u.name + " = " + u.literal + "\n";
    out += "dependent " + p.dependent + "\n";
    return out;
}

} // namespace dimcalc
