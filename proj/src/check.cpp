#include "dimcalc/check.hpp"

#include "dimcalc/error.hpp"
#include "scanner.hpp"

namespace dimcalc {

namespace {

struct Value {
    ExpVec dim;
    std::size_t begin;
    std::size_t end;
};

class EquationParser {
public:
    EquationParser(const ProblemFile& p, std::string_view text, CheckResult& out) : p_(p), s_(text), out_(out) {}

    void equation() {
        Value lhs = sum(Side::Left, true);
        s_.skip_ws();
        const std::size_t eq_col = s_.column();
        s_.expect('=', "'='");
        Value rhs = sum(Side::Right, true);
        if (!s_.at_end()) s_.fail("unexpected trailing text");
        if (lhs.dim != rhs.dim) report('=', eq_col, lhs, rhs);
        out_.lhs = lhs.dim;
        out_.rhs = rhs.dim;
    }

private:
    std::string slice(const Value& v) const {
        std::string t(s_.text().substr(v.begin, v.end - v.begin));
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
        return t;
    }

    void report(char junction, std::size_t column, const Value& a, const Value& b) {
        out_.violations.push_back(Violation{junction, column, slice(a), slice(b), a.dim, b.dim});
    }

    void record(Side side, const Value& v) {
        if (side_terms_) out_.terms.push_back(TermDimension{side, slice(v), v.dim});
    }

    Value sum(Side side, bool top) {
        const bool saved = side_terms_;
        side_terms_ = top;
        s_.skip_ws();
        const std::size_t begin = s_.pos();
        if (!s_.accept('-')) s_.accept('+');
        Value first = term();
        first.begin = begin;
        record(side, first);
        Value total = first;
        while (true) {
            const char c = s_.peek();
            if (c != '+' && c != '-') break;
            const std::size_t col = s_.column();
            s_.accept(c);
            Value t = term();
            record(side, t);
            if (t.dim != first.dim) report(c, col, first, t);
            total.end = t.end;
        }
        side_terms_ = saved;
        return total;
    }

    Value term() {
        Value v = power();
        while (true) {
            const char c = s_.peek();
            if (c != '*' && c != '/') break;
            s_.accept(c);
            Value w = power();
            if (c == '*')
                v.dim += w.dim;
            else
                v.dim -= w.dim;
            v.end = w.end;
        }
        return v;
    }

    Value power() {
        Value v = primary();
        if (s_.accept('^')) {
            auto e = s_.signed_integer();
            if (!e) s_.fail("expected an integer exponent");
            v.dim *= *e;
            v.end = s_.pos();
        }
        return v;
    }

    Value primary() {
        s_.skip_ws();
        const std::size_t begin = s_.pos();
        const std::size_t col = s_.column();
        if (s_.accept('(')) {
            Value inner = sum(Side::Left, false);
            s_.expect(')', "')'");
            return Value{std::move(inner.dim), begin, s_.pos()};
        }
        if (auto name = s_.identifier()) {
            const VarDecl* v = p_.find_var(*name);
            if (!v) throw ParseError(Errc::UnknownVariable, s_.line(), col, "unknown variable '" + *name + "'");
            return Value{v->dim, begin, s_.pos()};
        }
        if (s_.rational()) return Value{ExpVec(p_.bases.size()), begin, s_.pos()};
        s_.fail("expected a variable, number or '('");
    }

    const ProblemFile& p_;
    detail::Scanner s_;
    CheckResult& out_;
    bool side_terms_ = false;
};

} // namespace

CheckResult check_equation(const ProblemFile& problem, std::string_view equation) {
    CheckResult result;
    EquationParser(problem, equation, result).equation();
    return result;
}

std::string format_check(const ProblemFile& problem, const CheckResult& result) {
    std::string out;
    for (const auto& t : result.terms)
        out += std::string(t.side == Side::Left ? "lhs" : "rhs") + " term " + t.text + " : " +
               format_dim_expr(problem.bases, t.dim) + " " + to_string(t.dim) + "\n";
    for (const auto& v : result.violations)
        out += "violation at column " + std::to_string(v.column) + " ('" + v.junction + "'): " + v.left_text + " is " +
               format_dim_expr(problem.bases, v.left) + " " + to_string(v.left) + " but " + v.right_text + " is " +
               format_dim_expr(problem.bases, v.right) + " " + to_string(v.right) + "\n";
    out += result.homogeneous() ? "homogeneous\n" : "not homogeneous\n";
    return out;
}

} // namespace dimcalc
