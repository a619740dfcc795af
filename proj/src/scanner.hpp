#pragma once

// Character scanner shared by the text front ends. Works on one logical line
// at a time so errors can carry a line and column.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "dimcalc/error.hpp"
#include "dimcalc/intlinalg.hpp"

namespace dimcalc::detail {

class Scanner {
public:
    explicit Scanner(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0)
        : text_(text), line_(line), offset_(column_offset) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    /// Next raw character without skipping whitespace.
    char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, std::string_view what) {
        if (!accept(c)) fail("expected " + std::string(what));
    }

    std::optional<std::string> identifier() {
        skip_ws();
        if (pos_ >= text_.size()) return std::nullopt;
        const char c0 = text_[pos_];
        if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return std::nullopt;
        std::size_t end = pos_ + 1;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
        std::string id(text_.substr(pos_, end - pos_));
        pos_ = end;
        return id;
    }

    /// [+-]?digits, optionally wrapped in parentheses.
    std::optional<Integer> signed_integer() {
        skip_ws();
        const std::size_t save = pos_;
        const bool paren = accept('(');
        skip_ws();
        std::size_t end = pos_;
        if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
        const std::size_t digits = end;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        if (end == digits) {
            pos_ = save;
            return std::nullopt;
        }
        std::string s(text_.substr(pos_, end - pos_));
        if (s.front() == '+') s.erase(0, 1);
        pos_ = end;
        if (paren && !accept(')')) {
            pos_ = save;
            return std::nullopt;
        }
        return Integer(s);
    }

    /// [+-]?digits(.digits)?([eE][+-]?digits)?(/digits)?
    std::optional<Rational> rational() {
        skip_ws();
        std::size_t end = pos_;
        auto digits = [&] {
            const std::size_t from = end;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            return end - from;
        };
        bool negative = false;
        if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) negative = text_[end++] == '-';
        const std::size_t int_start = end;
        if (digits() == 0) return std::nullopt;
        std::string mantissa(text_.substr(int_start, end - int_start));
        long scale = 0;
        if (end + 1 < text_.size() && text_[end] == '.' && std::isdigit(static_cast<unsigned char>(text_[end + 1]))) {
            ++end;
            const std::size_t frac_start = end;
            scale -= static_cast<long>(digits());
            mantissa += text_.substr(frac_start, end - frac_start);
        }
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            std::size_t probe = end + 1;
            bool exp_negative = false;
            if (probe < text_.size() && (text_[probe] == '-' || text_[probe] == '+')) exp_negative = text_[probe++] == '-';
            std::size_t exp_end = probe;
            while (exp_end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp_end]))) ++exp_end;
            if (exp_end > probe && exp_end - probe < 6) {
                const long e = std::stol(std::string(text_.substr(probe, exp_end - probe)));
                scale += exp_negative ? -e : e;
                end = exp_end;
            }
        }
        Rational value{Integer(mantissa)};
        Integer ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
        if (scale < 0) value /= ten_pow;
        if (scale > 0) value *= ten_pow;
        if (end + 1 < text_.size() && text_[end] == '/' && std::isdigit(static_cast<unsigned char>(text_[end + 1]))) {
            ++end;
            const std::size_t den_start = end;
            digits();
            Integer den(std::string(text_.substr(den_start, end - den_start)));
            if (sgn(den) == 0) {
                pos_ = den_start;
                fail("zero denominator");
            }
            value /= den;
        }
        value.canonicalize();
        if (negative) value = -value;
        pos_ = end;
        return value;
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return offset_ + pos_ + 1; }
    std::size_t pos() const noexcept { return pos_; }
    std::string_view text() const noexcept { return text_; }
    std::string_view rest() const { return text_.substr(pos_); }

    [[noreturn]] void fail(const std::string& message, Errc code = Errc::ParseError) const {
        throw ParseError(code, line_, column(), message);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t offset_;
};

/// Text before the first '#'.
inline std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

} // namespace dimcalc::detail
