#include "sqdisc/expr.hpp"

#include <cctype>

#include "sqdisc/errors.hpp"

namespace sqdisc {

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::string& var) : s_(text), var_(var) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("expression '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                         ": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_factor(char c) const {
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c));
    }

    RationalFunction expr() {
        RationalFunction acc;
        bool first = true;
        for (;;) {
            char c = peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            RationalFunction t = term();
            acc = first && sign > 0 ? t : (sign > 0 ? acc + t : acc - t);
            first = false;
        }
        return acc;
    }

    RationalFunction term() {
        RationalFunction acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (c == '/') {
                ++pos_;
                RationalFunction d = power();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else if (starts_factor(c)) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    RationalFunction primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            if (name != var_) fail("unknown variable '" + std::string(name) + "'");
            return RationalFunction(Poly::x());
        }
        fail("expected a number, variable or '('");
    }

    std::string_view s_;
    std::string var_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const std::string& var) {
    return Parser(text, var).parse();
}

}  // namespace sqdisc
