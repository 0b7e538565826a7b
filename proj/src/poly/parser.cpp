#include "swh/parser.hpp"

#include "swh/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace swh {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& variables)
        : text_(text), vars_(variables) {}

    Polynomial parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty polynomial");
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial acc(vars_.size());
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        Polynomial t = term();
        acc += negate ? -t : t;
        for (c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Polynomial next = term();
            if (c == '+')
                acc += next;
            else
                acc -= next;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '(' || is_digit(c) || is_name_start(c)) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("exponent must be a natural number");
            Integer e(read_digits());
            if (e > 10000) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (is_digit(c)) {
            Integer num(read_digits());
            if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
                fail("only integer or rational coefficients are supported");
            Integer den = 1;
            if (peek() == '/') {
                ++pos_;
                skip_space();
                if (pos_ >= text_.size() || !is_digit(text_[pos_]))
                    fail("expected integer denominator after '/'");
                std::size_t den_pos = pos_;
                den = Integer(read_digits());
                if (den == 0) throw ParseError("zero denominator literal", den_pos);
            }
            Rational q(num, den);
            q.canonicalize();
            return Polynomial::constant(vars_.size(), q);
        }
        if (is_name_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

std::vector<std::string> infer_variables(std::string_view text) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < text.size();) {
        if (is_digit(text[i])) {
            while (i < text.size() && is_digit(text[i])) ++i;
        } else if (is_name_start(text[i])) {
            std::size_t j = i;
            while (j < text.size() && is_name_char(text[j])) ++j;
            names.emplace(text.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return {names.begin(), names.end()};
}

}  // namespace swh
