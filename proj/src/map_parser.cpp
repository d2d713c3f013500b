#include "recomp/map_parser.hpp"

#include <cctype>

#include "recomp/json_io.hpp"

namespace recomp {

namespace {

/// num / den without normalization; the RatMap is built once at the end.
struct Fraction {
    Poly num, den;
};

Fraction operator+(const Fraction& a, const Fraction& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Fraction operator-(const Fraction& a, const Fraction& b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
Fraction operator*(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Fraction parse() {
        Fraction f = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("map expression: " + what + " at position " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Fraction expr() {
        Fraction f = term();
        for (;;) {
            if (accept('+')) f = f + term();
            else if (accept('-')) f = f - term();
            else return f;
        }
    }

    Fraction term() {
        Fraction f = unary();
        for (;;) {
            if (accept('*')) {
                f = f * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Fraction g = unary();
                if (g.num.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                f = {f.num * g.den, f.den * g.num};
            } else {
                return f;
            }
        }
    }

    Fraction unary() {
        if (accept('-')) {
            Fraction f = unary();
            return {-f.num, f.den};
        }
        return power();
    }

    Fraction power() {
        Fraction f = atom();
        if (!accept('^')) return f;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        if (pos_ - start > 4) fail("exponent too large");
        const auto n = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
        return {f.num.pow(n), f.den.pow(n)};
    }

    Fraction atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == 'z') {
            ++pos_;
            return {Poly::z(), Poly::constant(1)};
        }
        if (c == '(') {
            ++pos_;
            Fraction f = expr();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return {Poly::constant(number()), Poly::constant(1)};
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
            digits();
        }
        try {
            return parse_rational(s_.substr(start, pos_ - start));
        } catch (const Error&) {
            pos_ = start;
            fail("malformed number");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatMap parse_map_expression(std::string_view text) {
    Fraction f = Parser(text).parse();
    return RatMap(std::move(f.num), std::move(f.den));
}

RatMap parse_map(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\n\r");
    if (first != std::string_view::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Error(std::string("map JSON: ") + e.what());
        }
        return ratmap_from_json(j);
    }
    return parse_map_expression(text);
}

}  // namespace recomp
