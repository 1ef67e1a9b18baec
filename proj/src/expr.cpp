#include "vir/expr.hpp"

#include <cctype>

#include "vir/errors.hpp"

namespace vir {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::string& var) : s_(text), var_(var) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    const std::string& var_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("bad expression at position " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else
                return v;
        }
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Scalar v = atom();
        if (eat('^')) {
            long e = integer();
            if (v.is_zero() && e <= 0) fail("zero to nonpositive power");
            v = v.pow(e);
        }
        return v;
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    Scalar atom() {
        skip_ws();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return Scalar(BigInt(digits));
        }
        if (s_.compare(pos_, var_.size(), var_) == 0) {
            pos_ += var_.size();
            return Scalar::t();
        }
        fail("expected number, '" + var_ + "' or '('");
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text, const std::string& var) {
    return Parser(text, var).parse();
}

}  // namespace vir
