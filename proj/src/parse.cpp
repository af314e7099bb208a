#include "nk/parse.hpp"

#include <cctype>
#include <string>

#include "nk/errors.hpp"

namespace nk {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }
    std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }
    [[noreturn]] void fail_end() const { throw parse_error("unexpected end of input", pos_); }

    void expect(char c) {
        skip_ws();
        if (done()) fail_end();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    // Consumes a run of digits, empty if none.
    std::string digits() {
        std::string out;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out.push_back(peek());
            advance();
        }
        return out;
    }

    // Consumes an optional sign; returns -1, +1, or 0 when absent.
    int sign() {
        if (!done() && (peek() == '+' || peek() == '-')) {
            const int s = peek() == '-' ? -1 : 1;
            advance();
            return s;
        }
        return 0;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

GaussianInt scan_entry(Scanner& s) {
    s.skip_ws();
    const int sign = s.sign();
    s.skip_ws();
    const std::string dig = s.digits();
    s.skip_ws();

    if (dig.empty()) {
        if (!s.done() && s.peek() == 'i') {
            if (sign != 0) s.fail("expected digits after sign");
            s.advance();
            return GaussianInt(0, 1);
        }
        if (s.done()) s.fail_end();
        s.fail(sign != 0 ? "expected digits after sign" : "expected entry");
    }

    Int value(dig);
    if (sign < 0) value = -value;

    if (!s.done() && s.peek() == 'i') {
        s.advance();
        return GaussianInt(Int(0), value);
    }

    if (!s.done() && (s.peek() == '+' || s.peek() == '-')) {
        const int separator = s.peek() == '-' ? -1 : 1;
        s.advance();
        s.skip_ws();
        const int sign2 = s.sign();
        s.skip_ws();
        const std::string dig2 = s.digits();
        s.skip_ws();
        if (dig2.empty() && sign2 != 0) {
            if (s.done()) s.fail_end();
            s.fail("expected digits after sign");
        }
        Int imag = dig2.empty() ? Int(1) : Int(dig2);
        if (sign2 < 0) imag = -imag;
        if (s.done()) s.fail_end();
        if (s.peek() != 'i') s.fail("expected 'i'");
        s.advance();
        if (separator < 0) imag = -imag;
        return GaussianInt(value, imag);
    }

    return GaussianInt(value, Int(0));
}

} // namespace

GaussianMatrix2 parse_matrix(const std::string& text) {
    Scanner s(text);
    const GaussianInt a = scan_entry(s);
    s.expect(',');
    const GaussianInt b = scan_entry(s);
    s.expect(';');
    const GaussianInt c = scan_entry(s);
    s.expect(',');
    const GaussianInt d = scan_entry(s);
    s.skip_ws();
    if (!s.done()) s.fail("unexpected trailing input");
    return GaussianMatrix2(a, b, c, d);
}

GaussianInt parse_entry(const std::string& text) {
    Scanner s(text);
    const GaussianInt v = scan_entry(s);
    s.skip_ws();
    if (!s.done()) s.fail("unexpected trailing input");
    return v;
}

Rat parse_rational(const std::string& text) {
    Scanner s(text);
    s.skip_ws();
    if (s.done()) s.fail_end();
    const int sign = s.sign();
    s.skip_ws();
    const std::string dig = s.digits();
    if (dig.empty()) s.fail("expected digits");
    Int num(dig);
    if (sign < 0) num = -num;
    s.skip_ws();
    if (!s.done() && s.peek() == '/') {
        s.advance();
        s.skip_ws();
        if (s.done()) s.fail_end();
        const std::size_t denStart = s.pos();
        const std::string den = s.digits();
        if (den.empty()) s.fail("expected digits");
        const Int denValue(den);
        if (denValue == 0) throw parse_error("denominator must be positive", denStart);
        s.skip_ws();
        if (!s.done()) s.fail("unexpected trailing input");
        return Rat(num) / Rat(denValue);
    }
    if (!s.done()) s.fail("unexpected trailing input");
    return Rat(num);
}

std::string render_matrix(const GaussianMatrix2& m) {
    return to_string(m.at(0, 0)) + "," + to_string(m.at(0, 1)) + ";" + to_string(m.at(1, 0)) +
           "," + to_string(m.at(1, 1));
}

} // namespace nk
