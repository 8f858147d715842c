#include "padeq/ratfunc.hpp"

#include <cctype>

#include "padeq/errors.hpp"

namespace padeq
{

RationalFunction::RationalFunction(PolyQ num, PolyQ den)
{
    if (den.is_zero()) {
        throw DomainError("rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = PolyQ();
        den_ = PolyQ{Rational(1)};
        return;
    }
    const PolyQ g = gcd(num, den);
    num = divmod(num, g).quot;
    den = divmod(den, g).quot;
    const Rational lead_inv = den.coeffs().back().inverse();
    num_ = lead_inv * num;
    den_ = lead_inv * den;
}

Rational RationalFunction::operator()(const Rational &x) const
{
    const Rational d = eval_poly(den_, x);
    if (d.is_zero()) {
        throw PoleError("pole of " + str() + " at " + x.str(), x.str());
    }
    return eval_poly(num_, x) / d;
}

RationalInterval RationalFunction::operator()(const RationalInterval &box) const
{
    const RationalInterval d = eval_poly(den_, box);
    if (d.contains_zero()) {
        throw DomainError("denominator of " + str() + " may vanish on [" + box.lo().str() + ", " + box.hi().str() +
                          "]");
    }
    return eval_poly(num_, box) / d;
}

RationalFunction RationalFunction::derivative() const
{
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

TruncSeries RationalFunction::series(std::size_t n) const
{
    if (den_.coeff(0).is_zero()) {
        throw DomainError(str() + " has a pole at 0; no Taylor series at the origin");
    }
    return series_div_trunc(TruncSeries(num_, n), TruncSeries(den_, n), n);
}

std::string RationalFunction::str() const
{
    if (is_polynomial()) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
{
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
{
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
{
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
{
    if (b.num_.is_zero()) {
        throw DomainError("division by the zero rational function");
    }
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::pow(unsigned long e) const
{
    RationalFunction acc;
    acc.num_ = PolyQ{Rational(1)};
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1U) {
            acc = acc * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return acc;
}

namespace
{

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RationalFunction parse()
    {
        skip_ws();
        if (at_end()) {
            fail("empty expression");
        }
        RationalFunction r = expr();
        skip_ws();
        if (!at_end()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw InputError("expression: " + msg + " at column " + std::to_string(pos_ + 1), 1, pos_ + 1);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    // Unicode minus sign U+2212.
    bool at_unicode_minus() const { return text_.substr(pos_, 3) == "\xE2\x88\x92"; }

    // Next non-space character without consuming it ('-' for U+2212); 0 at the end.
    char peek_op()
    {
        skip_ws();
        if (at_end()) {
            return 0;
        }
        if (at_unicode_minus()) {
            return '-';
        }
        return text_[pos_];
    }

    void consume(char c)
    {
        if (c == '-' && at_unicode_minus()) {
            pos_ += 3;
            return;
        }
        ++pos_;
    }

    bool starts_primary()
    {
        const char c = peek_op();
        return c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    RationalFunction expr()
    {
        RationalFunction acc = term();
        for (;;) {
            const char c = peek_op();
            if (c != '+' && c != '-') {
                return acc;
            }
            consume(c);
            RationalFunction rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
    }

    RationalFunction term()
    {
        RationalFunction acc = unary();
        for (;;) {
            const char c = peek_op();
            if (c == '*') {
                consume(c);
                acc = acc * unary();
            } else if (c == '/') {
                consume(c);
                const std::size_t at = pos_;
                RationalFunction rhs = unary();
                if (rhs.num().is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc / rhs;
            } else if (starts_primary()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary()
    {
        const char c = peek_op();
        if (c == '-') {
            consume(c);
            return RationalFunction(PolyQ()) - unary();
        }
        if (c == '+') {
            consume(c);
            return unary();
        }
        return power();
    }

    RationalFunction power()
    {
        RationalFunction base = primary();
        if (peek_op() == '^') {
            consume('^');
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("exponent must be a non-negative integer");
            }
            const Integer e = integer();
            if (e > 4096) {
                fail("exponent too large");
            }
            return base.pow(e.get_ui());
        }
        return base;
    }

    Integer integer()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    RationalFunction primary()
    {
        const char c = peek_op();
        if (c == 'z') {
            consume(c);
            return RationalFunction(PolyQ{Rational(0), Rational(1)});
        }
        if (c == '(') {
            consume(c);
            RationalFunction inner = expr();
            if (peek_op() != ')') {
                fail("expected ')'");
            }
            consume(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RationalFunction(PolyQ{Rational(integer())});
        }
        if (c == 0) {
            fail("unexpected end of expression");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).parse(); }

} // namespace padeq
