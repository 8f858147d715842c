#include "padeq/rational.hpp"

#include <cctype>
#include <ostream>

#include "padeq/errors.hpp"

namespace padeq
{

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace
{

bool is_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    const std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num_part) || !is_digits(den_part)) {
        throw InputError("malformed rational \"" + std::string(text) + "\"");
    }
    Integer num(std::string(num_part), 10);
    const Integer den(std::string(den_part), 10);
    if (den == 0) {
        throw InputError("zero denominator in \"" + std::string(text) + "\"");
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw DomainError("inverse of zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    // gcd(n^e, d^e) = 1 already; the constructor re-checks cheaply.
    return Rational(n, d);
}

std::string Rational::str() const
{
    if (q_.get_den() == 1) {
        return q_.get_num().get_str(10);
    }
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational &Rational::operator+=(const Rational &o)
{
    q_ += o.q_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    q_ -= o.q_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    q_ *= o.q_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Integer int_pow(const Integer &base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace padeq
