#ifndef PADEQ_RATIONAL_HPP
#define PADEQ_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padeq
{

using Integer = mpz_class;

// Reduced fraction num/den with den > 0. Zero is 0/1.
//
// Every constructor and every arithmetic operation leaves the value in
// canonical form, so structural equality is numeric equality.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(const Integer &v) : q_(v) {}
    // Throws DomainError when den == 0.
    Rational(const Integer &num, const Integer &den);

    static Rational reduce(const Integer &num, const Integer &den) { return Rational(num, den); }

    // Accepts "p", "-p", "p/q", "-p/q" in base 10; whitespace is not allowed.
    // Throws InputError on anything else (including a zero denominator).
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    // Throws DomainError for zero.
    Rational inverse() const;
    // Integer power; negative exponents invert (zero base then throws).
    Rational pow(long e) const;

    // "p/q", or "p" when den == 1.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    const mpq_class &gmp() const { return q_; }

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

// den(z): denominator of the irreducible form.
inline Integer den_of(const Rational &r) { return r.den(); }

inline const Rational &min(const Rational &a, const Rational &b) { return b < a ? b : a; }
inline const Rational &max(const Rational &a, const Rational &b) { return a < b ? b : a; }

// 10^e, M^e and friends show up everywhere.
Integer int_pow(const Integer &base, unsigned long e);

} // namespace padeq

#endif
