#include "padeq/interval.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "padeq/errors.hpp"

namespace padeq
{

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_) {
        throw ArgumentError("interval with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
    }
}

RationalInterval RationalInterval::abs() const
{
    if (lo_.sign() >= 0) {
        return *this;
    }
    if (hi_.sign() <= 0) {
        return -*this;
    }
    return {Rational(), max(-lo_, hi_)};
}

Rational RationalInterval::mag_lo() const { return abs().lo(); }
Rational RationalInterval::mag_hi() const { return abs().hi(); }

RationalInterval operator+(const RationalInterval &a, const RationalInterval &b)
{
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval &a, const RationalInterval &b)
{
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval &a, const RationalInterval &b)
{
    const std::array<Rational, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
}

RationalInterval operator/(const RationalInterval &a, const RationalInterval &b)
{
    if (b.contains_zero()) {
        throw DomainError("interval division by an interval containing zero: [" + b.lo_.str() + ", " + b.hi_.str() + "]");
    }
    return a * RationalInterval(b.hi_.inverse(), b.lo_.inverse());
}

RationalInterval operator*(const Rational &s, const RationalInterval &a)
{
    if (s.sign() >= 0) {
        return {s * a.lo_, s * a.hi_};
    }
    return {s * a.hi_, s * a.lo_};
}

RationalInterval hull(const RationalInterval &a, const RationalInterval &b)
{
    return {min(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

RationalInterval eval_poly(const PolyQ &p, const RationalInterval &box)
{
    RationalInterval acc;
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * box + RationalInterval::point(*it);
    }
    return acc;
}

std::ostream &operator<<(std::ostream &os, const RationalInterval &i)
{
    return os << '[' << i.lo() << ", " << i.hi() << ']';
}

} // namespace padeq
