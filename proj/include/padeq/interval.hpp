#ifndef PADEQ_INTERVAL_HPP
#define PADEQ_INTERVAL_HPP

#include <iosfwd>

#include "padeq/poly.hpp"
#include "padeq/rational.hpp"

namespace padeq
{

// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
class RationalInterval
{
public:
    RationalInterval() = default;
    // Throws ArgumentError when lo > hi.
    RationalInterval(Rational lo, Rational hi);
    static RationalInterval point(const Rational &v) { return {v, v}; }

    const Rational &lo() const { return lo_; }
    const Rational &hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational &v) const { return lo_ <= v && v <= hi_; }
    bool contains(const RationalInterval &o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    // {|v| : v in this}
    RationalInterval abs() const;
    // min |v| and max |v| over the interval.
    Rational mag_lo() const;
    Rational mag_hi() const;

    friend RationalInterval operator+(const RationalInterval &a, const RationalInterval &b);
    friend RationalInterval operator-(const RationalInterval &a, const RationalInterval &b);
    friend RationalInterval operator*(const RationalInterval &a, const RationalInterval &b);
    // Throws DomainError when b contains zero.
    friend RationalInterval operator/(const RationalInterval &a, const RationalInterval &b);
    friend RationalInterval operator*(const Rational &s, const RationalInterval &a);
    RationalInterval operator-() const { return {-hi_, -lo_}; }
    friend bool operator==(const RationalInterval &a, const RationalInterval &b) = default;

private:
    Rational lo_;
    Rational hi_;
};

RationalInterval hull(const RationalInterval &a, const RationalInterval &b);

// Naive interval Horner extension; encloses {p(x) : x in box}.
RationalInterval eval_poly(const PolyQ &p, const RationalInterval &box);

std::ostream &operator<<(std::ostream &os, const RationalInterval &i);

} // namespace padeq

#endif
