#ifndef PADEQ_RATFUNC_HPP
#define PADEQ_RATFUNC_HPP

#include <string>
#include <string_view>

#include "padeq/interval.hpp"
#include "padeq/poly.hpp"

namespace padeq
{

// num/den over Q in lowest terms with a monic denominator.
class RationalFunction
{
public:
    RationalFunction() : den_{Rational(1)} {}
    RationalFunction(PolyQ num) : num_(std::move(num)), den_{Rational(1)} {}
    // Throws DomainError for a zero denominator.
    RationalFunction(PolyQ num, PolyQ den);

    const PolyQ &num() const { return num_; }
    const PolyQ &den() const { return den_; }

    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Throws PoleError when den(x) == 0.
    Rational operator()(const Rational &x) const;
    // Naive interval extension; throws DomainError when den may vanish on the box.
    RationalInterval operator()(const RationalInterval &box) const;

    RationalFunction derivative() const;
    // Taylor coefficients c_0..c_n at the origin; throws DomainError when den(0) == 0.
    TruncSeries series(std::size_t n) const;

    std::string str() const;

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
    // Throws DomainError when b is identically zero.
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
    RationalFunction pow(unsigned long e) const;

private:
    PolyQ num_;
    PolyQ den_;
};

// Minimal recursive-descent grammar over z with rational coefficients:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | primary)*     juxtaposition multiplies
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'z' | '(' expr ')'
//
// Throws InputError carrying the 1-based column of the offending character.
RationalFunction parse_rational_function(std::string_view text);

} // namespace padeq

#endif
