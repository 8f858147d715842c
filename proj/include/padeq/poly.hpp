#ifndef PADEQ_POLY_HPP
#define PADEQ_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "padeq/rational.hpp"

namespace padeq
{

// Dense polynomial over Q, coefficients indexed from degree 0.
// The highest stored coefficient is nonzero; the zero polynomial is empty.
class PolyQ
{
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs);
    PolyQ(std::initializer_list<Rational> coeffs) : PolyQ(std::vector<Rational>(coeffs)) {}

    static PolyQ monomial(const Rational &c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    // Zero for indices past the degree.
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    const std::vector<Rational> &coeffs() const { return c_; }
    // Smallest k with a nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> valuation() const;

    PolyQ derivative() const;
    // Terms of degree <= n.
    PolyQ truncated(std::size_t n) const;
    // Divide by z^k; every coefficient below k must be zero.
    PolyQ shifted_down(std::size_t k) const;

    // Ascending powers of z, e.g. "1 - 1/2 z + 3 z^2".
    std::string str() const;

    friend PolyQ operator+(const PolyQ &a, const PolyQ &b);
    friend PolyQ operator-(const PolyQ &a, const PolyQ &b);
    friend PolyQ operator*(const PolyQ &a, const PolyQ &b);
    friend PolyQ operator*(const Rational &s, const PolyQ &p);
    PolyQ operator-() const;
    friend bool operator==(const PolyQ &a, const PolyQ &b) = default;

private:
    void trim();

    std::vector<Rational> c_;
};

// Exact Horner evaluation.
Rational eval_poly(const PolyQ &p, const Rational &x);

struct PolyDivMod {
    PolyQ quot;
    PolyQ rem;
};
// Euclidean division; throws DomainError for a zero divisor.
PolyDivMod divmod(const PolyQ &a, const PolyQ &b);
// Monic gcd; gcd(0, 0) = 0.
PolyQ gcd(PolyQ a, PolyQ b);

// Coefficients c_0..c_N of a power series known up to degree N inclusive.
class TruncSeries
{
public:
    TruncSeries() : c_(1) {}
    // Pads with zeros or truncates so that exactly order+1 coefficients are stored.
    TruncSeries(std::vector<Rational> coeffs, std::size_t order);
    TruncSeries(std::initializer_list<Rational> coeffs, std::size_t order)
        : TruncSeries(std::vector<Rational>(coeffs), order)
    {
    }
    TruncSeries(const PolyQ &p, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rational &operator[](std::size_t k) const { return c_[k]; }
    const std::vector<Rational> &coeffs() const { return c_; }
    PolyQ to_poly() const { return PolyQ(c_); }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
    friend bool operator==(const TruncSeries &a, const TruncSeries &b) = default;

private:
    std::vector<Rational> c_;
};

// Convolution truncated at degree n. Requires n <= min(a.order(), b.order())
// so every output coefficient is determined by the inputs.
TruncSeries series_mul_trunc(const TruncSeries &a, const TruncSeries &b, std::size_t n);

// Exact quotient a/b to degree n. Requires b[0] != 0 and n <= both orders.
TruncSeries series_div_trunc(const TruncSeries &a, const TruncSeries &b, std::size_t n);

// Valuation inside the truncation window; nullopt means zero up to order().
std::optional<std::size_t> series_order(const TruncSeries &s);

} // namespace padeq

#endif
