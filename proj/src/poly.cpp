#include "padeq/poly.hpp"

#include <algorithm>

#include "padeq/errors.hpp"

namespace padeq
{

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyQ::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

PolyQ PolyQ::monomial(const Rational &c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return PolyQ(std::move(v));
}

std::optional<std::size_t> PolyQ::valuation() const
{
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) {
            return k;
        }
    }
    return std::nullopt;
}

PolyQ PolyQ::derivative() const
{
    if (c_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    }
    return PolyQ(std::move(d));
}

PolyQ PolyQ::truncated(std::size_t n) const
{
    if (c_.size() <= n + 1) {
        return *this;
    }
    return PolyQ(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

PolyQ PolyQ::shifted_down(std::size_t k) const
{
    for (std::size_t i = 0; i < std::min(k, c_.size()); ++i) {
        if (!c_[i].is_zero()) {
            throw ArgumentError("shifted_down: polynomial not divisible by z^" + std::to_string(k));
        }
    }
    if (c_.size() <= k) {
        return {};
    }
    return PolyQ(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

std::string PolyQ::str() const
{
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational &c = c_[k];
        if (c.is_zero()) {
            continue;
        }
        if (first) {
            if (c.sign() < 0) {
                out += "-";
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1)) {
            out += mag.str() + " ";
        }
        out += "z";
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

PolyQ operator+(const PolyQ &a, const PolyQ &b)
{
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = a.coeff(k) + b.coeff(k);
    }
    return PolyQ(std::move(r));
}

PolyQ operator-(const PolyQ &a, const PolyQ &b)
{
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] = a.coeff(k) - b.coeff(k);
    }
    return PolyQ(std::move(r));
}

PolyQ operator*(const PolyQ &a, const PolyQ &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k < b.c_.size(); ++k) {
            r[i + k] += a.c_[i] * b.c_[k];
        }
    }
    return PolyQ(std::move(r));
}

PolyQ operator*(const Rational &s, const PolyQ &p)
{
    std::vector<Rational> r = p.c_;
    for (auto &c : r) {
        c *= s;
    }
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-() const { return Rational(-1) * *this; }

Rational eval_poly(const PolyQ &p, const Rational &x)
{
    Rational acc;
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

PolyDivMod divmod(const PolyQ &a, const PolyQ &b)
{
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) {
        return {PolyQ(), a};
    }
    std::vector<Rational> quot(rem.size() - db);
    const Rational lead_inv = b.coeffs().back().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        const Rational c = rem[k] * lead_inv;
        quot[k - db] = c;
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i <= db; ++i) {
            rem[k - db + i] -= c * b.coeff(i);
        }
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ gcd(PolyQ a, PolyQ b)
{
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) {
        return a;
    }
    return a.coeffs().back().inverse() * a;
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs))
{
    c_.resize(order + 1);
}

TruncSeries::TruncSeries(const PolyQ &p, std::size_t order) : TruncSeries(p.coeffs(), order) {}

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> r(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        r[k] = a[k] + b[k];
    }
    return TruncSeries(std::move(r), n);
}

TruncSeries operator-(const TruncSeries &a, const TruncSeries &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> r(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        r[k] = a[k] - b[k];
    }
    return TruncSeries(std::move(r), n);
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
{
    return series_mul_trunc(a, b, std::min(a.order(), b.order()));
}

TruncSeries series_mul_trunc(const TruncSeries &a, const TruncSeries &b, std::size_t n)
{
    if (n > a.order() || n > b.order()) {
        throw ArgumentError("series_mul_trunc: order " + std::to_string(n) + " exceeds operand orders");
    }
    std::vector<Rational> r(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; i + k <= n; ++k) {
            r[i + k] += a[i] * b[k];
        }
    }
    return TruncSeries(std::move(r), n);
}

TruncSeries series_div_trunc(const TruncSeries &a, const TruncSeries &b, std::size_t n)
{
    if (n > a.order() || n > b.order()) {
        throw ArgumentError("series_div_trunc: order " + std::to_string(n) + " exceeds operand orders");
    }
    if (b[0].is_zero()) {
        throw DomainError("series_div_trunc: divisor has zero constant term");
    }
    const Rational inv0 = b[0].inverse();
    std::vector<Rational> r(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (std::size_t i = 1; i <= k; ++i) {
            acc -= b[i] * r[k - i];
        }
        r[k] = acc * inv0;
    }
    return TruncSeries(std::move(r), n);
}

std::optional<std::size_t> series_order(const TruncSeries &s)
{
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (!s[k].is_zero()) {
            return k;
        }
    }
    return std::nullopt;
}

} // namespace padeq
