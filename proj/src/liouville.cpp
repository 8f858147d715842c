#include "padeq/liouville.hpp"

#include <cmath>
#include <optional>

#include <mpfr.h>

#include "padeq/errors.hpp"

namespace padeq
{

ApproximantSeq::ApproximantSeq(std::vector<ApproximantRow> rows) : rows_(std::move(rows))
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto &r = rows_[i];
        const std::string at = "row k = " + std::to_string(r.k) + ": ";
        if (r.q <= 1) {
            throw ArgumentError(at + "q must be > 1");
        }
        if (r.gap.lo().sign() <= 0) {
            throw ArgumentError(at + "gap enclosure must be bounded away from zero");
        }
        if (i > 0 && (rows_[i - 1].k >= r.k || rows_[i - 1].q >= r.q)) {
            throw ArgumentError(at + "k and q must increase strictly");
        }
    }
}

namespace
{

Integer factorial(std::size_t n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer pow10(const Integer &e) { return int_pow(10, e.get_ui()); }

void check_k(std::size_t k)
{
    if (k < 1 || k > kLiouvilleMaxK) {
        throw ArgumentError("k = " + std::to_string(k) + " outside the supported range 1.." +
                            std::to_string(kLiouvilleMaxK));
    }
}

class Mpfr
{
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr &) = delete;
    Mpfr &operator=(const Mpfr &) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// Directed-rounded log of a positive rational: the result is <= log(r) for
// MPFR_RNDD and >= log(r) for MPFR_RNDU.
void log_rounded(Mpfr &out, const Rational &r, mpfr_rnd_t rnd)
{
    mpfr_set_q(out.get(), r.gmp().get_mpq_t(), rnd);
    mpfr_log(out.get(), out.get(), rnd);
}

// n = root^exponent with root not a perfect power (n >= 2).
std::pair<Integer, unsigned long> primitive_power(Integer n)
{
    unsigned long exponent = 1;
    while (n > 1 && mpz_perfect_power_p(n.get_mpz_t()) != 0) {
        const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        for (unsigned long e = 2; e <= bits; ++e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                n = root;
                exponent *= e;
                break;
            }
        }
    }
    return {n, exponent};
}

// log(x)/log(q) as an exact rational when x and q are powers of one integer.
std::optional<Rational> exact_log_ratio(const Rational &x, const Integer &q)
{
    int sign = 1;
    Integer n;
    if (x.den() == 1 && x.num() >= 2) {
        n = x.num();
    } else if (x.num() == 1 && x.den() >= 2) {
        n = x.den();
        sign = -1;
    } else {
        return std::nullopt;
    }
    const auto [rn, en] = primitive_power(n);
    const auto [rq, eq] = primitive_power(q);
    if (rn != rq) {
        return std::nullopt;
    }
    return Rational(Integer(sign) * Integer(en), Integer(eq));
}

double rational_to_double(const Rational &r, mpfr_rnd_t rnd)
{
    Mpfr v(64);
    mpfr_set_q(v.get(), r.gmp().get_mpq_t(), rnd);
    return mpfr_get_d(v.get(), rnd);
}

} // namespace

std::pair<Integer, Integer> liouville_constant_approximant(std::size_t k)
{
    check_k(k);
    const Integer kf = factorial(k);
    Integer p = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        p += pow10(kf - factorial(i));
    }
    const Rational r(p, pow10(kf));
    return {r.num(), r.den()};
}

RationalInterval tail_bound(std::size_t k)
{
    check_k(k);
    const Rational first(Integer(1), pow10(factorial(k + 1)));
    return {first, Rational(2) * first};
}

ApproximantSeq liouville_constant_seq(std::size_t k_max)
{
    check_k(k_max);
    std::vector<ApproximantRow> rows;
    for (std::size_t k = 1; k <= k_max; ++k) {
        auto [p, q] = liouville_constant_approximant(k);
        rows.push_back({k, std::move(p), std::move(q), tail_bound(k)});
    }
    return ApproximantSeq(std::move(rows));
}

std::vector<OmegaRow> omega_sequence(const ApproximantSeq &seq, unsigned precision_digits)
{
    const auto prec = static_cast<mpfr_prec_t>(std::ceil(precision_digits * std::log2(10.0))) + 8;
    Mpfr log_q_lo(prec), log_q_hi(prec), num(prec), quot(prec);
    std::vector<OmegaRow> out;
    out.reserve(seq.size());
    for (const auto &row : seq.rows()) {
        const Rational q(row.q);
        log_rounded(log_q_lo, q, MPFR_RNDD);
        log_rounded(log_q_hi, q, MPFR_RNDU);

        OmegaRow w;
        w.k = row.k;
        const auto exact_lo = exact_log_ratio(row.gap.hi(), row.q);
        const auto exact_hi = exact_log_ratio(row.gap.lo(), row.q);
        // lower: -log(gap.hi) rounded down, divided toward -inf
        log_rounded(num, row.gap.hi(), MPFR_RNDU);
        mpfr_neg(num.get(), num.get(), MPFR_RNDD);
        mpfr_div(quot.get(), num.get(), mpfr_sgn(num.get()) >= 0 ? log_q_hi.get() : log_q_lo.get(), MPFR_RNDD);
        w.lo = mpfr_get_d(quot.get(), MPFR_RNDD);
        // upper: -log(gap.lo) rounded up, divided toward +inf
        log_rounded(num, row.gap.lo(), MPFR_RNDD);
        mpfr_neg(num.get(), num.get(), MPFR_RNDU);
        mpfr_div(quot.get(), num.get(), mpfr_sgn(num.get()) >= 0 ? log_q_lo.get() : log_q_hi.get(), MPFR_RNDU);
        w.hi = mpfr_get_d(quot.get(), MPFR_RNDU);
        if (exact_lo) {
            w.lo = rational_to_double(-*exact_lo, MPFR_RNDD);
        }
        if (exact_hi) {
            w.hi = rational_to_double(-*exact_hi, MPFR_RNDU);
        }
        out.push_back(w);
    }
    return out;
}

ApproximantSeq maillet_transform(const RationalFunction &f, const ApproximantSeq &seq,
                                 const RationalInterval &value_interval)
{
    if (f.is_constant()) {
        throw ArgumentError("non-constant rational function required");
    }
    const RationalFunction fp = f.derivative();
    std::vector<ApproximantRow> out;
    for (const auto &row : seq.rows()) {
        const Rational x(row.p, row.q);
        const Rational fx = f(x);

        const Rational lo = max(x - row.gap.hi(), value_interval.lo());
        const Rational hi = min(x + row.gap.hi(), value_interval.hi());
        if (hi < lo) {
            throw DomainError("k = " + std::to_string(row.k) + ": value interval does not meet the neighbourhood of " +
                              x.str());
        }
        const RationalInterval box = hull(RationalInterval::point(x), RationalInterval(lo, hi));
        (void)f(box);
        const RationalInterval slope = fp(box);
        if (slope.mag_lo().is_zero()) {
            throw DomainError("k = " + std::to_string(row.k) + ": f' may vanish on [" + box.lo().str() + ", " +
                              box.hi().str() + "]");
        }
        ApproximantRow img;
        img.k = row.k;
        img.p = fx.num();
        img.q = fx.den();
        img.gap = RationalInterval(slope.mag_lo() * row.gap.lo(), slope.mag_hi() * row.gap.hi());
        if (img.q <= 1 || (!out.empty() && img.q <= out.back().q)) {
            continue;
        }
        out.push_back(std::move(img));
    }
    return ApproximantSeq(std::move(out));
}

} // namespace padeq
