#include "padeq/candidate.hpp"

#include "padeq/errors.hpp"

namespace padeq
{

namespace
{

// Sum the series term_k(x) for k >= 1 until remainder_bound(n) * 2 <= eps,
// and return [S_n - B, S_n + B].
template <typename Term, typename Bound>
RationalInterval certified_sum(const Rational &eps, Term term, Bound remainder_bound)
{
    if (eps.sign() <= 0) {
        throw ArgumentError("error budget must be positive, got " + eps.str());
    }
    Rational sum;
    for (std::size_t n = 1;; ++n) {
        sum += term(n);
        const Rational b = remainder_bound(n);
        if (Rational(2) * b <= eps) {
            return {sum - b, sum + b};
        }
        if (n > 100000) {
            throw DomainError("certified evaluation did not converge to the requested budget");
        }
    }
}

Integer factorial(std::size_t n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace

CandidateFunction exp_m1()
{
    CandidateFunction c;
    c.name = "exp_m1";
    c.coeffs = [](std::size_t n) {
        std::vector<Rational> a(n + 1);
        Integer fact = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            fact *= static_cast<unsigned long>(k);
            a[k] = Rational(Integer(1), fact);
        }
        return a;
    };
    c.certified_eval = [](const Rational &x, const Rational &eps) {
        const Rational ax = x.abs();
        // e^{|x|} <= 3^{ceil |x|}
        Integer ceil_ax;
        mpz_cdiv_q(ceil_ax.get_mpz_t(), ax.num().get_mpz_t(), ax.den().get_mpz_t());
        if (ceil_ax > 64) {
            throw DomainError("exp_m1: |x| too large for certified evaluation: " + x.str());
        }
        const Rational growth(int_pow(3, ceil_ax.get_ui()));
        Rational power = Rational(1);
        Integer fact = 1;
        return certified_sum(
            eps,
            [&](std::size_t k) {
                power *= x;
                fact *= static_cast<unsigned long>(k);
                return power / Rational(fact);
            },
            [&](std::size_t n) {
                // e^{|x|} |x|^{n+1} / (n+1)!
                return growth * ax.pow(static_cast<long>(n + 1)) / Rational(factorial(n + 1));
            });
    };
    return c;
}

CandidateFunction log1p()
{
    CandidateFunction c;
    c.name = "log1p";
    c.radius = Rational(1);
    c.coeffs = [](std::size_t n) {
        std::vector<Rational> a(n + 1);
        for (std::size_t k = 1; k <= n; ++k) {
            a[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
        }
        return a;
    };
    c.certified_eval = [](const Rational &x, const Rational &eps) {
        const Rational ax = x.abs();
        if (ax >= Rational(1)) {
            throw DomainError("log1p: |x| must be < 1 for series evaluation, got " + x.str());
        }
        const Rational tail_scale = (Rational(1) - ax).inverse();
        Rational power = Rational(1);
        return certified_sum(
            eps,
            [&](std::size_t k) {
                power *= x;
                return (k % 2 == 1 ? power : -power) / Rational(static_cast<long>(k));
            },
            [&](std::size_t n) {
                // |x|^{n+1} / ((n+1)(1-|x|))
                return ax.pow(static_cast<long>(n + 1)) * tail_scale / Rational(static_cast<long>(n + 1));
            });
    };
    return c;
}

CandidateFunction from_rational_function(std::string name, const RationalFunction &f)
{
    if (f.den().coeff(0).is_zero()) {
        throw DomainError(name + ": " + f.str() + " is not regular at 0");
    }
    CandidateFunction c;
    c.name = std::move(name);
    c.coeffs = [f](std::size_t n) { return f.series(n).coeffs(); };
    c.exact_eval = [f](const Rational &x) { return f(x); };
    c.certified_eval = [f](const Rational &x, const Rational &) { return RationalInterval::point(f(x)); };
    return c;
}

CandidateFunction geom2z()
{
    CandidateFunction c = from_rational_function("geom2z", parse_rational_function("2z/(1-z)"));
    c.radius = Rational(1);
    return c;
}

CandidateFunction from_truncation(std::string name, const Rational &a0, const std::vector<Rational> &coeffs)
{
    std::vector<Rational> all{a0};
    all.insert(all.end(), coeffs.begin(), coeffs.end());
    CandidateFunction c = from_rational_function(std::move(name), RationalFunction(PolyQ(all)));
    c.note = "no evaluator given; the truncated polynomial a0 + a1 z + ... + a" + std::to_string(coeffs.size()) +
             " z^" + std::to_string(coeffs.size()) + " is treated as f";
    c.coeffs = [all](std::size_t n) {
        std::vector<Rational> a(all);
        a.resize(n + 1);
        return a;
    };
    return c;
}

CandidateFunction builtin_candidate(const std::string &name)
{
    if (name == "exp_m1") {
        return exp_m1();
    }
    if (name == "log1p") {
        return log1p();
    }
    if (name == "geom2z") {
        return geom2z();
    }
    if (name.rfind("poly:", 0) == 0) {
        const std::string expr = name.substr(5);
        return from_rational_function("poly:" + expr, parse_rational_function(expr));
    }
    throw ArgumentError("unknown builtin \"" + name + "\" (expected exp_m1, log1p, geom2z or poly:<expr>)");
}

} // namespace padeq
