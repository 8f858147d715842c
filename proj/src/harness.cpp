#include "padeq/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "padeq/errors.hpp"

namespace padeq
{

EpsRule eps_power(unsigned long e)
{
    return [e](const Integer &M) { return Rational(Integer(1), int_pow(M, e)); };
}

std::vector<Integer> log_spaced(const Integer &lo, const Integer &hi, std::size_t points)
{
    if (lo < 1 || hi < lo) {
        throw ArgumentError("log_spaced: need 1 <= lo <= hi");
    }
    if (points < 2 || lo == hi) {
        return lo == hi ? std::vector<Integer>{lo} : std::vector<Integer>{lo, hi};
    }
    const double llo = std::log(lo.get_d());
    const double lhi = std::log(hi.get_d());
    std::vector<Integer> out;
    out.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        Integer m;
        if (i == 0) {
            m = lo;
        } else if (i + 1 == points) {
            m = hi;
        } else {
            const double v = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(points - 1));
            m = Integer(std::lround(v));
            m = std::clamp(m, lo, hi);
        }
        if (out.empty() || out.back() < m) {
            out.push_back(m);
        }
    }
    return out;
}

namespace
{

double log_of(const Integer &z)
{
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

// log of a positive rational without overflowing doubles.
double log_of(const Rational &r) { return log_of(r.num()) - log_of(r.den()); }

GapRow evaluate_row(const CandidateFunction &c, const PadeApproximant &pade, const Integer &M, const EpsRule &eps)
{
    GapRow row;
    row.M = M;
    const Rational x(Integer(1), M);
    if (!c.inside_radius(x)) {
        row.skipped = "1/" + M.get_str() + " outside the evaluation radius of " + c.name;
        return row;
    }
    try {
        row.R_val = eval_R_at_reciprocal(pade, M);
        if (c.exact_eval) {
            const Rational fv = (*c.exact_eval)(x);
            row.f_bounds = RationalInterval::point(fv);
            row.den_f = den_of(fv);
        } else {
            row.f_bounds = c.certified_eval(x, eps(M));
        }
    } catch (const DomainError &e) {
        row.skipped = e.what();
        return row;
    }
    row.gap = (row.f_bounds - RationalInterval::point(row.R_val)).abs();
    row.theta = theta_hat(row, pade.t, pade.j);
    return row;
}

} // namespace

std::vector<GapRow> gap_series(const CandidateFunction &c, const PadeApproximant &pade, std::span<const Integer> Ms,
                               const EpsRule &eps)
{
    std::vector<GapRow> rows(Ms.size());
    std::vector<std::exception_ptr> errors(Ms.size());
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), Ms.size()));
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < Ms.size(); i += workers) {
                    try {
                        rows[i] = evaluate_row(c, pade, Ms[i], eps);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

RationalInterval theta_hat(const GapRow &row, std::size_t t, std::size_t j)
{
    return Rational(int_pow(row.M, 2 * t + 1 - j)) * row.gap;
}

ExponentFit exponent_fit(std::span<const std::pair<Integer, RationalInterval>> points)
{
    if (points.size() < 3) {
        throw ArgumentError("exponent_fit: need at least 3 points, got " + std::to_string(points.size()));
    }
    ExponentFit fit;
    for (const auto &[M, v] : points) {
        if (v.hi().is_zero()) {
            fit.equality_signal = true;
            return fit;
        }
        if (v.lo().sign() <= 0) {
            throw ArgumentError("exponent_fit: interval at M = " + M.get_str() + " is not bounded away from zero");
        }
    }
    const std::size_t n = points.size();
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = log_of(points[i].first);
    }
    double xbar = 0.0;
    for (double x : xs) {
        xbar += x;
    }
    xbar /= static_cast<double>(n);
    double sxx = 0.0;
    for (double x : xs) {
        sxx += (x - xbar) * (x - xbar);
    }
    if (sxx == 0.0) {
        throw ArgumentError("exponent_fit: all points share the same M");
    }
    double slope = 0.0;
    double slope_max = 0.0;
    double slope_min = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (xs[i] - xbar) / sxx;
        const auto &v = points[i].second;
        const double ylo = log_of(v.lo());
        const double yhi = log_of(v.hi());
        slope += w * log_of(v.mid());
        slope_max += w * (w > 0 ? yhi : ylo);
        slope_min += w * (w > 0 ? ylo : yhi);
    }
    fit.slope = slope;
    fit.uncertainty = (slope_max - slope_min) / 2.0;
    return fit;
}

DenominatorScan denominator_scan(const CandidateFunction &c, std::span<const Integer> Ms, std::size_t t)
{
    DenominatorScan scan;
    if (!c.exact_eval) {
        scan.undefined = "den undefined for this candidate";
        return scan;
    }
    std::vector<Rational> ratios;
    for (const auto &M : Ms) {
        const Rational x(Integer(1), M);
        if (!c.inside_radius(x)) {
            continue;
        }
        Integer d;
        try {
            d = den_of((*c.exact_eval)(x));
        } catch (const DomainError &) {
            continue;
        }
        scan.dens.emplace_back(M, d);
        ratios.push_back(Rational(d, int_pow(M, t)));
        scan.c1 = max(scan.c1, ratios.back());
    }
    if (scan.dens.size() < 3) {
        return scan;
    }
    std::vector<std::pair<Integer, RationalInterval>> pts;
    pts.reserve(scan.dens.size());
    for (const auto &[M, d] : scan.dens) {
        pts.emplace_back(M, RationalInterval::point(Rational(d)));
    }
    scan.fit = exponent_fit(pts);

    const std::size_t half = ratios.size() / 2;
    const Rational lower_max = *std::max_element(ratios.begin(), ratios.begin() + static_cast<std::ptrdiff_t>(half));
    const Rational upper_max = *std::max_element(ratios.begin() + static_cast<std::ptrdiff_t>(half), ratios.end());
    const double excess = scan.fit->slope - static_cast<double>(t);
    scan.violated = excess > std::max(scan.fit->uncertainty, 0.25) && upper_max > lower_max;
    return scan;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::EqualityBranch:
        return "EqualityBranch";
    case Verdict::HypothesisViolated:
        return "HypothesisViolated";
    case Verdict::BoundCollision:
        return "BoundCollision";
    }
    return "?";
}

GrowthReport contradiction_report(const CandidateFunction &c, std::size_t t, std::span<const Integer> Ms,
                                  const HarnessConfig &config)
{
    if (t == 0) {
        throw ArgumentError("t must be >= 1");
    }
    if (Ms.empty()) {
        throw ArgumentError("no sample points");
    }
    const Integer floor_M = std::max(config.min_M, Integer(2));
    if (Ms.front() < floor_M) {
        throw ArgumentError("sample M = " + Ms.front().get_str() + " below the minimum " + floor_M.get_str());
    }
    for (std::size_t i = 1; i < Ms.size(); ++i) {
        if (!(Ms[i - 1] < Ms[i])) {
            throw ArgumentError("sample points must be strictly ascending");
        }
    }

    GrowthReport rep;
    rep.candidate = c.name;
    rep.note = c.note;
    const std::vector<Rational> a = c.coeffs(2 * t);
    rep.pade = build_pade(std::span<const Rational>(a).subspan(1, 2 * t), t, a[0]);
    const std::size_t j = rep.pade.j;

    rep.rows = gap_series(c, rep.pade, Ms, config.eps ? *config.eps : default_eps(t));

    std::vector<std::pair<Integer, RationalInterval>> gaps;
    bool all_zero = true;
    for (const auto &row : rep.rows) {
        if (row.skipped) {
            rep.diagnostics.push_back("M = " + row.M.get_str() + " skipped: " + *row.skipped);
            continue;
        }
        gaps.emplace_back(row.M, row.gap);
        all_zero = all_zero && row.gap.hi().is_zero();
        rep.theta_max = max(rep.theta_max, row.theta.hi());
    }
    if (gaps.empty()) {
        all_zero = false;
        rep.diagnostics.push_back("no sample point could be evaluated");
    }
    try {
        rep.gap_fit = exponent_fit(gaps);
    } catch (const ArgumentError &e) {
        rep.gap_fit_error = e.what();
    }

    rep.den = denominator_scan(c, Ms, t);
    if (rep.den.undefined || rep.den.dens.empty()) {
        rep.c1_assumed = true;
        rep.c1 = config.assumed_c1;
    } else {
        rep.c1 = rep.den.c1;
    }
    rep.c2 = Rational(2) * rep.c1;

    if (c.exact_eval && all_zero) {
        rep.verdict = Verdict::EqualityBranch;
        return rep;
    }
    if (rep.den.violated) {
        rep.verdict = Verdict::HypothesisViolated;
        return rep;
    }
    rep.verdict = Verdict::BoundCollision;
    for (const auto &row : rep.rows) {
        if (row.skipped) {
            continue;
        }
        const Rational upper = rep.theta_max / Rational(int_pow(row.M, 2 * t + 1 - j));
        const Rational lower = (rep.c2 * Rational(int_pow(row.M, 2 * t - j))).inverse();
        if (upper < lower) {
            rep.m_star = row.M;
            break;
        }
    }
    if (!rep.m_star) {
        rep.diagnostics.push_back("upper envelope never fell below the lower bound in the sampled range");
    }
    return rep;
}

} // namespace padeq
