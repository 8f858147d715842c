#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "padeq/candidate.hpp"
#include "padeq/errors.hpp"
#include "padeq/harness.hpp"
#include "padeq/ratfunc.hpp"

using namespace padeq;

namespace
{

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

Rational pow10_inv(unsigned long e) { return Rational(Integer(1), int_pow(10, e)); }

// Decimal reference value d with |true - d| <= 10^-digits.
RationalInterval decimal_ref(const char *digits_after_point, long integer_part = 0)
{
    const std::string s(digits_after_point);
    const Rational d = q(integer_part) + Rational(Integer(s, 10), int_pow(10, s.size()));
    const Rational r = pow10_inv(s.size());
    return {d - r, d + r};
}

bool overlaps(const RationalInterval &a, const RationalInterval &b) { return !(a.hi() < b.lo() || b.hi() < a.lo()); }

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

PadeApproximant exp_pade() { return build_pade(std::vector<Rational>{q(1), q(1, 2)}, 1); }

} // namespace

TEST_CASE("built-in candidates: coefficients")
{
    const auto e = exp_m1();
    CHECK(e.coeffs(4) == std::vector<Rational>{q(0), q(1), q(1, 2), q(1, 6), q(1, 24)});
    const auto l = log1p();
    CHECK(l.coeffs(4) == std::vector<Rational>{q(0), q(1), q(-1, 2), q(1, 3), q(-1, 4)});
    const auto g = geom2z();
    CHECK(g.coeffs(3) == std::vector<Rational>{q(0), q(2), q(2), q(2)});
    CHECK(g.exact_eval.has_value());
    CHECK(!e.exact_eval.has_value());
    CHECK(e.radius == std::nullopt);
    CHECK(l.radius == q(1));
    const auto p = builtin_candidate("poly:z + z^3");
    CHECK(p.coeffs(4) == std::vector<Rational>{q(0), q(1), q(0), q(1), q(0)});
    CHECK_THROWS_AS(builtin_candidate("sin"), ArgumentError);
}

TEST_CASE("certified evaluation encloses reference decimals")
{
    // e^{1/2} - 1, log(3/2), log(11/10), e^{-1} - 1
    const auto e = exp_m1();
    const auto l = log1p();
    const Rational eps = pow10_inv(40);

    const auto e_half = e.certified_eval(q(1, 2), eps);
    CHECK(e_half.width() <= eps);
    CHECK(overlaps(e_half, decimal_ref("648721270700128146848650787814")));

    const auto e_neg = e.certified_eval(q(-1), eps);
    CHECK(overlaps(e_neg, -decimal_ref("632120558828557678404476229838")));

    const auto l_half = l.certified_eval(q(1, 2), eps);
    CHECK(l_half.width() <= eps);
    CHECK(overlaps(l_half, decimal_ref("405465108108164381978013115464")));

    const auto l_tenth = l.certified_eval(q(1, 10), eps);
    CHECK(overlaps(l_tenth, decimal_ref("095310179804324860043952123280")));
}

TEST_CASE("certified evaluation brackets exact values")
{
    oracle::RandomRationals rng(211);
    const auto g = geom2z();
    for (int i = 0; i < 50; ++i) {
        Rational x = rng.next(100);
        if (x.abs() >= q(1)) {
            continue;
        }
        const auto box = g.certified_eval(x, pow10_inv(20));
        CHECK(box.contains((*g.exact_eval)(x)));
        CHECK((*g.exact_eval)(x) == Rational(2) * x / (Rational(1) - x));
    }
}

TEST_CASE("log_spaced")
{
    const auto ms = log_spaced(Integer(10), Integer(10000), 40);
    CHECK(ms.front() == 10);
    CHECK(ms.back() == 10000);
    CHECK(ms.size() >= 35);
    for (std::size_t i = 1; i < ms.size(); ++i) {
        CHECK(ms[i - 1] < ms[i]);
    }
    CHECK(log_spaced(Integer(10), Integer(1000), 3) == ints({10, 100, 1000}));
}

TEST_CASE("gap_series on e^z - 1 against the closed-form gap series")
{
    const auto pade = exp_pade();
    const auto Ms = ints({10, 100, 1000});
    const auto rows = gap_series(exp_m1(), pade, Ms, default_eps(1));
    REQUIRE(rows.size() == 3);
    for (const auto &row : rows) {
        REQUIRE(!row.skipped);
        const Rational x(Integer(1), row.M);
        CHECK(row.R_val == x / (Rational(1) - x / Rational(2)));
        const auto ref = oracle::exp_t1_gap(x);
        CHECK(overlaps(row.gap, ref));
        CHECK(row.gap.lo().sign() >= 0);
        CHECK(row.gap.width() <= Rational(2) * default_eps(1)(row.M));
        CHECK(!row.den_f);
    }
    // M = 10: the gap is about 1.106/12000, above the leading-term estimate
    const double g10 = rows[0].gap.mid().to_double();
    CHECK(g10 == doctest::Approx(9.2167e-5).epsilon(1e-3));
    CHECK(g10 > 1.0 / 12000.0);
}

TEST_CASE("gap_series with exact evaluation")
{
    const auto f = from_rational_function("z + z^3", parse_rational_function("z + z^3"));
    const auto pade = build_pade(std::vector<Rational>{q(1), q(0)}, 1);
    const auto Ms = ints({2, 3, 10});
    const auto rows = gap_series(f, pade, Ms, default_eps(1));
    CHECK(rows[0].gap == RationalInterval::point(q(1, 8)));
    CHECK(rows[0].den_f == Integer(8));
    CHECK(theta_hat(rows[0], 1, 0) == RationalInterval::point(q(1)));
    CHECK(rows[1].gap == RationalInterval::point(q(1, 27)));

    // f = R itself
    const auto r = from_rational_function("z/(1-z/2)", parse_rational_function("z/(1 - z/2)"));
    for (const auto &row : gap_series(r, exp_pade(), Ms, default_eps(1))) {
        CHECK(row.gap == RationalInterval::point(Rational()));
        CHECK(theta_hat(row, 1, 0) == RationalInterval::point(Rational()));
    }
}

TEST_CASE("gap_series skips poles and points outside the radius")
{
    // Q = 1 - 2z vanishes at 1/2
    const auto pade = build_pade(std::vector<Rational>{q(1), q(2)}, 1);
    const auto rows = gap_series(exp_m1(), pade, ints({2, 3}), default_eps(1));
    CHECK(rows[0].skipped.has_value());
    CHECK(!rows[1].skipped.has_value());

    CandidateFunction narrow = log1p();
    narrow.radius = q(1, 4);
    const auto rows2 = gap_series(narrow, build_pade(std::vector<Rational>{q(1), q(-1, 2)}, 1), ints({2, 5}),
                                  default_eps(1));
    CHECK(rows2[0].skipped.has_value());
    CHECK(!rows2[1].skipped.has_value());
}

TEST_CASE("theta_hat on e^z - 1 near 1/12")
{
    const auto pade = exp_pade();
    const auto Ms = log_spaced(Integer(100), Integer(10000), 15);
    const auto rows = gap_series(exp_m1(), pade, Ms, default_eps(1));
    for (const auto &row : rows) {
        const auto th = theta_hat(row, 1, 0);
        CHECK(th.lo() >= q(1, 12) * q(9, 10));
        CHECK(th.hi() <= q(1, 12) * q(11, 10));
        // the oracle enclosure scaled the same way
        const Rational x(Integer(1), row.M);
        const auto ref = Rational(int_pow(row.M, 3)) * oracle::exp_t1_gap(x);
        CHECK(overlaps(th, ref));
    }
}

TEST_CASE("exponent_fit")
{
    std::vector<std::pair<Integer, RationalInterval>> cube;
    for (long M : {10L, 100L, 1000L}) {
        cube.emplace_back(Integer(M), RationalInterval::point(Rational(Integer(1), int_pow(M, 3))));
    }
    const auto f1 = exponent_fit(cube);
    CHECK(f1.slope == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(f1.uncertainty == doctest::Approx(0.0));

    std::vector<std::pair<Integer, RationalInterval>> flat;
    for (long M : {10L, 20L, 40L, 80L}) {
        flat.emplace_back(Integer(M), RationalInterval::point(q(7, 3)));
    }
    CHECK(exponent_fit(flat).slope == doctest::Approx(0.0));

    auto with_zero = flat;
    with_zero[2].second = RationalInterval::point(Rational());
    CHECK(exponent_fit(with_zero).equality_signal);

    std::vector<std::pair<Integer, RationalInterval>> two(flat.begin(), flat.begin() + 2);
    CHECK_THROWS_AS(exponent_fit(two), ArgumentError);

    auto touching = flat;
    touching[1].second = RationalInterval(q(0), q(1));
    CHECK_THROWS_AS(exponent_fit(touching), ArgumentError);

    // widening the intervals widens the uncertainty and keeps the true slope inside
    std::vector<std::pair<Integer, RationalInterval>> wide;
    for (long M : {10L, 100L, 1000L, 10000L}) {
        const Rational v(Integer(1), int_pow(M, 2));
        wide.emplace_back(Integer(M), RationalInterval(v * q(9, 10), v * q(11, 10)));
    }
    const auto f2 = exponent_fit(wide);
    CHECK(f2.uncertainty > 0.0);
    CHECK(std::abs(f2.slope + 2.0) <= f2.uncertainty + 1e-12);
}

TEST_CASE("exponent_fit on the e^z - 1 gaps")
{
    const auto Ms = log_spaced(Integer(10), Integer(10000), 40);
    const auto rows = gap_series(exp_m1(), exp_pade(), Ms, default_eps(1));
    std::vector<std::pair<Integer, RationalInterval>> pts;
    for (const auto &r : rows) {
        pts.emplace_back(r.M, r.gap);
    }
    const auto fit = exponent_fit(pts);
    CHECK(fit.slope == doctest::Approx(-3.0).epsilon(0.05 / 3));
    CHECK(fit.uncertainty < 0.01);
}

TEST_CASE("denominator_scan")
{
    const auto Ms = log_spaced(Integer(10), Integer(1000), 10);

    const auto cubic = denominator_scan(builtin_candidate("poly:z + z^3"), Ms, 1);
    REQUIRE(!cubic.undefined);
    for (const auto &[M, d] : cubic.dens) {
        CHECK(d == int_pow(M, 3));
    }
    REQUIRE(cubic.fit);
    CHECK(cubic.fit->slope == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(cubic.violated);

    const auto lin = denominator_scan(builtin_candidate("poly:z"), Ms, 1);
    for (const auto &[M, d] : lin.dens) {
        CHECK(d == M);
    }
    CHECK(lin.fit->slope == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(!lin.violated);
    CHECK(lin.c1 == q(1));

    const auto zero = denominator_scan(builtin_candidate("poly:0"), Ms, 1);
    for (const auto &[M, d] : zero.dens) {
        CHECK(d == 1);
    }
    CHECK(zero.fit->slope == doctest::Approx(0.0));
    CHECK(!zero.violated);

    const auto none = denominator_scan(exp_m1(), Ms, 1);
    CHECK(none.undefined == std::string("den undefined for this candidate"));
    CHECK(none.dens.empty());
}

TEST_CASE("contradiction_report verdicts")
{
    const auto Ms = log_spaced(Integer(10), Integer(10000), 40);

    SUBCASE("geometric series reconstructs exactly")
    {
        for (std::size_t t : {1U, 2U, 3U}) {
            const auto rep = contradiction_report(geom2z(), t, Ms);
            CHECK(rep.verdict == Verdict::EqualityBranch);
            for (const auto &r : rep.rows) {
                CHECK(r.gap == RationalInterval::point(Rational()));
            }
        }
    }
    SUBCASE("z + z^3 violates the growth hypothesis")
    {
        const auto rep = contradiction_report(builtin_candidate("poly:z + z^3"), 1, Ms);
        CHECK(rep.verdict == Verdict::HypothesisViolated);
        CHECK(rep.den.fit->slope == doctest::Approx(3.0).epsilon(1e-6));
    }
    SUBCASE("e^z - 1 collides")
    {
        const auto rep = contradiction_report(exp_m1(), 1, Ms);
        CHECK(rep.verdict == Verdict::BoundCollision);
        REQUIRE(rep.m_star);
        REQUIRE(rep.gap_fit);
        CHECK(rep.gap_fit->slope == doctest::Approx(-3.0).epsilon(0.05 / 3));
        CHECK(rep.c1_assumed);
        CHECK(rep.c2 == q(2));
        CHECK(rep.theta_max <= q(1, 10));
        // the defining inequality holds at M* and fails at the sample before it
        const auto holds = [&](const Integer &M) {
            return rep.theta_max * Rational(int_pow(M, 2)) < Rational(int_pow(M, 3)) / rep.c2;
        };
        CHECK(holds(*rep.m_star));
        for (const auto &M : Ms) {
            if (M < *rep.m_star) {
                CHECK(!holds(M));
            }
        }
    }
    SUBCASE("log1p collides")
    {
        const auto rep = contradiction_report(log1p(), 1, Ms);
        CHECK(rep.verdict == Verdict::BoundCollision);
        CHECK(rep.m_star.has_value());
    }
}

TEST_CASE("contradiction_report argument checks")
{
    CHECK_THROWS_AS(contradiction_report(exp_m1(), 1, ints({10, 5, 20})), ArgumentError);
    CHECK_THROWS_AS(contradiction_report(exp_m1(), 1, ints({1, 5, 20})), ArgumentError);
    CHECK_THROWS_AS(contradiction_report(exp_m1(), 0, ints({2, 5, 20})), ArgumentError);
    CHECK_THROWS_AS(contradiction_report(exp_m1(), 1, {}), ArgumentError);
    HarnessConfig cfg;
    cfg.min_M = 10;
    CHECK_THROWS_AS(contradiction_report(exp_m1(), 1, ints({5, 20, 40}), cfg), ArgumentError);
}

TEST_CASE("verdict and M* are stable when the budget shrinks")
{
    const auto Ms = log_spaced(Integer(10), Integer(10000), 40);
    std::optional<Integer> prev;
    for (unsigned long e : {6UL, 8UL, 10UL, 12UL}) {
        HarnessConfig cfg;
        cfg.eps = eps_power(e);
        const auto rep = contradiction_report(exp_m1(), 1, Ms, cfg);
        CHECK(rep.verdict == Verdict::BoundCollision);
        REQUIRE(rep.m_star);
        if (prev) {
            const auto a = std::find(Ms.begin(), Ms.end(), *prev) - Ms.begin();
            const auto b = std::find(Ms.begin(), Ms.end(), *rep.m_star) - Ms.begin();
            CHECK(std::abs(a - b) <= 1);
        }
        prev = rep.m_star;
    }
}

TEST_CASE("theta stays bounded for analytic built-ins")
{
    const auto Ms = log_spaced(Integer(10), Integer(10000), 20);
    for (const auto &c : {exp_m1(), log1p()}) {
        for (std::size_t t : {1U, 2U}) {
            const auto rep = contradiction_report(c, t, Ms);
            for (const auto &r : rep.rows) {
                REQUIRE(!r.skipped);
                CHECK(r.theta.hi() < q(1));
            }
        }
    }
}
