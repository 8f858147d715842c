#ifndef PADEQ_HARNESS_HPP
#define PADEQ_HARNESS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padeq/candidate.hpp"
#include "padeq/interval.hpp"
#include "padeq/pade.hpp"

namespace padeq
{

// Error budget for the certified evaluation of f(1/M).
using EpsRule = std::function<Rational(const Integer &M)>;

// 1/M^e
EpsRule eps_power(unsigned long e);
// 1/M^{4t+4}
inline EpsRule default_eps(std::size_t t) { return eps_power(4 * t + 4); }

// Integers from lo to hi (both included), spaced evenly in log M, duplicates removed.
std::vector<Integer> log_spaced(const Integer &lo, const Integer &hi, std::size_t points);

struct GapRow {
    Integer M;
    std::optional<std::string> skipped;  // reason, when the row could not be evaluated
    RationalInterval f_bounds;
    Rational R_val;
    RationalInterval gap;                // |f(1/M) - R(1/M)|
    std::optional<Integer> den_f;        // den f(1/M) when f is exactly evaluable
    RationalInterval theta;              // M^{2t+1-j} * gap
};

// One row per M. R is evaluated exactly; f through exact_eval when present
// (the gap is then a point) and otherwise through certified_eval with budget
// eps(M). A pole of Q at 1/M, or 1/M outside the candidate's radius, marks
// the row skipped. Rows are evaluated concurrently and returned in input order.
std::vector<GapRow> gap_series(const CandidateFunction &c, const PadeApproximant &pade, std::span<const Integer> Ms,
                               const EpsRule &eps);

// M^{2t+1-j} * gap, exact.
RationalInterval theta_hat(const GapRow &row, std::size_t t, std::size_t j);

struct ExponentFit {
    double slope = 0.0;
    // Half the spread of slopes reachable by moving each point inside its interval.
    double uncertainty = 0.0;
    // A point interval [0, 0] was seen; no slope is fitted.
    bool equality_signal = false;
};

// Least-squares slope of log(value) against log(M) using interval midpoints.
// Needs >= 3 points; every interval must be [0,0] or strictly positive,
// otherwise ArgumentError.
ExponentFit exponent_fit(std::span<const std::pair<Integer, RationalInterval>> points);

struct DenominatorScan {
    std::optional<std::string> undefined;                // set when f has no exact evaluator
    std::vector<std::pair<Integer, Integer>> dens;       // (M, den f(1/M))
    std::optional<ExponentFit> fit;
    // max over M of den f(1/M) / M^t
    Rational c1;
    bool violated = false;
};

// den f(1/M) for each M and the fitted growth exponent d. The growth
// hypothesis den = O(M^t) counts as violated when d > t + max(uncertainty, 1/4)
// and den/M^t keeps growing: its maximum over the upper half of the
// samples exceeds its maximum over the lower half.
DenominatorScan denominator_scan(const CandidateFunction &c, std::span<const Integer> Ms, std::size_t t);

enum class Verdict { EqualityBranch, HypothesisViolated, BoundCollision };
std::string to_string(Verdict v);

struct HarnessConfig {
    std::optional<EpsRule> eps;     // default_eps(t) when unset
    Integer min_M = 2;
    // C1 used in the lower bound when den f(1/M) is not computable.
    Rational assumed_c1 = Rational(1);
};

struct GrowthReport {
    std::string candidate;
    std::string note;
    PadeApproximant pade;
    std::vector<GapRow> rows;
    std::optional<ExponentFit> gap_fit;
    std::optional<std::string> gap_fit_error;
    DenominatorScan den;
    bool c1_assumed = false;
    Rational c1;
    Rational c2;           // 2 * c1
    Rational theta_max;    // max theta_hat upper endpoint over evaluated rows
    Verdict verdict = Verdict::BoundCollision;
    // Smallest sampled M with theta_max * M^{-(2t+1-j)} < 1/(c2 M^{2t-j}).
    std::optional<Integer> m_star;
    std::vector<std::string> diagnostics;
};

// Builds the approximant from a_1..a_2t of c, runs gap_series, theta_hat,
// exponent_fit and denominator_scan, and assigns the verdict:
//   EqualityBranch      f is exactly evaluable and every gap is 0;
//   HypothesisViolated  the denominator scan flags growth beyond M^t;
//   BoundCollision      otherwise, with m_star when the upper envelope falls
//                       strictly below the lower bound at some sampled M.
// Throws ArgumentError when Ms is not ascending or starts below min_M.
GrowthReport contradiction_report(const CandidateFunction &c, std::size_t t, std::span<const Integer> Ms,
                                  const HarnessConfig &config = {});

} // namespace padeq

#endif
