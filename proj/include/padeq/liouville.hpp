#ifndef PADEQ_LIOUVILLE_HPP
#define PADEQ_LIOUVILLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "padeq/interval.hpp"
#include "padeq/ratfunc.hpp"

namespace padeq
{

struct ApproximantRow {
    std::size_t k = 0;
    Integer p;
    Integer q;
    RationalInterval gap;  // encloses |xi - p/q|
};

// Rational approximations p_k/q_k of a real xi together with enclosures of
// |xi - p_k/q_k|. Rows are strictly increasing in k and in q, q > 1, and
// every gap enclosure is bounded away from zero.
class ApproximantSeq
{
public:
    ApproximantSeq() = default;
    // Throws ArgumentError when an invariant fails.
    explicit ApproximantSeq(std::vector<ApproximantRow> rows);

    const std::vector<ApproximantRow> &rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

private:
    std::vector<ApproximantRow> rows_;
};

inline constexpr std::size_t kLiouvilleMaxK = 7;

// Partial sum p_k/q_k = sum_{i=1..k} 10^{-i!} of the Liouville constant,
// q_k = 10^{k!}. Valid for 1 <= k <= 7.
std::pair<Integer, Integer> liouville_constant_approximant(std::size_t k);

// Enclosure [10^{-(k+1)!}, 2 * 10^{-(k+1)!}] of xi - p_k/q_k.
RationalInterval tail_bound(std::size_t k);

// Rows 1..k_max of the Liouville constant.
ApproximantSeq liouville_constant_seq(std::size_t k_max);

struct OmegaRow {
    std::size_t k = 0;
    double lo = 0.0;
    double hi = 0.0;
};

// omega_k in [-log(gap.hi)/log q_k, -log(gap.lo)/log q_k], evaluated with
// outward-rounded logarithms at the given number of decimal digits.
std::vector<OmegaRow> omega_sequence(const ApproximantSeq &seq, unsigned precision_digits = 64);

// Approximants of f(xi) from approximants of xi.
//
// Each row maps p/q to f(p/q) in lowest terms. |f(xi) - f(p/q)| is enclosed
// by the mean-value bound with |f'| taken over the hull of p/q and the part
// of `value_interval` within gap.hi of p/q. Rows whose image denominator is 1
// or fails to increase strictly are dropped.
//
// Throws ArgumentError for constant f, DomainError when the denominator of f
// may vanish on a hull or f' may vanish there (no positive lower gap bound).
ApproximantSeq maillet_transform(const RationalFunction &f, const ApproximantSeq &seq,
                                 const RationalInterval &value_interval);

} // namespace padeq

#endif
