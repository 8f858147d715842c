#ifndef PADEQ_PADE_HPP
#define PADEQ_PADE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "padeq/poly.hpp"
#include "padeq/rational.hpp"

namespace padeq
{

using Matrix = std::vector<std::vector<Rational>>;

// The t x (t+1) homogeneous system whose kernel gives Q.
// Entry (r, c) is a_{2t-r-c}, r = 0..t-1, c = 0..t.
struct HankelSystem {
    std::size_t t = 0;
    Matrix entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? t + 1 : entries.front().size(); }
    const Rational &at(std::size_t r, std::size_t c) const { return entries[r][c]; }
};

// a holds a_1..a_2t (a[0] is a_1). Throws ArgumentError unless a.size() == 2t, t >= 1.
HankelSystem hankel_system(std::span<const Rational> a, std::size_t t);

// Reduced row-echelon form by rational Gaussian elimination with leftmost
// pivots. `pivots` lists the pivot column of each nonzero row.
struct Rref {
    Matrix rows;
    std::vector<std::size_t> pivots;
};
Rref rref(Matrix m);

// Nonzero q with sys * q = 0. Deterministic: the highest-index free
// variable is set to 1, the other free variables to 0, pivots follow by
// back-substitution.
std::vector<Rational> kernel_vector(const HankelSystem &sys);

struct NormalizedKernel {
    std::size_t j = 0;          // first nonzero index
    std::vector<Rational> q;    // q / q_j, so q[j] == 1
};
// Throws ArgumentError for the all-zero vector.
NormalizedKernel normalize_and_j(std::span<const Rational> q);

// R = a0 + P/Q with P - Q*F = z^{2t+1} S, F = sum_{n=1}^{2t} a_n z^n.
//
// P, Q, S and F describe the shifted series f - a0; a0 is added back only
// by the evaluators. The first nonzero coefficient of Q is Q_j = 1 and P has
// valuation >= j+1 (or is zero), so R - a0 agrees with F through degree 2t-j.
struct PadeApproximant {
    std::size_t t = 0;
    std::size_t j = 0;
    Rational a0;
    PolyQ F;
    PolyQ Q;
    PolyQ P;
    PolyQ S;

    // Degree through which R - a0 matches F.
    std::size_t matched_order() const { return 2 * t - j; }
    // P == Q*F exactly, i.e. R reproduces F.
    bool reproduces_F() const { return S.is_zero(); }
};

// a holds a_1..a_2t. Verifies the vanishing of b_{t+1}..b_{2t}, the
// valuation of P and the divisibility of P - QF by z^{2t+1}; a failure
// throws ConstructionError with a dump of the intermediate data.
PadeApproximant build_pade(std::span<const Rational> a, std::size_t t, const Rational &a0 = Rational());

// a0 + P(x)/Q(x). Throws PoleError when Q(x) == 0.
Rational eval_R(const PadeApproximant &pade, const Rational &x);

// R(1/M) from the cleared-denominator form
//   (b_{j+1} M^{t-j-1} + ... + b_t) / (M^{t-j} + q_{j+1} M^{t-j-1} + ... + q_t)
// which avoids rational powers of 1/M. Throws PoleError when the denominator vanishes.
Rational eval_R_at_reciprocal(const PadeApproximant &pade, const Integer &M);

// Power series of R to degree n by exact long division after removing z^j from P and Q.
TruncSeries series_of_R(const PadeApproximant &pade, std::size_t n);

// Human-readable dump used in diagnostics.
std::string describe(const PadeApproximant &pade);

} // namespace padeq

#endif
