#ifndef PADEQ_CANDIDATE_HPP
#define PADEQ_CANDIDATE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "padeq/interval.hpp"
#include "padeq/ratfunc.hpp"

namespace padeq
{

// A function f(z) = sum a_k z^k presented through its Taylor prefix and
// evaluators.
//
// certified_eval(x, eps) returns an interval of width <= eps that contains
// f(x). exact_eval is present exactly when f maps Q into Q in a computable
// way (polynomials, rational functions); certified_eval then brackets it.
struct CandidateFunction {
    std::string name;
    std::function<std::vector<Rational>(std::size_t n)> coeffs;  // a_0..a_n
    std::optional<std::function<Rational(const Rational &)>> exact_eval;
    std::function<RationalInterval(const Rational &x, const Rational &eps)> certified_eval;
    // Evaluators require |x| < radius; nullopt for entire functions.
    std::optional<Rational> radius;
    // Shown in report headers (e.g. when a truncation stands in for f).
    std::string note;

    bool inside_radius(const Rational &x) const { return !radius || x.abs() < *radius; }
};

// e^z - 1. Entire; Taylor sums with a Lagrange remainder bound.
CandidateFunction exp_m1();
// log(1 + z), radius 1.
CandidateFunction log1p();
// 2z/(1 - z) = sum_{k>=1} 2 z^k, radius 1.
CandidateFunction geom2z();
// Any rational function regular at 0; evaluates exactly.
CandidateFunction from_rational_function(std::string name, const RationalFunction &f);
// a0 + a_1 z + ... + a_n z^n, the truncation itself standing in for f.
CandidateFunction from_truncation(std::string name, const Rational &a0, const std::vector<Rational> &coeffs);

// exp_m1, log1p, geom2z, or poly:<expr>. Throws ArgumentError for unknown names.
CandidateFunction builtin_candidate(const std::string &name);

} // namespace padeq

#endif
