#ifndef PADEQ_IO_HPP
#define PADEQ_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "padeq/harness.hpp"
#include "padeq/liouville.hpp"
#include "padeq/pade.hpp"

namespace padeq
{

// Series input document:
//   { "t": 2, "a0": "1/3", "coeffs": ["1", "-1/2", ...] }
// "a0" is optional. coeffs holds a_1, a_2, ...; lists longer than 2t are
// accepted (the tail only feeds evaluation).
struct SeriesInput {
    std::optional<std::size_t> t;
    Rational a0;
    std::vector<Rational> coeffs;
};

// Throws InputError with 1-based line/column of the problem.
SeriesInput parse_series_input(std::string_view text);

// Throws InputError unless `in` has at least 2t coefficients.
void require_coefficients(const SeriesInput &in, std::size_t t);

nlohmann::ordered_json pade_to_json(const PadeApproximant &pade);

nlohmann::ordered_json report_to_json(const GrowthReport &rep);
// Header M,f_lo,f_hi,R,gap_lo,gap_hi,den_f,theta_lo,theta_hi; one line per
// row (skipped rows keep only M); then '#'-prefixed summary lines.
std::string report_to_csv(const GrowthReport &rep);

// Header k,p_k,q_k,gap_lo,gap_hi,omega_lo,omega_hi.
std::string approximants_to_csv(const ApproximantSeq &seq, const std::vector<OmegaRow> &omega);
nlohmann::ordered_json approximants_to_json(const ApproximantSeq &seq, const std::vector<OmegaRow> &omega);

// Shortest text that reads back to the same double.
std::string format_double(double v);

} // namespace padeq

#endif
