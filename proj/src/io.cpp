#include "padeq/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "padeq/errors.hpp"
#include "padeq/ratfunc.hpp"

namespace padeq
{

namespace
{

using nlohmann::ordered_json;

struct TextPos {
    std::size_t line = 1;
    std::size_t column = 1;
};

TextPos position_of(std::string_view text, std::size_t offset)
{
    TextPos p;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Position of the first occurrence of `needle`, or 0/0 when absent.
TextPos locate(std::string_view text, std::string_view needle)
{
    const auto at = text.find(needle);
    if (at == std::string_view::npos) {
        return {0, 0};
    }
    return position_of(text, at);
}

[[noreturn]] void fail_at(std::string_view text, std::string_view needle, const std::string &msg)
{
    const TextPos p = locate(text, needle);
    std::string where = p.line ? " (line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ")" : "";
    throw InputError(msg + where, p.line, p.column);
}

Rational rational_field(std::string_view text, const nlohmann::json &v, const std::string &what)
{
    if (!v.is_string()) {
        fail_at(text, v.dump(), what + ": expected a rational string such as \"-3/4\", got " + v.dump());
    }
    const auto s = v.get<std::string>();
    try {
        return Rational::parse(s);
    } catch (const InputError &e) {
        fail_at(text, "\"" + s + "\"", what + ": " + e.what());
    }
}

std::string opt_str(const std::optional<Integer> &v) { return v ? v->get_str() : ""; }

ordered_json fit_json(const std::optional<ExponentFit> &fit)
{
    if (!fit) {
        return nullptr;
    }
    if (fit->equality_signal) {
        return ordered_json{{"equality_signal", true}};
    }
    return ordered_json{{"slope", fit->slope}, {"uncertainty", fit->uncertainty}};
}

std::string fit_str(const std::optional<ExponentFit> &fit)
{
    if (!fit) {
        return "none";
    }
    if (fit->equality_signal) {
        return "equality";
    }
    return format_double(fit->slope) + " +/- " + format_double(fit->uncertainty);
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    for (int prec = 6; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) {
            break;
        }
    }
    return buf;
}

SeriesInput parse_series_input(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        const TextPos p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw InputError("malformed series file (line " + std::to_string(p.line) + ", column " +
                             std::to_string(p.column) + "): " + e.what(),
                         p.line, p.column);
    }
    if (!doc.is_object()) {
        throw InputError("series file must be an object with \"t\" and \"coeffs\"", 1, 1);
    }
    SeriesInput in;
    if (doc.contains("t")) {
        const auto &t = doc["t"];
        if (!t.is_number_integer() || t.get<long long>() < 1) {
            fail_at(text, "\"t\"", "\"t\" must be a positive integer");
        }
        in.t = t.get<std::size_t>();
    }
    if (doc.contains("a0")) {
        in.a0 = rational_field(text, doc["a0"], "a0");
    }
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) {
        fail_at(text, "\"coeffs\"", "\"coeffs\" must be an array of rational strings");
    }
    std::size_t n = 1;
    for (const auto &v : doc["coeffs"]) {
        in.coeffs.push_back(rational_field(text, v, "coeffs a_" + std::to_string(n++)));
    }
    return in;
}

void require_coefficients(const SeriesInput &in, std::size_t t)
{
    if (in.coeffs.size() < 2 * t) {
        throw InputError("expected " + std::to_string(2 * t) + " coefficients a_1..a_" + std::to_string(2 * t) +
                         " for t = " + std::to_string(t) + ", got " + std::to_string(in.coeffs.size()));
    }
}

nlohmann::ordered_json pade_to_json(const PadeApproximant &pade)
{
    const auto coeff_list = [](const PolyQ &p) {
        ordered_json a = ordered_json::array();
        for (const auto &c : p.coeffs()) {
            a.push_back(c.str());
        }
        return a;
    };
    const RationalFunction R(pade.P + pade.a0 * pade.Q, pade.Q);
    ordered_json j;
    j["t"] = pade.t;
    j["j"] = pade.j;
    j["a0"] = pade.a0.str();
    j["F"] = pade.F.str();
    j["Q"] = pade.Q.str();
    j["P"] = pade.P.str();
    j["S"] = pade.S.str();
    j["R"] = R.str();
    j["Q_coeffs"] = coeff_list(pade.Q);
    j["P_coeffs"] = coeff_list(pade.P);
    j["S_coeffs"] = coeff_list(pade.S);
    j["verified_order"] = pade.matched_order();
    j["order_note"] = pade.reproduces_F() ? "R ≡ F"
                                          : "R - F = O(z^" + std::to_string(pade.matched_order() + 1) + ")";
    return j;
}

nlohmann::ordered_json report_to_json(const GrowthReport &rep)
{
    ordered_json j;
    ordered_json header;
    header["candidate"] = rep.candidate;
    if (!rep.note.empty()) {
        header["note"] = rep.note;
    }
    header["t"] = rep.pade.t;
    header["j"] = rep.pade.j;
    header["Q"] = rep.pade.Q.str();
    header["P"] = rep.pade.P.str();
    header["S"] = rep.pade.S.str();
    j["header"] = header;

    ordered_json rows = ordered_json::array();
    for (const auto &r : rep.rows) {
        ordered_json row;
        row["M"] = r.M.get_str();
        if (r.skipped) {
            row["skipped"] = *r.skipped;
        } else {
            row["f"] = {r.f_bounds.lo().str(), r.f_bounds.hi().str()};
            row["R"] = r.R_val.str();
            row["gap"] = {r.gap.lo().str(), r.gap.hi().str()};
            row["den_f"] = r.den_f ? ordered_json(r.den_f->get_str()) : ordered_json(nullptr);
            row["theta_hat"] = {r.theta.lo().str(), r.theta.hi().str()};
        }
        rows.push_back(row);
    }
    j["rows"] = rows;

    ordered_json s;
    s["t"] = rep.pade.t;
    s["j"] = rep.pade.j;
    s["fitted_gap_exponent"] = fit_json(rep.gap_fit);
    if (rep.gap_fit_error) {
        s["gap_fit_error"] = *rep.gap_fit_error;
    }
    if (rep.den.undefined) {
        s["fitted_den_exponent"] = *rep.den.undefined;
    } else {
        s["fitted_den_exponent"] = fit_json(rep.den.fit);
    }
    s["C1"] = rep.c1.str();
    s["C1_assumed"] = rep.c1_assumed;
    s["C2"] = rep.c2.str();
    s["theta_max"] = rep.theta_max.str();
    s["verdict"] = to_string(rep.verdict);
    s["M_star"] = rep.m_star ? ordered_json(rep.m_star->get_str()) : ordered_json(nullptr);
    s["diagnostics"] = rep.diagnostics;
    j["summary"] = s;
    return j;
}

std::string report_to_csv(const GrowthReport &rep)
{
    std::ostringstream os;
    os << "M,f_lo,f_hi,R,gap_lo,gap_hi,den_f,theta_lo,theta_hi\n";
    for (const auto &r : rep.rows) {
        if (r.skipped) {
            os << r.M.get_str() << ",,,,,,,,\n";
            continue;
        }
        os << r.M.get_str() << ',' << r.f_bounds.lo() << ',' << r.f_bounds.hi() << ',' << r.R_val << ','
           << r.gap.lo() << ',' << r.gap.hi() << ',' << opt_str(r.den_f) << ',' << r.theta.lo() << ','
           << r.theta.hi() << '\n';
    }
    os << "# candidate=" << rep.candidate << '\n'
       << "# t=" << rep.pade.t << '\n'
       << "# j=" << rep.pade.j << '\n'
       << "# fitted_gap_exponent=" << fit_str(rep.gap_fit) << '\n'
       << "# fitted_den_exponent=" << (rep.den.undefined ? std::string("undefined") : fit_str(rep.den.fit)) << '\n'
       << "# C2=" << rep.c2 << '\n'
       << "# verdict=" << to_string(rep.verdict) << '\n'
       << "# M_star=" << (rep.m_star ? rep.m_star->get_str() : std::string("none")) << '\n';
    return os.str();
}

std::string approximants_to_csv(const ApproximantSeq &seq, const std::vector<OmegaRow> &omega)
{
    std::ostringstream os;
    os << "k,p_k,q_k,gap_lo,gap_hi,omega_lo,omega_hi\n";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto &r = seq.rows()[i];
        os << r.k << ',' << r.p.get_str() << ',' << r.q.get_str() << ',' << r.gap.lo() << ',' << r.gap.hi() << ','
           << format_double(omega[i].lo) << ',' << format_double(omega[i].hi) << '\n';
    }
    return os.str();
}

nlohmann::ordered_json approximants_to_json(const ApproximantSeq &seq, const std::vector<OmegaRow> &omega)
{
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto &r = seq.rows()[i];
        rows.push_back(ordered_json{{"k", r.k},
                                    {"p", r.p.get_str()},
                                    {"q", r.q.get_str()},
                                    {"gap", {r.gap.lo().str(), r.gap.hi().str()}},
                                    {"omega", {omega[i].lo, omega[i].hi}}});
    }
    return ordered_json{{"rows", rows}};
}

} // namespace padeq
