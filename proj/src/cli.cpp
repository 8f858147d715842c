#include "padeq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "padeq/candidate.hpp"
#include "padeq/errors.hpp"
#include "padeq/harness.hpp"
#include "padeq/io.hpp"
#include "padeq/liouville.hpp"
#include "padeq/pade.hpp"

namespace padeq::cli
{

namespace
{

namespace fs = std::filesystem;

struct RunConfig {
    std::string command;
    std::string input;
    std::string builtin;
    std::optional<std::size_t> t;
    long long m_min = 10;
    long long m_max = 10000;
    std::size_t m_points = 40;
    std::optional<unsigned long> eps_exp;
    std::size_t k_max = 5;
    std::string f_expr;
    std::string out_dir = ".";
    unsigned precision = 64;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read input file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path &path, const std::string &content)
{
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write output file " + path.string());
    }
    out << content;
    if (!out) {
        throw InputError("failed writing " + path.string());
    }
}

void require_source(const RunConfig &cfg)
{
    if (cfg.input.empty() == cfg.builtin.empty()) {
        throw InputError("exactly one of --input FILE or --builtin NAME is required");
    }
}

struct SeriesSource {
    CandidateFunction candidate;
    std::size_t t = 0;
};

SeriesSource load_source(const RunConfig &cfg)
{
    require_source(cfg);
    if (!cfg.input.empty()) {
        const SeriesInput in = parse_series_input(read_file(cfg.input));
        const auto t = cfg.t ? cfg.t : in.t;
        if (!t) {
            throw InputError("t missing: give \"t\" in the series file or --t");
        }
        require_coefficients(in, *t);
        return {from_truncation(fs::path(cfg.input).filename().string(), in.a0, in.coeffs), *t};
    }
    if (!cfg.t) {
        throw InputError("--t is required with --builtin");
    }
    try {
        return {builtin_candidate(cfg.builtin), *cfg.t};
    } catch (const ArgumentError &e) {
        throw InputError(e.what());
    }
}

int cmd_pade(const RunConfig &cfg, std::ostream &out)
{
    const SeriesSource src = load_source(cfg);
    const std::size_t t = src.t;
    const std::vector<Rational> a = src.candidate.coeffs(2 * t);
    const PadeApproximant pade = build_pade(std::span<const Rational>(a).subspan(1, 2 * t), t, a[0]);

    // Re-derive the order statement from the series of R.
    const TruncSeries rs = series_of_R(pade, pade.matched_order());
    for (std::size_t k = 1; k <= pade.matched_order(); ++k) {
        if (rs[k] != pade.F.coeff(k)) {
            throw ConstructionError("series of R differs from F at degree " + std::to_string(k) + "\n" +
                                    describe(pade));
        }
    }
    auto doc = pade_to_json(pade);
    const fs::path path = fs::path(cfg.out_dir) / "pade.json";
    write_file(path, doc.dump(2) + "\n");
    out << "Q = " << doc["Q"].get<std::string>() << "\n"
        << "P = " << doc["P"].get<std::string>() << "\n"
        << "S = " << doc["S"].get<std::string>() << "\n"
        << "j = " << pade.j << ", verified order 2t-j = " << pade.matched_order() << " ("
        << doc["order_note"].get<std::string>() << ")\n"
        << "wrote " << path.string() << "\n";
    return kOk;
}

int cmd_harness(const RunConfig &cfg, std::ostream &out)
{
    if (cfg.m_min < 2 || cfg.m_max < cfg.m_min) {
        throw InputError("M range must satisfy 2 <= --m-min <= --m-max");
    }
    const SeriesSource src = load_source(cfg);
    const std::vector<Integer> Ms = log_spaced(Integer(static_cast<long>(cfg.m_min)),
                                               Integer(static_cast<long>(cfg.m_max)), cfg.m_points);
    HarnessConfig hc;
    if (cfg.eps_exp) {
        hc.eps = eps_power(*cfg.eps_exp);
    }
    const GrowthReport rep = contradiction_report(src.candidate, src.t, Ms, hc);
    const fs::path json_path = fs::path(cfg.out_dir) / "harness.json";
    const fs::path csv_path = fs::path(cfg.out_dir) / "harness.csv";
    auto doc = report_to_json(rep);
    doc["config"] = {{"m_min", cfg.m_min},
                     {"m_max", cfg.m_max},
                     {"m_points", cfg.m_points},
                     {"eps_rule", "1/M^" + std::to_string(cfg.eps_exp ? *cfg.eps_exp : 4 * src.t + 4)}};
    write_file(json_path, doc.dump(2) + "\n");
    write_file(csv_path, report_to_csv(rep));
    out << "candidate " << rep.candidate << ", t = " << rep.pade.t << ", j = " << rep.pade.j << "\n";
    if (!rep.note.empty()) {
        out << "note: " << rep.note << "\n";
    }
    out << "verdict " << to_string(rep.verdict);
    if (rep.m_star) {
        out << " (M* = " << rep.m_star->get_str() << ")";
    }
    out << "\n";
    if (rep.gap_fit && !rep.gap_fit->equality_signal) {
        out << "gap exponent " << format_double(rep.gap_fit->slope) << " +/- "
            << format_double(rep.gap_fit->uncertainty) << "\n";
    }
    out << "wrote " << json_path.string() << ", " << csv_path.string() << "\n";
    return kOk;
}

void check_k_max(const RunConfig &cfg)
{
    if (cfg.k_max < 1 || cfg.k_max > kLiouvilleMaxK) {
        throw InputError("--k-max must be in 1.." + std::to_string(kLiouvilleMaxK));
    }
}

int cmd_liouville(const RunConfig &cfg, std::ostream &out)
{
    check_k_max(cfg);
    const ApproximantSeq seq = liouville_constant_seq(cfg.k_max);
    const auto omega = omega_sequence(seq, cfg.precision);
    write_file(fs::path(cfg.out_dir) / "liouville.csv", approximants_to_csv(seq, omega));
    write_file(fs::path(cfg.out_dir) / "liouville.json", approximants_to_json(seq, omega).dump(2) + "\n");
    for (const auto &w : omega) {
        out << "k = " << w.k << ": omega in [" << format_double(w.lo) << ", " << format_double(w.hi) << "]\n";
    }
    return kOk;
}

int cmd_maillet(const RunConfig &cfg, std::ostream &out)
{
    check_k_max(cfg);
    if (cfg.f_expr.empty()) {
        throw InputError("--f EXPR is required");
    }
    const RationalFunction f = parse_rational_function(cfg.f_expr);
    if (f.is_constant()) {
        throw InputError("non-constant rational function required, got " + cfg.f_expr);
    }
    const ApproximantSeq seq = liouville_constant_seq(cfg.k_max);
    // xi itself is only known through the tightest enclosure available.
    const auto &last = seq.rows().back();
    const Rational x_last(last.p, last.q);
    const RationalInterval xi_box(x_last + last.gap.lo(), x_last + last.gap.hi());
    const ApproximantSeq image = maillet_transform(f, seq, xi_box);
    const auto omega = omega_sequence(image, cfg.precision);
    write_file(fs::path(cfg.out_dir) / "maillet.csv", approximants_to_csv(image, omega));
    auto doc = approximants_to_json(image, omega);
    doc["f"] = f.str();
    write_file(fs::path(cfg.out_dir) / "maillet.json", doc.dump(2) + "\n");
    out << "f = " << f.str() << "\n";
    for (std::size_t i = 0; i < image.size(); ++i) {
        const auto &r = image.rows()[i];
        const std::string q = r.q.get_str();
        out << "k = " << r.k << ": den " << (q.size() > 24 ? q.substr(0, 8) + "...(" + std::to_string(q.size()) + " digits)" : q)
            << ", omega in [" << format_double(omega[i].lo) << ", " << format_double(omega[i].hi) << "]\n";
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact Hankel-system Pade approximants, growth harness and Liouville tools", "padeq"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_source = [&](CLI::App *sub) {
        sub->add_option("--input", cfg.input, "series file {\"t\", \"a0\", \"coeffs\"}");
        sub->add_option("--builtin", cfg.builtin, "exp_m1 | log1p | geom2z | poly:<expr>");
        sub->add_option("--t", cfg.t, "approximant degree bound t >= 1")->check(CLI::PositiveNumber);
    };
    const auto add_out = [&](CLI::App *sub) { sub->add_option("--out", cfg.out_dir, "output directory"); };

    auto *pade = app.add_subcommand("pade", "build the approximant P/Q from a_1..a_2t");
    add_source(pade);
    add_out(pade);

    auto *harness = app.add_subcommand("harness", "measure gaps, denominators and the bound collision");
    add_source(harness);
    add_out(harness);
    harness->add_option("--m-min", cfg.m_min, "smallest sampled M")->capture_default_str();
    harness->add_option("--m-max", cfg.m_max, "largest sampled M")->capture_default_str();
    harness->add_option("--m-points", cfg.m_points, "number of log-spaced samples")->capture_default_str();
    harness->add_option("--eps-exp", cfg.eps_exp, "error budget 1/M^e (default e = 4t+4)");

    auto *liou = app.add_subcommand("liouville", "approximants and omega_k of sum 10^{-i!}");
    liou->add_option("--k-max", cfg.k_max, "last k")->capture_default_str();
    liou->add_option("--precision", cfg.precision, "decimal digits for logarithms")->capture_default_str();
    add_out(liou);

    auto *mail = app.add_subcommand("maillet", "transport the approximants through a rational function");
    mail->add_option("--f", cfg.f_expr, "rational function of z, e.g. \"(z+1)/(z-2)\"");
    mail->add_option("--k-max", cfg.k_max, "last k")->capture_default_str();
    mail->add_option("--precision", cfg.precision, "decimal digits for logarithms")->capture_default_str();
    add_out(mail);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (pade->parsed()) {
            return cmd_pade(cfg, out);
        }
        if (harness->parsed()) {
            return cmd_harness(cfg, out);
        }
        if (liou->parsed()) {
            return cmd_liouville(cfg, out);
        }
        return cmd_maillet(cfg, out);
    } catch (const InputError &e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ArgumentError &e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const PoleError &e) {
        err << "domain error: " << e.what() << " (at " << e.where() << ")\n";
        return kDomainError;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

} // namespace padeq::cli
