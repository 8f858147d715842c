#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "padeq/cli.hpp"
#include "padeq/errors.hpp"
#include "padeq/io.hpp"

using namespace padeq;
namespace fs = std::filesystem;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir
{
public:
    TempDir()
    {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("padeq_cli_test_" + std::to_string(::getpid()) + "_" +
                                             std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path &path() const { return path_; }
    std::string str() const { return path_.string(); }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string &path, const std::string &text) { std::ofstream(path, std::ios::binary) << text; }

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> lines(const std::string &s)
{
    auto v = split(s, '\n');
    if (!v.empty() && v.back().empty()) {
        v.pop_back();
    }
    return v;
}

std::string summary_value(const std::string &csv, const std::string &key)
{
    for (const auto &l : lines(csv)) {
        const std::string prefix = "# " + key + "=";
        if (l.rfind(prefix, 0) == 0) {
            return l.substr(prefix.size());
        }
    }
    return "";
}

} // namespace

TEST_CASE("pade from a series file")
{
    TempDir dir;
    spit(dir.file("exp.json"), R"({"t": 1, "coeffs": ["1", "1/2"]})");
    const auto r = run({"pade", "--input", dir.file("exp.json"), "--out", dir.str()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("Q = 1 - 1/2 z") != std::string::npos);
    const auto doc = nlohmann::json::parse(slurp(dir.file("pade.json")));
    CHECK(doc["Q"] == "1 - 1/2 z");
    CHECK(doc["P"] == "z");
    CHECK(doc["S"] == "1/4");
    CHECK(doc["j"] == 0);
    CHECK(doc["verified_order"] == 2);
    CHECK(doc["order_note"] == "R - F = O(z^3)");
}

TEST_CASE("pade reproduces a polynomial exactly")
{
    TempDir dir;
    spit(dir.file("z.json"), R"({"t": 1, "coeffs": ["1", "0"]})");
    const auto r = run({"pade", "--input", dir.file("z.json"), "--out", dir.str()});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(slurp(dir.file("pade.json")));
    CHECK(doc["R"] == "z");
    CHECK(doc["order_note"] == "R ≡ F");
}

TEST_CASE("pade input errors")
{
    TempDir dir;
    spit(dir.file("short.json"), R"({"t": 2, "coeffs": ["1", "1/2", "1/6"]})");
    auto r = run({"pade", "--input", dir.file("short.json"), "--out", dir.str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("expected 4 coefficients") != std::string::npos);

    spit(dir.file("bad.json"), "{\"t\": 1,\n \"coeffs\": [\"1\", \"1/x\"]}");
    r = run({"pade", "--input", dir.file("bad.json"), "--out", dir.str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    spit(dir.file("broken.json"), "{\"t\": 1,\n  \"coeffs\": [\"1\" \"2\"]}");
    r = run({"pade", "--input", dir.file("broken.json"), "--out", dir.str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(r.err.find("column") != std::string::npos);

    r = run({"pade", "--input", dir.file("missing.json"), "--out", dir.str()});
    CHECK(r.code == 2);

    r = run({"pade", "--builtin", "exp_m1", "--input", dir.file("short.json"), "--t", "1"});
    CHECK(r.code == 2);

    r = run({"pade", "--builtin", "sinh", "--t", "1", "--out", dir.str()});
    CHECK(r.code == 2);

    r = run({"pade", "--builtin", "exp_m1", "--t", "0", "--out", dir.str()});
    CHECK(r.code == 2);

    r = run({"frobnicate"});
    CHECK(r.code == 2);
    r = run({});
    CHECK(r.code == 2);
}

TEST_CASE("help exits cleanly")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"harness", "--help"}).code == 0);
}

TEST_CASE("harness verdicts")
{
    TempDir dir;
    SUBCASE("e^z - 1")
    {
        const auto r = run({"harness", "--builtin", "exp_m1", "--t", "1", "--out", dir.str()});
        REQUIRE(r.code == 0);
        const auto csv = slurp(dir.file("harness.csv"));
        CHECK(summary_value(csv, "verdict") == "BoundCollision");
        CHECK(summary_value(csv, "M_star") != "none");
        CHECK(std::abs(std::stod(summary_value(csv, "fitted_gap_exponent")) + 3.0) < 0.05);
        const auto doc = nlohmann::json::parse(slurp(dir.file("harness.json")));
        CHECK(doc["summary"]["verdict"] == "BoundCollision");
    }
    SUBCASE("z + z^3")
    {
        const auto r = run({"harness", "--builtin", "poly:z + z^3", "--t", "1", "--out", dir.str()});
        REQUIRE(r.code == 0);
        CHECK(summary_value(slurp(dir.file("harness.csv")), "verdict") == "HypothesisViolated");
    }
    SUBCASE("2z/(1-z)")
    {
        const auto r = run({"harness", "--builtin", "geom2z", "--t", "2", "--out", dir.str()});
        REQUIRE(r.code == 0);
        CHECK(summary_value(slurp(dir.file("harness.csv")), "verdict") == "EqualityBranch");
    }
    SUBCASE("series file is treated as the truncated polynomial")
    {
        spit(dir.file("trunc.json"), R"({"t": 1, "coeffs": ["1", "1/2", "1/6"]})");
        const auto r = run({"harness", "--input", dir.file("trunc.json"), "--m-min", "10", "--m-max", "1000",
                            "--m-points", "12", "--out", dir.str()});
        REQUIRE(r.code == 0);
        const auto doc = nlohmann::json::parse(slurp(dir.file("harness.json")));
        CHECK(doc["header"].contains("note"));
    }
    SUBCASE("bad ranges")
    {
        CHECK(run({"harness", "--builtin", "exp_m1", "--t", "1", "--m-min", "1", "--out", dir.str()}).code == 2);
        CHECK(run({"harness", "--builtin", "exp_m1", "--t", "1", "--m-min", "50", "--m-max", "20", "--out",
                   dir.str()})
                  .code == 2);
    }
}

TEST_CASE("harness CSV fields round-trip")
{
    TempDir dir;
    REQUIRE(run({"harness", "--builtin", "poly:z + z^3", "--t", "1", "--m-points", "12", "--out", dir.str()}).code ==
            0);
    REQUIRE(run({"harness", "--builtin", "log1p", "--t", "2", "--m-points", "12", "--out", dir.str() + "/b"}).code ==
            0);
    for (const auto &path : {dir.file("harness.csv"), dir.file("b/harness.csv")}) {
        const auto ls = lines(slurp(path));
        REQUIRE(!ls.empty());
        CHECK(ls[0] == "M,f_lo,f_hi,R,gap_lo,gap_hi,den_f,theta_lo,theta_hi");
        int data = 0;
        for (std::size_t i = 1; i < ls.size(); ++i) {
            if (ls[i].rfind("#", 0) == 0) {
                continue;
            }
            ++data;
            const auto fields = split(ls[i], ',');
            REQUIRE(fields.size() == 9);
            for (const auto &f : fields) {
                if (f.empty()) {
                    continue;
                }
                const Rational v = Rational::parse(f);
                CHECK(v.str() == f);
            }
            const Rational lo = Rational::parse(fields[4]);
            const Rational hi = Rational::parse(fields[5]);
            CHECK(lo <= hi);
            CHECK(lo.sign() >= 0);
        }
        CHECK(data == 12);
    }
}

TEST_CASE("liouville table")
{
    TempDir dir;
    const auto r = run({"liouville", "--k-max", "3", "--out", dir.str()});
    REQUIRE(r.code == 0);
    const auto ls = lines(slurp(dir.file("liouville.csv")));
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "k,p_k,q_k,gap_lo,gap_hi,omega_lo,omega_hi");
    CHECK(ls[1].rfind("1,1,10,1/100,1/50,", 0) == 0);
    CHECK(ls[2].rfind("2,11,100,1/1000000,1/500000,", 0) == 0);
    CHECK(ls[3].rfind("3,110001,1000000,", 0) == 0);
    const auto f2 = split(ls[2], ',');
    CHECK(std::stod(f2[5]) >= 2.0);
    CHECK(std::stod(f2[6]) == 3.0);

    CHECK(run({"liouville", "--k-max", "9", "--out", dir.str()}).code == 2);
    CHECK(run({"liouville", "--k-max", "0", "--out", dir.str()}).code == 2);
}

TEST_CASE("maillet")
{
    TempDir dir;
    auto r = run({"maillet", "--f", "1/z", "--k-max", "3", "--out", dir.str()});
    REQUIRE(r.code == 0);
    const auto ls = lines(slurp(dir.file("maillet.csv")));
    REQUIRE(ls.size() >= 2);
    CHECK(ls[1].rfind("2,100,11,", 0) == 0);

    r = run({"maillet", "--f", "5", "--k-max", "3", "--out", dir.str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("non-constant rational function required") != std::string::npos);

    r = run({"maillet", "--f", "1/(100z - 11)", "--k-max", "3", "--out", dir.str()});
    CHECK(r.code == 3);

    r = run({"maillet", "--f", "z +", "--k-max", "3", "--out", dir.str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs")
{
    const std::vector<std::vector<std::string>> cmds = {
        {"pade", "--builtin", "log1p", "--t", "3"},
        {"harness", "--builtin", "exp_m1", "--t", "1"},
        {"harness", "--builtin", "poly:z + z^3", "--t", "1"},
        {"liouville", "--k-max", "5"},
        {"maillet", "--f", "(z+1)/(z-2)", "--k-max", "5"},
    };
    for (const auto &cmd : cmds) {
        TempDir a, b;
        auto ca = cmd;
        ca.insert(ca.end(), {"--out", a.str()});
        auto cb = cmd;
        cb.insert(cb.end(), {"--out", b.str()});
        REQUIRE(run(ca).code == 0);
        REQUIRE(run(cb).code == 0);
        int compared = 0;
        for (const auto &entry : fs::directory_iterator(a.path())) {
            const auto name = entry.path().filename().string();
            CHECK(slurp(entry.path().string()) == slurp(b.file(name)));
            ++compared;
        }
        CHECK(compared >= 1);
    }
}

TEST_CASE("format_double round-trips")
{
    for (double v : {0.1, 2.849485002168009, 3.0, 1e-300, -7.25, 1.0 / 3.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(3.0) == "3");
}
