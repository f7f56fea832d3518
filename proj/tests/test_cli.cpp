#include "weiljac/cli.hpp"
#include "weiljac/expansions.hpp"
#include "weiljac/fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace weiljac;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "weiljac");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("weiljac_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("hecke-u reproduces the printed U_2 image") {
    const Run r = cli({"hecke-u", "--ell", "2", "--split", "1", "--in", "fixture:E3_A2_dual"});
    REQUIRE(r.code == 0);
    const VVExpansion got = deserialize_vv(r.out);
    const VVExpansion printed = std::get<VVExpansion>(load_fixture("U2_E3_A2"));
    CHECK(got.group->gram() == printed.group->gram());
    CHECK(vv_agree(got, printed));
}

TEST_CASE("borcherds-table prints canonical rows") {
    const Run r = cli({"borcherds-table", "--m", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 | 4 | 8e(0,0) + q^(-1/4)(e(1/2,0) + e(0,1/2))\n");
    const Run two = cli({"borcherds-table", "--m", "17"});
    CHECK(std::count(two.out.begin(), two.out.end(), '\n') == 2);
    // the reference rows for m = 1 agree with the computation
    CHECK(cli({"borcherds-table", "--golden", "--m", "1"}).out == r.out);
}

TEST_CASE("exit codes") {
    CHECK(cli({"check", "--in", "bogus.json"}).code == 2);
    CHECK(cli({"check", "--in", "{\"kind\":\"vvform\"}"}).code == 2);
    CHECK(cli({"hecke-u", "--ell", "2"}).code == 2);
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({"weil", "--gram", "[[2]]", "--word", "SX"}).code == 2);
    // 7 has no primitive representation as a sum of three squares
    const Run seven = cli({"borcherds-table", "--m", "7"});
    CHECK(seven.code == 1);
    CHECK_FALSE(seven.err.empty());
    CHECK(cli({"discriminant", "--gram", "[[2,1],[1,2]]"}).code == 0);
    // an odd diagonal is rejected while reading the input
    CHECK(cli({"discriminant", "--gram", "[[1]]"}).code == 2);
    CHECK(cli({"hecke-u", "--ell", "2", "--split", "5", "--in", "fixture:E3_A2_dual"}).code == 1);
    CHECK(cli({"fixtures", "--name", "nope"}).code == 1);
}

TEST_CASE("outputs are deterministic") {
    const std::vector<std::vector<std::string>> cmds = {
        {"theta-decompose", "--split", "1", "--in", "fixture:E3_A2_dual"},
        {"borcherds-scan", "--max-m", "6"},
        {"weil", "--gram", "[[2,1],[1,2]]", "--word", "STtS"},
        {"discriminant", "--gram", "[[2,1],[1,2]]"},
    };
    for (const auto& c : cmds) {
        const Run a = cli(c), b = cli(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("pipelines compose through files") {
    const auto phi = scratch("phi.json"), back = scratch("back.json");
    REQUIRE(cli({"theta-decompose", "--split", "1", "--in", "fixture:E3_A2_dual", "--out", phi.string()}).code == 0);
    REQUIRE(cli({"theta-compose", "--in", phi.string(), "--out", back.string()}).code == 0);
    const VVExpansion f = std::get<VVExpansion>(load_fixture("E3_A2_dual"));
    const VVExpansion composed = deserialize_vv(slurp(back));
    CHECK(vv_equal(composed, f.truncated(composed.prec)));

    const auto spec = scratch("spec.json");
    REQUIRE(cli({"specialize", "--in", phi.string(), "--out", spec.string()}).code == 0);
    const Run scal = cli({"kohnen", "scalarize", "--in", spec.string()});
    REQUIRE(scal.code == 0);
    const ScalarQSeries s = deserialize_scalar(scal.out);
    CHECK(s.coeff(Rational(3)) == Rational(56));
    CHECK(s.coeff(Rational(4)) == Rational(126));

    const Run u = cli({"hecke-u-jacobi", "--ell", "2", "--in", phi.string()});
    CHECK(u.code == 0);
    CHECK(deserialize_jacobi(u.out).index.m(0, 0) == Rational(3));
    for (const auto& p : {phi, back, spec}) std::filesystem::remove(p);
}

TEST_CASE("kohnen bridges") {
    const Run plus = cli({"kohnen", "to-level3", "--weight", "5/2", "--in", "fixture:cohen_5_2"});
    REQUIRE(plus.code == 0);
    const ScalarQSeries a = deserialize_scalar(plus.out);
    CHECK(a.coeff(Rational(1)) == Rational(-18));
    CHECK(a.coeff(Rational(3)) == Rational(-90));
    CHECK(a.coeff(Rational(4)) == Rational(-234));
    CHECK(cli({"kohnen", "to-level3", "--weight", "3", "--in", "fixture:cohen_5_2"}).code == 1);

    const Run scal = cli({"kohnen", "scalarize", "--in", "fixture:E3_A2_dual"});
    REQUIRE(scal.code == 0);
    const auto tmp = scratch("scal.json");
    std::ofstream(tmp) << scal.out;
    const Run m = cli({"kohnen", "to-plus", "--weight", "3", "--in", tmp.string()});
    REQUIRE(m.code == 0);
    const ScalarQSeries b = deserialize_scalar(m.out);
    CHECK(b.coeff(Rational(3)) == Rational(56));
    CHECK(b.coeff(Rational(7)) == Rational(576));
    std::filesystem::remove(tmp);
}

TEST_CASE("check") {
    const Run ok = cli({"check", "--in", "fixture:E3_A2_dual"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"symmetry\": \"symmetric\"") != std::string::npos);
    // the printed fixture stops at q^4: too short for the numeric tolerance, and the report says why
    const Run num = cli({"check", "--in", "fixture:E3_A2_dual", "--numeric", "--tol", "1e-6"});
    CHECK(num.code == 1);
    CHECK(num.out.find("\"tail\"") != std::string::npos);
    const auto ext = scratch("ext.json");
    std::ofstream(ext) << serialize(e3_a2_extended(Rational(20)));
    CHECK(cli({"check", "--in", ext.string(), "--numeric"}).code == 0);
    const auto jac = scratch("jac.json");
    REQUIRE(cli({"theta-decompose", "--split", "1", "--in", ext.string(), "--out", jac.string()}).code == 0);
    CHECK(cli({"check", "--in", jac.string(), "--numeric"}).code == 0);
    std::filesystem::remove(ext);
    std::filesystem::remove(jac);
}

TEST_CASE("fixtures and representations") {
    const Run list = cli({"fixtures"});
    CHECK(list.out.find("E3_A2_dual\n") != std::string::npos);
    CHECK(cli({"fixtures", "--name", "theta_A2"}).out == fixture_text("theta_A2").substr(0, fixture_text("theta_A2").find_last_not_of('\n') + 1) + "\n");
    // (ST)^3 = S^2 in Mp2(Z)
    for (const char* g : {"[[2]]", "[[2,1],[1,2]]", "[[-2,-1],[-1,-4]]"}) {
        const Run s2 = cli({"weil", "--gram", g, "--word", "SS"});
        const Run st = cli({"weil", "--gram", g, "--word", "STSTST"});
        REQUIRE(s2.code == 0);
        CHECK(nlohmann::json::parse(s2.out)["matrix"] == nlohmann::json::parse(st.out)["matrix"]);
    }
    const Run sigma = cli({"sigma", "--gram", "[[2]]", "--b", "[[\"1/2\"]]", "--lambda", "[1]", "--mu", "[0]"});
    CHECK(sigma.code == 0);
    CHECK(sigma.out.find("\"matrix\"") != std::string::npos);
    CHECK(cli({"theta-series", "--gram", "[[2]]", "--prec", "5"}).code == 0);
}
