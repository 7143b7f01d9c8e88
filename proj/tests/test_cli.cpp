#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "dc/cli_app.hpp"

using dc::cli::run_cli;
using json = nlohmann::json;

namespace {

std::pair<int, json> run(const std::vector<std::string>& args) {
    std::string out;
    int code = run_cli(args, out);
    if (!out.empty() && out[0] == '{') return {code, json::parse(out)};
    return {code, json{{"raw", out}}};
}

}  // namespace

TEST_CASE("fn command values") {
    auto [code, j] = run({"fn", "--name", "whittaker-k", "--beta", "0", "--m", "0.5", "--z", "1"});
    CHECK(code == 0);
    CHECK(std::abs(j["result"]["re"].get<double>() - 0.60653065971263342) < 1e-10);
    CHECK(std::abs(j["result"]["im"].get<double>()) < 1e-12);

    auto [code2, j2] = run({"fn", "--name", "gamma", "--z", "-2"});
    CHECK(code2 == 2);
    CHECK(j2.contains("error"));

    auto [code3, j3] = run({"fn", "--name", "trig-j", "--beta", "0", "--m", "0.5", "--z",
                            "3.14159265"});
    CHECK(code3 == 0);
    CHECK(std::abs(j3["result"]["re"].get<double>() - 2.0) < 1e-7);
}

TEST_CASE("fn verify mode") {
    auto [code, j] = run({"fn", "--name", "whittaker-k", "--beta", "0.3", "--m", "0.7", "--z", "1.2",
                          "--verify"});
    CHECK(code == 0);
    CHECK(j["residual"].get<double>() < 1e-8);
}

TEST_CASE("kernel CSV output and determinism") {
    std::vector<std::string> args = {"kernel", "--omega-re", "5", "--lambda-re", "4", "--mu-re", "3",
                                     "--k-im", "1", "--x-min", "0.5", "--x-max", "2", "--nx", "3",
                                     "--y-min", "0.5", "--y-max", "2", "--ny", "3"};
    std::string out1, out2;
    CHECK(run_cli(args, out1) == 0);
    CHECK(run_cli(args, out2) == 0);
    CHECK(out1 == out2);  // byte-identical
    CHECK(out1.rfind("x,y,g11_re,g11_im,g12_re,g12_im,g21_re,g21_im,g22_re,g22_im\n", 0) == 0);
    // 9 rows + header
    size_t lines = std::count(out1.begin(), out1.end(), '\n');
    CHECK(lines == 10);
}

TEST_CASE("kernel verify flags symmetry") {
    auto [code, j] = run({"kernel", "--omega-re", "5", "--lambda-re", "4", "--mu-re", "3", "--k-im",
                          "1", "--format", "json", "--verify", "--nx", "2", "--ny", "2"});
    CHECK(code == 0);
    CHECK(j["residual"].get<double>() < 1e-8);
}

TEST_CASE("kernel domain error exits 2") {
    auto [code, j] = run({"kernel", "--omega-re", "5", "--lambda-re", "4", "--mu-re", "3", "--k-re",
                          "1"});  // real k without boundary side is the + side; fine
    CHECK(code == 0);
    auto [code2, j2] = run({"kernel", "--omega-re", "1", "--lambda-re", "1", "--mu-re", "1",
                            "--k-im", "1"});
    CHECK(code2 == 2);  // off the quadric
}

TEST_CASE("classify command") {
    auto [code, j] = run({"classify", "--omega-re", "1", "--mu-re", "1"});
    CHECK(code == 0);
    CHECK(j["report"]["region"] == "A");
    CHECK(j["report"]["point_spectrum_dp"] == "empty");

    auto [code2, j2] = run({"classify", "--a-re", "1", "--b-re", "1", "--ray"});
    CHECK(code2 == 0);
    CHECK(j2["report"]["region"] == "D");
    CHECK(j2["report"]["homogeneous_extensions"] == "circle");

    auto [code3, j3] = run({"classify", "--omega-re", "0", "--lambda-re", "0.5", "--mu-im", "0.5"});
    CHECK(code3 == 0);
    CHECK(j3["report"]["region"] == "E");
    CHECK(j3["report"]["point_spectrum_dp"] == "C+");
}

TEST_CASE("eigs command") {
    // circle case with kappa = 1 may be empty; request verification residuals
    auto [code, j] = run({"eigs", "--omega-re", "0.4", "--lambda-re", "0.34641016151377546",
                          "--mu-re", "0.2", "--kappa-re", "0.5", "--kappa-im", "0.55", "--re-min",
                          "-3", "--re-max", "3", "--im-min", "-3", "--im-max", "3", "--verify"});
    CHECK((code == 0 || code == 3));
    CHECK(j["geometry"] == "circle");
    for (auto& e : j["eigenvalues"]) CHECK(e["residual"].get<double>() < 1e-6);
}

TEST_CASE("channels and scatter commands") {
    auto [code, j] = run({"channels", "--dim", "3", "--ell", "1"});
    CHECK(code == 0);
    CHECK(j["omegas"] == json::array({1.0, -1.0}));

    auto [code2, j2] = run({"scatter", "--omega-re", "5", "--lambda-re", "4", "--mu-re", "3",
                            "--eps", "1", "--verify"});
    CHECK(code2 == 0);
    double re = j2["amplitude"]["re"].get<double>(), im = j2["amplitude"]["im"].get<double>();
    CHECK(std::abs(std::hypot(re, im) - 1.0) < 1e-10);
}

TEST_CASE("density command with verification") {
    auto [code, j] = run({"density", "--omega-re", "5", "--lambda-re", "4", "--mu-re", "3", "--k",
                          "1", "--nx", "2", "--ny", "2", "--format", "json", "--verify"});
    CHECK(code == 0);
    CHECK(j["residual"].get<double>() < 1e-4);
}
